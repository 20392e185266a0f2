#pragma once

#include <string>
#include <variant>

#include "semihopf/automata.hpp"
#include "semihopf/doi_koppinen.hpp"
#include "semihopf/structures.hpp"

namespace semihopf::io {

struct ParsedFile {
    std::variant<StructureDesc, dk::DKDatum, automata::LinearAutomaton> value;
    std::string name;
    long degree = 4;  // degree bound suggested by the file, if any
};

// Single JSON document; see README for the schema.
ParsedFile parse_structure_file(const std::string& text);
ParsedFile load_structure_file(const std::string& path);

// Emits a structure as a parseable document: explicit tables for finite
// carriers, an example reference otherwise.
std::string emit_structure(const StructureDesc& s, const std::string& name, long degree);
std::string emit_example_reference(const std::string& example_name,
                                   const std::map<std::string, std::string>& params,
                                   long degree);

std::string report_to_json(const std::string& check_name, const CheckReport& r);

}  // namespace semihopf::io
