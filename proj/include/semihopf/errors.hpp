#pragma once

#include <stdexcept>
#include <string>

namespace semihopf {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or missing construction parameter.
struct parameter_error : error {
    using error::error;
};

// Mixing values from different semirings or incompatible basis kinds.
struct type_error : error {
    using error::error;
};

// A linear map was asked for a basis element outside its domain.
struct basis_domain_error : error {
    explicit basis_domain_error(const std::string& basis_label)
        : error("structure map undefined on basis element " + basis_label),
          basis(basis_label) {}
    std::string basis;
};

// An enumeration or search would exceed its budget.
struct size_error : error {
    size_error(const std::string& what, unsigned long long required_)
        : error(what), required(required_) {}
    unsigned long long required;
};

// Descriptor/operation mismatch (wrong kind, missing quotient equality, ...).
struct config_error : error {
    using error::error;
};

// Operation is undefined for the given instance (infinite carrier, non-free quotient, ...).
struct unsupported_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& what, int line_ = -1, int col_ = -1)
        : error(what), line(line_), col(col_) {}
    int line;
    int col;
};

}  // namespace semihopf
