#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semihopf {

struct Witness {
    std::string law;
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    bool pass = true;
    long checked_bound = 0;
    uint64_t cases_checked = 0;
    std::vector<Witness> witnesses;
    std::optional<uint64_t> seed;
    std::string note;

    void fail(Witness w) {
        pass = false;
        witnesses.push_back(std::move(w));
    }
    void merge(const CheckReport& other);
    std::string summary(const std::string& title = "") const;
};

}  // namespace semihopf
