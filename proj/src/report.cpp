#include "semihopf/report.hpp"

#include <sstream>

namespace semihopf {

void CheckReport::merge(const CheckReport& other) {
    pass = pass && other.pass;
    checked_bound = std::max(checked_bound, other.checked_bound);
    cases_checked += other.cases_checked;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    if (!seed && other.seed) seed = other.seed;
    if (!other.note.empty()) {
        if (!note.empty()) note += "; ";
        note += other.note;
    }
}

std::string CheckReport::summary(const std::string& title) const {
    std::ostringstream os;
    if (!title.empty()) os << title << ": ";
    os << (pass ? "pass" : "FAIL") << " (bound " << checked_bound << ", " << cases_checked
       << " cases";
    if (seed) os << ", seed " << *seed;
    os << ")";
    if (!note.empty()) os << " [" << note << "]";
    for (const auto& w : witnesses) {
        os << "\n  witness " << w.law << " at " << w.input << "\n    lhs = " << w.lhs
           << "\n    rhs = " << w.rhs;
    }
    return os.str();
}

}  // namespace semihopf
