#pragma once

#include <string>
#include <vector>

namespace wgalois {

enum class Outcome { pass, fail, sampled };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass:
            return "pass";
        case Outcome::fail:
            return "fail";
        case Outcome::sampled:
            return "sampled";
    }
    return "?";
}

/// One line of a report: what was checked, the displayed formula it checks,
/// the outcome and a witness (empty on plain passes).
struct Check {
    std::string name;
    std::string anchor;
    Outcome outcome = Outcome::pass;
    std::string witness;
};

inline Check check_of(std::string name, std::string anchor, bool ok, std::string witness = {}) {
    return {std::move(name), std::move(anchor), ok ? Outcome::pass : Outcome::fail, std::move(witness)};
}

}  // namespace wgalois
