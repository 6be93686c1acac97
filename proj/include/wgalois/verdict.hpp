#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace wgalois {

/// Outcome of an exhaustive law check: ok, or the first violated law with a
/// witness description.
class Verdict {
public:
    static Verdict pass() { return Verdict(); }
    static Verdict fail(std::string law, std::string witness) {
        Verdict v;
        v.law_ = std::move(law);
        v.witness_ = std::move(witness);
        v.ok_ = false;
        return v;
    }

    bool ok() const { return ok_; }
    explicit operator bool() const { return ok_; }
    const std::string& law() const { return law_; }
    const std::string& witness() const { return witness_; }

    std::string describe() const { return ok_ ? std::string("ok") : law_ + ": " + witness_; }

private:
    bool ok_ = true;
    std::string law_;
    std::string witness_;
};

/// Raised when two independent computations that must agree do not. By
/// construction this indicates a library bug, never bad input.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when an operation's precondition on its mathematical input fails
/// (an unverified structure, a subring that is not unital, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace wgalois
