#ifndef SLALG_ERRORS_HPP
#define SLALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 0-based character position.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// A point outside the semigroup's domain, or an interval/table violating
// a structural invariant.
struct DomainError : Error {
    using Error::Error;
};

// A parsed weight that fails the weight condition; names the first
// violating point when one was found.
struct ValidityError : Error {
    using Error::Error;
};

// Exact and float pipelines may not be mixed.
struct ModeError : Error {
    using Error::Error;
};

// A stated hypothesis of an operation failed (named clause in the message).
struct PreconditionError : Error {
    using Error::Error;
};

// The expression falls outside the eventually-monotone fragment, or a
// certified comparison could not be decided.
struct UndecidableError : Error {
    using Error::Error;
};

} // namespace slalg

#endif
