#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Malformed presentation, word or representation document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generator images that do not satisfy the relators (or the det invariant).
class InvalidRepresentation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain, e.g. a sigma-function whose
/// product is not a product of squares.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace charvar
