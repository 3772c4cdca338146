#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. Positions are 0-based offsets into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A family of basic sets that is not a finite disjoint cover of C.
class InvalidCover : public Error {
public:
    using Error::Error;
};

// Operation requires a nonempty group element.
class EmptyElement : public Error {
public:
    using Error::Error;
};

// Operation is defined only on elements of odd cardinality.
class EvenCardinality : public Error {
public:
    using Error::Error;
};

// A requested depth is too small for the operation to be meaningful.
class DepthTooSmall : public Error {
public:
    using Error::Error;
};

// Input basic sets overlap where disjointness is required.
class NotDisjoint : public Error {
public:
    using Error::Error;
};

// The given basic set does not contain the retraction point.
class NotNeighborhood : public Error {
public:
    using Error::Error;
};

// No part of the cover meets the element in an odd number of points.
class NoOddPart : public Error {
public:
    using Error::Error;
};

}  // namespace cantor
