#pragma once

#include <stdexcept>
#include <string>

namespace vca {

// Base class for all library errors. Every failure mode the library can
// report derives from this, so callers may catch either the precise type
// or the whole family.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Relation input contains a directed cycle, so no partial order exists.
class CycleError : public Error {
public:
    explicit CycleError(const std::string& what) : Error(what) {}
};

// An element index is outside [1, n] (external) or [0, n) (internal).
class IndexError : public Error {
public:
    explicit IndexError(const std::string& what) : Error(what) {}
};

// A requested computation exceeds a configured size cap (e.g. poset too
// large to enumerate its ideal lattice).
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& what) : Error(what) {}
};

// A vertex subset fails the downward-closure property required of an
// order ideal.
class NotAnIdealError : public Error {
public:
    explicit NotAnIdealError(const std::string& what) : Error(what) {}
};

// A vertex cover is not minimal (some vertex can be dropped).
class NotMinimalError : public Error {
public:
    explicit NotMinimalError(const std::string& what) : Error(what) {}
};

// An argument is outside the mathematical domain of the function
// (e.g. a negative degree, or a coefficient index past the last one).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Two independently computed views of the same object disagree, or an
// input is internally contradictory.
class InconsistentInputError : public Error {
public:
    explicit InconsistentInputError(const std::string& what) : Error(what) {}
};

} // namespace vca
