/*
 * errors.hpp
 * ----------
 * Exception hierarchy for the toolkit. Every error the library can raise
 * derives from lca::Error so callers can catch one base type; the concrete
 * classes mirror the distinct failure modes of the kernel (evaluation at a
 * pole, incomplete assignments), the algebra layer (unknown generators,
 * undeclared parameter symbols), the catalog (invalid family parameters,
 * stale refutation witnesses) and variable renaming.
 *
 * Parse errors for the .lsca text format live in dsl.hpp (they carry a
 * source span and an expected-token set).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lca {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A polynomial mentions a parameter symbol outside the declared universe
/// of the structure that owns it.
class SymbolUniverseError : public Error {
public:
    using Error::Error;
};

/// fp_eval / Scalar::eval called with an assignment that misses a symbol
/// occurring in the value.
class IncompleteAssignmentError : public Error {
public:
    using Error::Error;
};

/// A Scalar denominator vanished under an evaluation assignment.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Variable rename would clash with a variable still occurring in the value.
class RenameError : public Error {
public:
    using Error::Error;
};

/// A module element refers to a generator the algebra does not have.
class UnknownGeneratorError : public Error {
public:
    using Error::Error;
};

/// Two algebras that must share generators (compatibility checks) do not.
class GeneratorMismatchError : public Error {
public:
    using Error::Error;
};

/// make_family called with parameters violating the family's validity
/// constraints (e.g. a nonvanishing condition set to zero).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// Unknown family id or other catalog lookup failure.
class CatalogError : public Error {
public:
    using Error::Error;
};

/// A refutation witness evaluated to zero or to a value different from the
/// frozen expectation; the negative claim it certifies is no longer backed.
class StaleWitnessError : public Error {
public:
    using Error::Error;
};

} // namespace lca
