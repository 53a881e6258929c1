#pragma once

#include <stdexcept>
#include <string>

namespace sconv {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error("argument", what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

class DegenerateCombinationError : public Error {
public:
    explicit DegenerateCombinationError(const std::string& what)
        : Error("degenerate-combination", what) {}
};

/// Raised when an operation that needs a convex gauge is asked to run on a
/// non-convex one.
class GatedFeatureError : public Error {
public:
    explicit GatedFeatureError(const std::string& what) : Error("gated-feature", what) {}
};

/// A result that should be impossible if the library is correct.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what)
        : Error("internal-inconsistency", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

}  // namespace sconv
