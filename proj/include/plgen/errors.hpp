#ifndef PLGEN_ERRORS_HPP
#define PLGEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plgen {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A byte stream does not match its declared container format.
/// `field()` names the first offending field (e.g. "magic", "score").
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what, std::string field = {})
        : Error(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Text input is not syntactically valid; `byte_offset()` points at the
/// position the parser gave up.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what), byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Well-formed input violates a domain invariant (degenerate box,
/// duplicate image id, out-of-range label, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two rasters that must share dimensions do not.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Synthetic scene generation could not satisfy its constraints.
class GenerationError : public Error {
public:
    using Error::Error;
};

} // namespace plgen

#endif
