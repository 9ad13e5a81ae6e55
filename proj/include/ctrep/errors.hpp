#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctrep {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a byte offset into the
/// offending text when one is known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}
    explicit ParseError(const std::string& what)
        : Error(what), position_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called outside its documented domain
/// (negative valuation where V is required, non-commuting pair, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A generator list carries a non-trivial integer relation.
class DependentGeneratorsError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The offset of a coset already lies in the subgroup.
class CosetMembershipError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Arithmetic that has no answer: division by zero, mixed domain tags,
/// mismatched matrix sizes.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace ctrep
