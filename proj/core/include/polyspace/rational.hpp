#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyspace {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (length lists, code strings, catalog lines).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A length vector admits a subset whose sum equals that of its complement.
class NonGenericError : public Error {
 public:
  using Error::Error;
};

/// A violated internal postcondition; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "a", "-a", "a/b" with optional surrounding whitespace. The result
/// is canonicalized; a zero denominator is a ParseError.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

}  // namespace polyspace
