#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyspace/gale.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

/// Side lengths of an n-gon, n >= 3, all strictly positive. Values are kept
/// sorted ascending; position i (1-based) in sorted order is side i of the
/// canonical indexing, and original_index(i) recovers the input position.
class LengthVector {
 public:
  /// Throws std::invalid_argument if fewer than 3 values or any value <= 0.
  explicit LengthVector(std::vector<Rational> values);

  std::size_t size() const { return sorted_.size(); }
  int n() const { return static_cast<int>(sorted_.size()); }
  /// Sorted ascending.
  const std::vector<Rational>& values() const { return sorted_; }
  /// 1-based canonical side i.
  const Rational& side(int i) const { return sorted_.at(static_cast<std::size_t>(i - 1)); }
  /// 0-based input position of canonical side i (1-based).
  std::size_t original_index(int i) const { return perm_.at(static_cast<std::size_t>(i - 1)); }
  /// The values in the order they were supplied.
  std::vector<Rational> original_order() const;
  Rational total() const;

  /// The sides rescaled to a primitive integer vector (same ratios).
  std::vector<BigInt> integer_sides() const;

  friend bool operator==(const LengthVector& a, const LengthVector& b) { return a.sorted_ == b.sorted_; }

 private:
  std::vector<Rational> sorted_;
  std::vector<std::size_t> perm_;
};

/// Comma-separated rational literals; whitespace ignored. Throws ParseError.
LengthVector parse_lengths(std::string_view text);
std::string format_lengths(const LengthVector& lengths);

/// No subset of the sides sums to exactly half the total.
bool is_generic(const LengthVector& lengths);

/// Sides in `s` (canonical 1-based indices in [1, n]) sum to less than the
/// rest. Throws NonGenericError on a tie and std::invalid_argument for an
/// index above n.
bool is_short(const LengthVector& lengths, const IndexSet& s);

/// The genetic code under canonical (ascending) indexing: maximal
/// T in [n-1] with T+{n} short. Returns n:[] when {n} alone is long.
/// Throws NonGenericError for non-generic input.
GeneticCode derive_genetic_code(const LengthVector& lengths);

/// torus(n) = (e^{n-3},1,1,1), klein(n) = (e^{n-4},1,1,1,2) and
/// special(n) = (e^{n-5},1,1,1,2,2) with k small sides each 1/(2k).
/// Genericity and the expected code are checked on construction; a failure
/// there raises InternalError. Small n throws std::invalid_argument.
LengthVector family_vector(Family family, int n);

}  // namespace polyspace
