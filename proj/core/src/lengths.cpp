#include "polyspace/lengths.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace polyspace {

LengthVector::LengthVector(std::vector<Rational> values) {
  if (values.size() < 3) throw std::invalid_argument("a polygon needs at least 3 sides");
  if (values.size() > static_cast<std::size_t>(IndexSet::kMaxMember)) {
    throw std::invalid_argument("too many sides");
  }
  for (auto& v : values) {
    v.canonicalize();
    if (sgn(v) <= 0) throw std::invalid_argument("side lengths must be positive, got " + to_string(v));
  }
  perm_.resize(values.size());
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  std::stable_sort(perm_.begin(), perm_.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  sorted_.reserve(values.size());
  for (auto i : perm_) sorted_.push_back(values[i]);
}

std::vector<Rational> LengthVector::original_order() const {
  std::vector<Rational> out(sorted_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out[perm_[i]] = sorted_[i];
  return out;
}

Rational LengthVector::total() const {
  Rational sum = 0;
  for (const auto& v : sorted_) sum += v;
  return sum;
}

std::vector<BigInt> LengthVector::integer_sides() const {
  BigInt den = 1;
  for (const auto& v : sorted_) den = lcm(den, BigInt(v.get_den()));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& v : sorted_) {
    out.emplace_back(v.get_num() * (den / v.get_den()));
    g = gcd(g, out.back());
  }
  for (auto& x : out) x /= g;
  return out;
}

LengthVector parse_lengths(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  try {
    return LengthVector(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_lengths(const LengthVector& lengths) {
  std::string out;
  for (const auto& v : lengths.values()) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

namespace {

// Integer sides, in int64 when the total leaves headroom.
struct ScaledSides {
  std::vector<BigInt> big;
  std::vector<std::int64_t> small;
  bool fits = false;
};

ScaledSides scale(const LengthVector& lengths) {
  ScaledSides out;
  out.big = lengths.integer_sides();
  BigInt total = 0;
  for (const auto& x : out.big) total += x;
  out.fits = total < BigInt(std::int64_t{1} << 61) && total.fits_slong_p();
  if (out.fits) {
    for (const auto& x : out.big) out.small.push_back(x.get_si());
  }
  return out;
}

template <class Int>
std::vector<Int> subset_sums(const std::vector<Int>& xs, std::size_t begin, std::size_t end) {
  std::vector<Int> sums{Int(0)};
  for (std::size_t i = begin; i < end; ++i) {
    const std::size_t k = sums.size();
    for (std::size_t j = 0; j < k; ++j) sums.push_back(sums[j] + xs[i]);
  }
  return sums;
}

// Meet in the middle: does any subset sum to total/2?
template <class Int>
bool has_half_split(const std::vector<Int>& xs) {
  Int total = 0;
  for (const auto& x : xs) total += x;
  if (total % 2 != 0) return false;
  const Int half = total / 2;
  const std::size_t mid = xs.size() / 2;
  auto left = subset_sums(xs, 0, mid);
  std::sort(left.begin(), left.end());
  for (const auto& s : subset_sums(xs, mid, xs.size())) {
    const Int need = half - s;
    if (std::binary_search(left.begin(), left.end(), need)) return true;
  }
  return false;
}

template <class Int>
int compare_split(const std::vector<Int>& xs, std::uint64_t mask) {
  Int in = 0;
  Int out = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if ((mask >> (i + 1)) & 1U) {
      in += xs[i];
    } else {
      out += xs[i];
    }
  }
  return in < out ? -1 : (in > out ? 1 : 0);
}

template <class Int>
GeneticCode derive_code(const std::vector<Int>& xs) {
  const int n = static_cast<int>(xs.size());
  const std::uint64_t top = std::uint64_t{1} << n;
  auto short_with_n = [&](const IndexSet& t) {
    const int c = compare_split(xs, t.mask() | top);
    if (c == 0) throw NonGenericError("length vector is not generic");
    return c < 0;
  };
  if (!short_with_n(IndexSet{})) return GeneticCode{n, {}};
  std::unordered_set<std::uint64_t> subgees{0};
  std::vector<IndexSet> stack{IndexSet{}};
  std::vector<IndexSet> gees;
  while (!stack.empty()) {
    const IndexSet t = stack.back();
    stack.pop_back();
    bool maximal = true;
    for (const auto& up : gale_covers_above(t, n - 1)) {
      if (subgees.count(up.mask()) != 0) {
        maximal = false;
        continue;
      }
      if (short_with_n(up)) {
        maximal = false;
        subgees.insert(up.mask());
        stack.push_back(up);
      }
    }
    if (maximal) gees.push_back(t);
  }
  return canonicalize(std::move(gees), n);
}

}  // namespace

bool is_generic(const LengthVector& lengths) {
  const auto sides = scale(lengths);
  return sides.fits ? !has_half_split(sides.small) : !has_half_split(sides.big);
}

bool is_short(const LengthVector& lengths, const IndexSet& s) {
  if (s.max() > lengths.n()) {
    throw std::invalid_argument("side index " + std::to_string(s.max()) + " exceeds n");
  }
  const auto sides = scale(lengths);
  const int c = sides.fits ? compare_split(sides.small, s.mask()) : compare_split(sides.big, s.mask());
  if (c == 0) throw NonGenericError("subset sum equals its complement; length vector not generic");
  return c < 0;
}

GeneticCode derive_genetic_code(const LengthVector& lengths) {
  const auto sides = scale(lengths);
  const bool generic = sides.fits ? !has_half_split(sides.small) : !has_half_split(sides.big);
  if (!generic) throw NonGenericError("length vector " + format_lengths(lengths) + " is not generic");
  return sides.fits ? derive_code(sides.small) : derive_code(sides.big);
}

LengthVector family_vector(Family family, int n) {
  const int minimum = family == Family::Torus ? 4 : (family == Family::Klein ? 5 : 6);
  if (n < minimum) {
    throw std::invalid_argument(std::string(family_name(family)) + " vector needs n >= " +
                                std::to_string(minimum));
  }
  const int big = family == Family::Torus ? 3 : (family == Family::Klein ? 4 : 5);
  const int k = n - big;
  std::vector<Rational> values(static_cast<std::size_t>(k), Rational(1, 2 * k));
  for (int i = 0; i < 3; ++i) values.emplace_back(1);
  for (int i = 3; i < big; ++i) values.emplace_back(2);
  LengthVector lengths(std::move(values));
  if (!is_generic(lengths)) {
    throw InternalError(std::string(family_name(family)) + " vector is not generic");
  }
  if (derive_genetic_code(lengths) != family_code(family, n)) {
    throw InternalError(std::string(family_name(family)) + " vector has an unexpected code");
  }
  return lengths;
}

}  // namespace polyspace
