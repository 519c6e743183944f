#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using polyspace::IndexSet;
using polyspace::Rational;

bool gale_leq(const IndexSet& s, const IndexSet& t) {
  std::vector<int> a = s.descending();
  std::vector<int> b = t.descending();
  if (a.size() > b.size()) return false;
  std::sort(b.begin(), b.end());
  // Try every ordered choice of |a| distinct elements of b.
  std::vector<int> idx(b.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] <= b[static_cast<std::size_t>(idx[i])];
    if (ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

bool is_generic(const std::vector<Rational>& sides) {
  const std::size_t n = sides.size();
  Rational total = 0;
  for (const auto& x : sides) total += x;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) s += sides[i];
    }
    if (s * 2 == total) return false;
  }
  return true;
}

std::set<std::uint64_t> gee_masks(const std::vector<Rational>& sides) {
  const int n = static_cast<int>(sides.size());
  Rational total = 0;
  for (const auto& x : sides) total += x;
  std::vector<IndexSet> shorts;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
    Rational s = sides.back();
    for (int i = 0; i < n - 1; ++i) {
      if ((m >> i) & 1U) s += sides[static_cast<std::size_t>(i)];
    }
    if (s * 2 < total) shorts.push_back(IndexSet::from_mask(m << 1));
  }
  std::set<std::uint64_t> out;
  for (const auto& t : shorts) {
    const bool maximal = std::none_of(shorts.begin(), shorts.end(),
                                      [&](const IndexSet& u) { return !(u == t) && oracle::gale_leq(t, u); });
    if (maximal) out.insert(t.mask());
  }
  return out;
}

std::set<std::uint64_t> subgee_masks(const polyspace::GeneticCode& code) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (code.n - 1)); ++m) {
    const auto t = IndexSet::from_mask(m << 1);
    for (const auto& g : code.gees) {
      if (oracle::gale_leq(t, g)) {
        out.insert(t.mask());
        break;
      }
    }
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < width; ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        for (std::size_t k = 0; k < width; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

void add_if_generic(std::vector<Rational> sides, std::set<std::vector<std::uint64_t>>& out) {
  std::sort(sides.begin(), sides.end());
  if (!is_generic(sides)) return;
  const auto masks = gee_masks(sides);
  if (masks.empty()) return;
  out.insert(std::vector<std::uint64_t>(masks.begin(), masks.end()));
}

void multisets(int n, int max_value, std::vector<int>& current, std::set<std::vector<std::uint64_t>>& out) {
  if (static_cast<int>(current.size()) == n) {
    std::vector<Rational> v(current.begin(), current.end());
    add_if_generic(v, out);
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> w;
      for (int i = 0; i < n; ++i) w.emplace_back(3 * current[static_cast<std::size_t>(i)] + (i == j ? 1 : 0));
      add_if_generic(w, out);
    }
    return;
  }
  const int start = current.empty() ? 1 : current.back();
  for (int x = start; x <= max_value; ++x) {
    current.push_back(x);
    multisets(n, max_value, current, out);
    current.pop_back();
  }
}

}  // namespace

std::set<std::vector<std::uint64_t>> sweep_codes(int n) {
  std::set<std::vector<std::uint64_t>> out;
  std::vector<int> current;
  multisets(n, 2 * n, current, out);
  return out;
}

std::vector<std::uint64_t> code_key(const polyspace::GeneticCode& code) {
  std::vector<std::uint64_t> key;
  for (const auto& g : code.gees) key.push_back(g.mask());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace oracle
