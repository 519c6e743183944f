#include "polyspace/gale.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace polyspace {

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int i : members) *this = with(i);
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  if (mask & 1U) throw std::invalid_argument("IndexSet members must be positive");
  return IndexSet(mask);
}

IndexSet IndexSet::interval(int k) {
  if (k < 0 || k > kMaxMember) throw std::invalid_argument("IndexSet interval out of range");
  if (k == 0) return {};
  const std::uint64_t ones = k == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (k + 1)) - 1);
  return IndexSet(ones & ~std::uint64_t{1});
}

IndexSet IndexSet::with(int i) const {
  if (i < 1 || i > kMaxMember) {
    throw std::invalid_argument("IndexSet member " + std::to_string(i) + " out of range");
  }
  return IndexSet(mask_ | (std::uint64_t{1} << i));
}

IndexSet IndexSet::without(int i) const {
  if (i < 1 || i > kMaxMember) return *this;
  return IndexSet(mask_ & ~(std::uint64_t{1} << i));
}

std::vector<int> IndexSet::descending() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::uint64_t m = mask_; m != 0;) {
    const int top = 63 - std::countl_zero(m);
    out.push_back(top);
    m &= ~(std::uint64_t{1} << top);
  }
  return out;
}

bool gee_order_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  // Same cardinality: comparing masks compares descending lists.
  return a.mask() < b.mask();
}

bool gale_leq(const IndexSet& s, const IndexSet& t) {
  if (s.size() > t.size()) return false;
  std::uint64_t sm = s.mask();
  std::uint64_t tm = t.mask();
  while (sm != 0) {
    const int si = 63 - std::countl_zero(sm);
    const int ti = 63 - std::countl_zero(tm);
    if (si > ti) return false;
    sm &= ~(std::uint64_t{1} << si);
    tm &= ~(std::uint64_t{1} << ti);
  }
  return true;
}

std::vector<IndexSet> gale_covers_below(const IndexSet& s) {
  std::vector<IndexSet> out;
  for (int x : s.descending()) {
    if (x == 1) {
      out.push_back(s.without(1));
    } else if (!s.contains(x - 1)) {
      out.push_back(s.without(x).with(x - 1));
    }
  }
  return out;
}

std::vector<IndexSet> gale_covers_above(const IndexSet& s, int bound) {
  std::vector<IndexSet> out;
  if (bound >= 1 && !s.contains(1)) out.push_back(s.with(1));
  for (int x : s.descending()) {
    if (x + 1 <= bound && !s.contains(x + 1)) out.push_back(s.without(x).with(x + 1));
  }
  return out;
}

bool code_less(const GeneticCode& a, const GeneticCode& b) {
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.gees.begin(), a.gees.end(), b.gees.begin(), b.gees.end(),
                                      gee_order_less);
}

GeneticCode canonicalize(std::vector<IndexSet> gees, int n) {
  if (n < 3 || n > IndexSet::kMaxMember + 1) {
    throw std::invalid_argument("polygon side count " + std::to_string(n) + " out of range");
  }
  for (const auto& g : gees) {
    if (g.max() > n - 1) {
      throw std::invalid_argument("gee " + format_gee(g) + " has a member above n-1 = " +
                                  std::to_string(n - 1));
    }
    if (g.size() > n - 3) {
      throw std::invalid_argument("gee " + format_gee(g) + " has more than n-3 = " +
                                  std::to_string(n - 3) + " members");
    }
  }
  std::sort(gees.begin(), gees.end(), gee_order_less);
  gees.erase(std::unique(gees.begin(), gees.end()), gees.end());
  std::vector<IndexSet> kept;
  for (const auto& g : gees) {
    const bool dominated = std::any_of(gees.begin(), gees.end(), [&](const IndexSet& h) {
      return h != g && gale_leq(g, h);
    });
    if (!dominated) kept.push_back(g);
  }
  return GeneticCode{n, std::move(kept)};
}

bool is_subgee(const GeneticCode& code, const IndexSet& t) {
  return std::any_of(code.gees.begin(), code.gees.end(),
                     [&](const IndexSet& g) { return gale_leq(t, g); });
}

std::vector<IndexSet> SubgeeTable::flattened() const {
  std::vector<IndexSet> out;
  for (const auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::size_t SubgeeTable::total() const {
  std::size_t sum = 0;
  for (auto x : d) sum += x;
  return sum;
}

namespace {

std::unordered_set<std::uint64_t> downward_closure(const GeneticCode& code) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<IndexSet> stack(code.gees.begin(), code.gees.end());
  for (const auto& g : code.gees) seen.insert(g.mask());
  while (!stack.empty()) {
    const IndexSet s = stack.back();
    stack.pop_back();
    for (const auto& p : gale_covers_below(s)) {
      if (seen.insert(p.mask()).second) stack.push_back(p);
    }
  }
  return seen;
}

void sort_columns(std::vector<IndexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
}

}  // namespace

SubgeeTable subgee_table(const GeneticCode& code) {
  SubgeeTable table;
  if (code.gees.empty()) return table;
  std::vector<IndexSet> all;
  for (auto mask : downward_closure(code)) all.push_back(IndexSet::from_mask(mask));
  sort_columns(all);
  for (const auto& s : all) {
    const auto k = static_cast<std::size_t>(s.size());
    if (table.by_size.size() <= k) table.by_size.resize(k + 1);
    table.by_size[k].push_back(s);
  }
  for (const auto& level : table.by_size) table.d.push_back(level.size());
  return table;
}

std::vector<IndexSet> minimal_non_subgees(const GeneticCode& code) {
  if (code.gees.empty()) {
    throw std::invalid_argument("minimal_non_subgees requires a nonempty code");
  }
  const auto subgees = downward_closure(code);
  std::unordered_set<std::uint64_t> emitted;
  std::vector<IndexSet> out;
  for (auto mask : subgees) {
    for (const auto& h : gale_covers_above(IndexSet::from_mask(mask), code.n - 1)) {
      if (subgees.count(h.mask()) != 0 || emitted.count(h.mask()) != 0) continue;
      const auto below = gale_covers_below(h);
      const bool minimal = std::all_of(below.begin(), below.end(), [&](const IndexSet& p) {
        return subgees.count(p.mask()) != 0;
      });
      if (minimal) {
        emitted.insert(h.mask());
        out.push_back(h);
      }
    }
  }
  sort_columns(out);
  return out;
}

IndexSet gee_bar(const IndexSet& g, int n) {
  const IndexSet complement = IndexSet::from_mask(IndexSet::interval(n - 1).mask() & ~g.mask());
  return complement.without(complement.max());
}

std::optional<std::pair<IndexSet, IndexSet>> glem_conflict(const GeneticCode& code) {
  for (const auto& g1 : code.gees) {
    const IndexSet bar = gee_bar(g1, code.n);
    for (const auto& g2 : code.gees) {
      if (gale_leq(bar, g2)) return std::make_pair(g1, g2);
    }
  }
  return std::nullopt;
}

GeneticCode family_code(Family family, int n) {
  IndexSet gee;
  switch (family) {
    case Family::Torus:
      if (n < 4) throw std::invalid_argument("torus code needs n >= 4");
      gee = IndexSet::interval(n - 3);
      break;
    case Family::Klein:
      if (n < 4) throw std::invalid_argument("Klein code needs n >= 4");
      gee = IndexSet::interval(n - 4);
      break;
    case Family::Special:
      if (n < 5) throw std::invalid_argument("special code needs n >= 5");
      gee = IndexSet::interval(n - 5).with(n - 2);
      break;
  }
  return GeneticCode{n, {gee}};
}

std::optional<Family> classify_family(const GeneticCode& code) {
  for (Family f : {Family::Torus, Family::Klein, Family::Special}) {
    if (code.n < (f == Family::Special ? 5 : 4)) continue;
    if (family_code(f, code.n) == code) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Torus:
      return "torus";
    case Family::Klein:
      return "klein";
    case Family::Special:
      return "special";
  }
  return "";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Torus, Family::Klein, Family::Special}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

}  // namespace polyspace
