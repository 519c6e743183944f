#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyspace {

/// A finite set of positive integers no larger than IndexSet::kMaxMember,
/// stored as a bit mask (bit i set iff i is a member).
class IndexSet {
 public:
  static constexpr int kMaxMember = 63;

  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<int> members);

  /// Throws std::invalid_argument if bit 0 is set.
  static IndexSet from_mask(std::uint64_t mask);
  /// {1, ..., k}
  static IndexSet interval(int k);

  std::uint64_t mask() const { return mask_; }
  int size() const { return size_; }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return i >= 1 && i <= kMaxMember && ((mask_ >> i) & 1U); }
  /// Largest member, or 0 for the empty set.
  int max() const { return mask_ == 0 ? 0 : 63 - std::countl_zero(mask_); }
  int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_); }

  IndexSet with(int i) const;
  IndexSet without(int i) const;

  std::vector<int> descending() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  explicit IndexSet(std::uint64_t mask) : mask_(mask), size_(std::popcount(mask)) {}

  std::uint64_t mask_ = 0;
  int size_ = 0;
};

/// Canonical gee order: larger sets first; equal sizes ordered
/// lexicographically (ascending) on their descending element lists.
bool gee_order_less(const IndexSet& a, const IndexSet& b);

/// Gale order: S <= T iff T contains {t_1..t_k} with s_i <= t_i for all i.
/// Greedy matching of the descending element lists decides it.
bool gale_leq(const IndexSet& s, const IndexSet& t);

/// Gale-order predecessors one step down: drop an element, or lower one
/// element by one onto an unused positive value.
std::vector<IndexSet> gale_covers_below(const IndexSet& s);
/// Gale-order successors one step up inside [1, bound].
std::vector<IndexSet> gale_covers_above(const IndexSet& s, int bound);

/// The antichain of gees of an n-gon space. An empty gee list is the empty
/// moduli space; the list {∅} is the space whose only subgee is ∅.
struct GeneticCode {
  int n = 0;
  std::vector<IndexSet> gees;

  bool is_empty_space() const { return gees.empty(); }
  bool is_monogenic() const { return gees.size() == 1; }

  friend bool operator==(const GeneticCode&, const GeneticCode&) = default;
};

/// Total order used for catalogs: by n, then lexicographic on the canonical
/// gee sequence under gee_order_less.
bool code_less(const GeneticCode& a, const GeneticCode& b);

/// Removes Gale-dominated and duplicate gees and sorts canonically.
/// Throws std::invalid_argument for n < 3, members outside [1, n-1], or a
/// gee with more than n-3 members.
GeneticCode canonicalize(std::vector<IndexSet> gees, int n);

bool is_subgee(const GeneticCode& code, const IndexSet& t);

struct SubgeeTable {
  /// by_size[i] holds the subgees of cardinality i in column order.
  std::vector<std::vector<IndexSet>> by_size;
  std::vector<std::size_t> d;

  /// All subgees, smallest size first.
  std::vector<IndexSet> flattened() const;
  std::size_t total() const;
};

SubgeeTable subgee_table(const GeneticCode& code);

/// Non-subgees all of whose Gale predecessors are subgees, in column order.
/// Requires a nonempty code.
std::vector<IndexSet> minimal_non_subgees(const GeneticCode& code);

/// [n-1] minus g, then minus its own largest element.
IndexSet gee_bar(const IndexSet& g, int n);

/// A pair of gees (g1, g2), possibly equal, with gee_bar(g1) <= g2. Such a
/// pair cannot occur in the code of any length vector.
std::optional<std::pair<IndexSet, IndexSet>> glem_conflict(const GeneticCode& code);

/// Well-known codes: torus {n-3..1}, Klein {n-4..1}, special {n-2, n-5..1}.
enum class Family { Torus, Klein, Special };

/// Throws std::invalid_argument below the family's minimum n (4, 5, 5).
GeneticCode family_code(Family family, int n);
std::optional<Family> classify_family(const GeneticCode& code);
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Text form "n:[g|g|...]". Gees with all members <= 9 are concatenated
/// digit strings in descending order ("421"); otherwise members are
/// comma-separated. "0" is the empty gee and "n:[]" the empty space.
std::string format_code(const GeneticCode& code);
std::string format_gee(const IndexSet& gee);
/// Parses and canonicalizes. Throws ParseError on malformed text.
GeneticCode parse_code(std::string_view text);

}  // namespace polyspace
