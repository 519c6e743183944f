#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polyspace/gale.hpp"

namespace polyspace {

/// Degrees i in [0, n-3] where C(n-2, i) is odd, i.e. where the total
/// Stiefel-Whitney class (1+R)^{n-2} has a nonzero coefficient. n >= 4.
std::vector<int> sw_polynomial(int n);

/// Parities of C(m-i, i) for i = 0..floor(m/2): the Wu class v_i is that
/// multiple of R^i.
std::vector<bool> wu_coefficients(int m);

bool orientable(const GeneticCode& code);

enum class Cobordism { NullCobordant, CobordantToRP };

struct CobordismClass {
  Cobordism kind = Cobordism::NullCobordant;
  /// Dimension m = n-3 of the projective space when kind is CobordantToRP.
  int rp_dimension = 0;
  /// Set when m is odd: RP^m is itself a boundary, so the two answers name
  /// the same class.
  bool rp_is_boundary = false;
};

/// Null cobordant iff R^{n-3} = 0, otherwise cobordant to RP^{n-3}.
CobordismClass cobordism_class(const GeneticCode& code);

struct EulerData {
  /// Euler characteristic: the alternating subgee count for odd n, 0 for even n.
  std::int64_t euler = 0;
  bool has_vector_field = false;
  /// sum_i (-1)^i d_i, reported for every n.
  std::int64_t alternating_subgee_sum = 0;
};

EulerData euler_and_vector_field(const GeneticCode& code);

struct ImmersionStatement {
  int euclidean_dimension = 0;
  /// The power of R whose nonvanishing rules out the immersion.
  int r_degree = 0;
  bool obstructed = false;
};

/// When 2^e+3 <= n <= 2^{e+1}: no immersion in R^{2^{e+1}-2} if
/// R^{2^{e+1}+2-n} != 0. Nothing when n lies in no such window.
std::optional<ImmersionStatement> immersion_obstruction(const GeneticCode& code);

enum class Parallelizable { Yes, No, Unknown };

std::string_view to_string(Parallelizable p);
std::string_view to_string(Cobordism c);

Parallelizable parallelizability(const GeneticCode& code);

/// R^{n-3} in Z/2 for a single-gee code, from the sum over admissible
/// tuples B of prod C(a_i + b_i - 2, b_i). Throws std::invalid_argument
/// unless the code has exactly one gee.
bool monogenic_top_power(const GeneticCode& code);

struct InvariantReport {
  int n = 0;
  GeneticCode code;
  std::vector<std::size_t> d;
  bool orientable = false;
  CobordismClass cobordism;
  std::int64_t euler = 0;
  std::int64_t alternating_subgee_sum = 0;
  bool has_vector_field = false;
  std::vector<int> sw_nonzero_degrees;
  /// R = 0 in degree 1 (the double cover is trivial).
  bool r_vanishes = false;
  std::optional<ImmersionStatement> immersion;
  Parallelizable parallelizable = Parallelizable::Unknown;
};

/// Requires a nonempty code with n >= 4.
InvariantReport make_report(const GeneticCode& code);

}  // namespace polyspace
