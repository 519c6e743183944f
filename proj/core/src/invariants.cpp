#include "polyspace/invariants.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "polyspace/binomial.hpp"
#include "polyspace/cohomology.hpp"

namespace polyspace {

namespace {

void require_space(const GeneticCode& code) {
  if (code.is_empty_space()) throw std::invalid_argument("invariants of the empty space requested");
  if (code.n < 4) throw std::invalid_argument("invariants need n >= 4");
}

}  // namespace

std::vector<int> sw_polynomial(int n) {
  if (n < 4) throw std::invalid_argument("sw_polynomial needs n >= 4");
  std::vector<int> out;
  for (int i = 0; i <= n - 3; ++i) {
    if (binom_mod2(n - 2, i)) out.push_back(i);
  }
  return out;
}

std::vector<bool> wu_coefficients(int m) {
  if (m < 0) throw std::invalid_argument("wu_coefficients needs m >= 0");
  std::vector<bool> out;
  for (int i = 0; 2 * i <= m; ++i) out.push_back(binom_mod2(m - i, i));
  return out;
}

bool orientable(const GeneticCode& code) {
  require_space(code);
  return code.n % 2 == 0 || code == family_code(Family::Torus, code.n);
}

CobordismClass cobordism_class(const GeneticCode& code) {
  require_space(code);
  CobordismClass out;
  const int m = code.n - 3;
  if (!r_power_is_zero(code, m)) {
    out.kind = Cobordism::CobordantToRP;
    out.rp_dimension = m;
    out.rp_is_boundary = m % 2 == 1;
  }
  return out;
}

EulerData euler_and_vector_field(const GeneticCode& code) {
  require_space(code);
  EulerData out;
  const auto table = subgee_table(code);
  for (std::size_t i = 0; i < table.d.size(); ++i) {
    const auto di = static_cast<std::int64_t>(table.d[i]);
    out.alternating_subgee_sum += i % 2 == 0 ? di : -di;
  }
  out.euler = code.n % 2 == 1 ? out.alternating_subgee_sum : 0;
  out.has_vector_field = out.euler == 0;
  return out;
}

std::optional<ImmersionStatement> immersion_obstruction(const GeneticCode& code) {
  require_space(code);
  const int n = code.n;
  for (int e = 1; (1 << e) + 3 <= n; ++e) {
    const int upper = 1 << (e + 1);
    if (n > upper) continue;
    ImmersionStatement out;
    out.euclidean_dimension = upper - 2;
    out.r_degree = upper + 2 - n;
    // The dual class is C(-(n-2), j) R^j; the coefficient is always odd here.
    if (!binom_mod2(-(n - 2), out.r_degree)) {
      throw InternalError("dual Stiefel-Whitney coefficient unexpectedly even for n=" + std::to_string(n));
    }
    out.obstructed = !r_power_is_zero(code, out.r_degree);
    return out;
  }
  return std::nullopt;
}

std::string_view to_string(Parallelizable p) {
  switch (p) {
    case Parallelizable::Yes:
      return "yes";
    case Parallelizable::No:
      return "no";
    case Parallelizable::Unknown:
      return "unknown";
  }
  return "";
}

std::string_view to_string(Cobordism c) {
  return c == Cobordism::NullCobordant ? "null" : "rp";
}

Parallelizable parallelizability(const GeneticCode& code) {
  require_space(code);
  const int n = code.n;
  const auto family = classify_family(code);
  if (family == Family::Torus) return Parallelizable::Yes;
  if (family == Family::Klein) return (n - 3) % 2 == 1 ? Parallelizable::Yes : Parallelizable::No;
  if (n % 2 == 1) return Parallelizable::No;
  if (n == 6 || n == 10) return Parallelizable::Yes;
  if (n % 4 == 0 && n >= 8) return family == Family::Special ? Parallelizable::Unknown : Parallelizable::No;
  // n = 4 is covered by the torus and Klein codes; n = 2 mod 4, n >= 14.
  return Parallelizable::Unknown;
}

bool monogenic_top_power(const GeneticCode& code) {
  if (!code.is_monogenic()) throw std::invalid_argument("monogenic_top_power needs exactly one gee");
  const auto g = code.gees.front().descending();
  const int k = static_cast<int>(g.size());
  std::vector<int> a(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    a[static_cast<std::size_t>(i)] = i + 1 < k ? g[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(i + 1)]
                                               : g[static_cast<std::size_t>(i)];
  }
  // Admissible B: prefix sums b_1+...+b_l <= l, total exactly k.
  bool parity = false;
  std::function<void(int, int, bool)> walk = [&](int i, int used, bool term) {
    if (i == k) {
      if (used == k) parity ^= term;
      return;
    }
    for (int b = 0; used + b <= i + 1; ++b) {
      const bool factor = binom_mod2(a[static_cast<std::size_t>(i)] + b - 2, b);
      walk(i + 1, used + b, term && factor);
    }
  };
  walk(0, 0, true);
  return parity;
}

InvariantReport make_report(const GeneticCode& code) {
  require_space(code);
  InvariantReport r;
  r.n = code.n;
  r.code = code;
  r.d = subgee_table(code).d;
  r.orientable = orientable(code);
  r.cobordism = cobordism_class(code);
  const auto euler = euler_and_vector_field(code);
  r.euler = euler.euler;
  r.alternating_subgee_sum = euler.alternating_subgee_sum;
  r.has_vector_field = euler.has_vector_field;
  r.sw_nonzero_degrees = sw_polynomial(code.n);
  r.r_vanishes = r_power_is_zero(code, 1);
  r.immersion = immersion_obstruction(code);
  r.parallelizable = parallelizability(code);
  return r;
}

}  // namespace polyspace
