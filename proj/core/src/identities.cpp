#include "polyspace/identities.hpp"

#include <stdexcept>

#include "polyspace/binomial.hpp"

namespace polyspace {

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::Comblem:
      return "comblem";
    case Identity::Combcor2:
      return "combcor2";
    case Identity::Combthm:
      return "combthm";
    case Identity::Combcor:
      return "combcor";
  }
  return "";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (auto id : {Identity::Comblem, Identity::Combcor2, Identity::Combthm, Identity::Combcor}) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

BigInt comblem_sum(std::int64_t m, std::int64_t k) {
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= k; ++i) sum += binom_int(m - i, i) * binom_int(i - m + k, k - i);
  return sum;
}

IdentitySides evaluate_identity(Identity id, const IdentityArgs& a) {
  if (a.k < 0) throw std::invalid_argument("k must be nonnegative");
  IdentitySides out;
  switch (id) {
    case Identity::Comblem:
      out.lhs = comblem_sum(a.m, a.k);
      out.rhs = comblem_sum(a.m, a.k + 2);
      out.holds = out.lhs == out.rhs;
      break;
    case Identity::Combcor2:
      out.lhs = comblem_sum(a.m, a.k);
      out.rhs = a.k % 2 == 0 ? 1 : 0;
      out.holds = out.lhs == out.rhs;
      break;
    case Identity::Combthm: {
      if (a.d < a.k - a.m) throw std::invalid_argument("combthm needs d >= k - m");
      out.lhs = 0;
      for (std::int64_t i = 0; i <= a.k; ++i) out.lhs += binom_int(a.m - i, i) * binom_int(i + a.d, a.k - i);
      out.rhs = 0;
      for (std::int64_t j = 0; 2 * j <= a.k; ++j) out.rhs += binom_int(a.m + a.d - 1 - 2 * j, a.k - 2 * j);
      out.holds = out.lhs == out.rhs;
      break;
    }
    case Identity::Combcor: {
      if (a.m < a.k) throw std::invalid_argument("combcor needs m >= k");
      out.lhs = 0;
      for (std::int64_t i = 0; i <= a.k; ++i) out.lhs += binom_int(a.m - i, i) * binom_int(i, a.k - i);
      out.rhs = binom_int(a.m + 1, a.k);
      const BigInt diff = out.lhs - out.rhs;
      out.holds = mpz_even_p(diff.get_mpz_t()) != 0;
      break;
    }
  }
  return out;
}

bool identity_check(Identity id, const IdentityArgs& args) { return evaluate_identity(id, args).holds; }

Rational wz_term(std::int64_t m, std::int64_t k, std::int64_t i) {
  return Rational(binom_int(m - i, i) * binom_int(i - m + k, k - i));
}

Rational wz_certificate(std::int64_t m, std::int64_t k, std::int64_t i) {
  if (i > k) throw std::invalid_argument("certificate is defined for i <= k");
  const BigInt num = BigInt(static_cast<long>(2 * k - m + 3)) * BigInt(static_cast<long>(i - m - 1)) *
                     BigInt(static_cast<long>(i)) * BigInt(static_cast<long>(2 * i - m));
  const BigInt den = BigInt(static_cast<long>(k + 1 - i)) * BigInt(static_cast<long>(k + 2 - i));
  Rational factor(num, den);
  factor.canonicalize();
  return wz_term(m, k, i) * factor;
}

Rational wz_boundary_sum(std::int64_t m, std::int64_t k) {
  const BigInt s = binom_int(m - k, k) * (1 - binom_int(2 * k - m + 2, 2)) -
                   binom_int(m - k - 1, k + 1) * binom_int(2 * k - m + 3, 1) - binom_int(m - k - 2, k + 2);
  return Rational(s);
}

WzCheck wz_certificate_check(std::int64_t m, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  WzCheck out;
  const std::int64_t factor = (k + 2) * (k - m + 1);
  if (k - m + 1 == 0) {
    out.degenerate = true;
    const BigInt lhs = comblem_sum(m, k);
    const BigInt rhs = comblem_sum(m, k + 2);
    out.degenerate_sides = lhs == rhs && lhs == (k % 2 == 0 ? 1 : 0);
  }
  out.boundary = sgn(wz_certificate(m, k, 0)) == 0;
  if (!out.degenerate) {
    for (std::int64_t i = 0; i + 1 <= k; ++i) {
      const Rational lhs = Rational(factor) * (wz_term(m, k, i) - wz_term(m, k + 2, i));
      const Rational rhs = wz_certificate(m, k, i + 1) - wz_certificate(m, k, i);
      if (lhs != rhs) {
        out.recurrence = false;
        out.failing_i = i;
        break;
      }
    }
    out.closing = Rational(-factor) * wz_boundary_sum(m, k) == wz_certificate(m, k, k);
  }
  return out;
}

GridReport check_comblem_grid(std::int64_t max_m, std::int64_t max_k) {
  GridReport report;
  for (std::int64_t m = -max_m; m <= max_m; ++m) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      for (auto id : {Identity::Comblem, Identity::Combcor2}) {
        ++report.checked;
        if (!identity_check(id, {m, k, 0})) report.failures.push_back({std::string(identity_name(id)), {m, k, 0}});
      }
    }
  }
  return report;
}

GridReport check_combthm_grid(std::int64_t max_m, std::int64_t max_k, std::int64_t max_excess) {
  GridReport report;
  for (std::int64_t m = -max_m; m <= max_m; ++m) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      for (std::int64_t e = 0; e <= max_excess; ++e) {
        const IdentityArgs args{m, k, k - m + e};
        ++report.checked;
        if (!identity_check(Identity::Combthm, args)) report.failures.push_back({"combthm", args});
      }
    }
  }
  return report;
}

GridReport check_combcor_grid(std::int64_t max_m) {
  GridReport report;
  for (std::int64_t m = 0; m <= max_m; ++m) {
    for (std::int64_t k = 0; k <= m; ++k) {
      ++report.checked;
      if (!identity_check(Identity::Combcor, {m, k, 0})) report.failures.push_back({"combcor", {m, k, 0}});
    }
  }
  return report;
}

GridReport check_wz_grid(std::int64_t max_m, std::int64_t max_k) {
  GridReport report;
  for (std::int64_t m = -max_m; m <= max_m; ++m) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      ++report.checked;
      if (!wz_certificate_check(m, k).ok()) report.failures.push_back({"wz", {m, k, 0}});
    }
  }
  return report;
}

}  // namespace polyspace
