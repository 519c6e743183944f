#include "polyspace/lp.hpp"

#include <stdexcept>

namespace polyspace {

namespace {

__extension__ using Wide = __int128;

struct Overflow {};

// Exact arithmetic policy for the fraction-free tableau.
struct Int64Ops {
  using Int = std::int64_t;

  static Int narrow(Wide v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
    return static_cast<Int>(v);
  }
  // (p*x - f*y) / d, exact.
  static Int update(Int p, Int x, Int f, Int y, Int d) {
    const Wide num = static_cast<Wide>(p) * x - static_cast<Wide>(f) * y;
    return narrow(num / d);
  }
  // a/b < c/d for b, d > 0.
  static bool ratio_less(Int a, Int b, Int c, Int d) {
    return static_cast<Wide>(a) * d < static_cast<Wide>(c) * b;
  }
  static Int from(std::int64_t v) { return v; }
  static BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }
};

struct GmpOps {
  using Int = BigInt;

  static Int update(const Int& p, const Int& x, const Int& f, const Int& y, const Int& d) {
    Int num = p * x - f * y;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    return num;
  }
  static bool ratio_less(const Int& a, const Int& b, const Int& c, const Int& d) { return a * d < c * b; }
  static Int from(std::int64_t v) { return Int(static_cast<long>(v)); }
  static BigInt to_big(const Int& v) { return v; }
};

// Standard-form problem: maximize objective·x subject to
//   le rows:  row·x <= rhs  (rhs >= 0)
//   eq rows:  row·x  = rhs  (rhs >= 0)
//   x >= 0
// All data integral.
struct StandardForm {
  int structural = 0;
  std::vector<std::vector<std::int64_t>> le_rows;
  std::vector<std::int64_t> le_rhs;
  std::vector<std::vector<std::int64_t>> eq_rows;
  std::vector<std::int64_t> eq_rhs;
  std::vector<std::int64_t> objective;
};

struct StandardSolution {
  bool feasible = false;
  BigInt value_numerator;
  BigInt denominator;
  std::vector<BigInt> x_numerators;
};

// Fraction-free (Bareiss-style) simplex: stored entries are the true tableau
// entries times `denom_`, which is the current basis determinant up to sign
// and is kept positive. Bland's rule prevents cycling.
template <class Ops>
class Tableau {
 public:
  using Int = typename Ops::Int;

  explicit Tableau(const StandardForm& sf)
      : structural_(sf.structural),
        slack_begin_(sf.structural),
        art_begin_(sf.structural + static_cast<int>(sf.le_rows.size())),
        cols_(art_begin_ + static_cast<int>(sf.eq_rows.size())),
        rows_(static_cast<int>(sf.le_rows.size() + sf.eq_rows.size())),
        width_(cols_ + 1),
        data_(static_cast<std::size_t>((rows_ + 1) * width_), Ops::from(0)),
        basis_(static_cast<std::size_t>(rows_)),
        denom_(Ops::from(1)) {
    int r = 0;
    for (std::size_t i = 0; i < sf.le_rows.size(); ++i, ++r) {
      for (int j = 0; j < structural_; ++j) at(r, j) = Ops::from(sf.le_rows[i][static_cast<std::size_t>(j)]);
      at(r, slack_begin_ + static_cast<int>(i)) = Ops::from(1);
      at(r, cols_) = Ops::from(sf.le_rhs[i]);
      basis_[static_cast<std::size_t>(r)] = slack_begin_ + static_cast<int>(i);
    }
    for (std::size_t i = 0; i < sf.eq_rows.size(); ++i, ++r) {
      for (int j = 0; j < structural_; ++j) at(r, j) = Ops::from(sf.eq_rows[i][static_cast<std::size_t>(j)]);
      at(r, art_begin_ + static_cast<int>(i)) = Ops::from(1);
      at(r, cols_) = Ops::from(sf.eq_rhs[i]);
      basis_[static_cast<std::size_t>(r)] = art_begin_ + static_cast<int>(i);
    }
  }

  StandardSolution solve(const std::vector<std::int64_t>& objective) {
    StandardSolution out;
    if (art_begin_ < cols_) {
      // Phase 1: maximize -(sum of artificials).
      std::vector<std::int64_t> phase1(static_cast<std::size_t>(cols_), 0);
      for (int j = art_begin_; j < cols_; ++j) phase1[static_cast<std::size_t>(j)] = -1;
      load_objective(phase1);
      run(cols_);
      if (sgn_of(at(rows_, cols_)) < 0) return out;
      drive_out_artificials();
    }
    std::vector<std::int64_t> phase2(static_cast<std::size_t>(cols_), 0);
    for (int j = 0; j < structural_; ++j) phase2[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
    load_objective(phase2);
    run(art_begin_);
    out.feasible = true;
    out.value_numerator = Ops::to_big(at(rows_, cols_));
    out.denominator = Ops::to_big(denom_);
    out.x_numerators.assign(static_cast<std::size_t>(structural_), BigInt(0));
    for (int r = 0; r < rows_; ++r) {
      const int b = basis_[static_cast<std::size_t>(r)];
      if (b < structural_) out.x_numerators[static_cast<std::size_t>(b)] = Ops::to_big(at(r, cols_));
    }
    return out;
  }

 private:
  Int& at(int r, int c) { return data_[static_cast<std::size_t>(r * width_ + c)]; }

  static int sgn_of(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

  // Reduced costs scaled by denom_: z_j = sum_r c_{B_r} a_rj - c_j denom_.
  void load_objective(const std::vector<std::int64_t>& c) {
    for (int j = 0; j <= cols_; ++j) {
      Int z = Ops::from(0);
      for (int r = 0; r < rows_; ++r) {
        const auto cb = c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
        if (cb != 0) z = Ops::update(Ops::from(1), z, Ops::from(-cb), at(r, j), Ops::from(1));
      }
      const auto cj = j < cols_ ? c[static_cast<std::size_t>(j)] : 0;
      if (cj != 0) z = Ops::update(Ops::from(1), z, Ops::from(cj), denom_, Ops::from(1));
      at(rows_, j) = z;
    }
  }

  void pivot(int pr, int pc) {
    const Int p = at(pr, pc);
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const Int f = at(r, pc);
      for (int j = 0; j <= cols_; ++j) at(r, j) = Ops::update(p, at(r, j), f, at(pr, j), denom_);
    }
    denom_ = p;
    if (denom_ < 0) {
      for (auto& v : data_) v = -v;
      denom_ = -denom_;
    }
    basis_[static_cast<std::size_t>(pr)] = pc;
  }

  // Simplex iterations over entering candidates j < limit.
  void run(int limit) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (at(rows_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      for (int r = 0; r < rows_; ++r) {
        if (!(at(r, enter) > 0)) continue;
        if (leave < 0) {
          leave = r;
          continue;
        }
        const Int& a = at(r, cols_);
        const Int& b = at(r, enter);
        const Int& c = at(leave, cols_);
        const Int& d = at(leave, enter);
        if (Ops::ratio_less(a, b, c, d) ||
            (!Ops::ratio_less(c, d, a, b) &&
             basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
        }
      }
      if (leave < 0) throw InternalError("max-slack program is unbounded");
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < art_begin_) continue;
      for (int j = 0; j < art_begin_; ++j) {
        if (at(r, j) != 0) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  int structural_;
  int slack_begin_;
  int art_begin_;
  int cols_;
  int rows_;
  int width_;
  std::vector<Int> data_;
  std::vector<int> basis_;
  Int denom_;
};

StandardSolution solve_standard(const StandardForm& sf) {
  try {
    Tableau<Int64Ops> t(sf);
    return t.solve(sf.objective);
  } catch (const Overflow&) {
    Tableau<GmpOps> t(sf);
    return t.solve(sf.objective);
  }
}

// Columns: x (or p then q when variables are free), then t.
StandardForm max_slack_form(int variables, std::span<const IntegerConstraint> constraints, bool nonnegative) {
  StandardForm sf;
  const int xs = nonnegative ? variables : 2 * variables;
  const int t = xs;
  sf.structural = xs + 1;
  auto spread = [&](const std::vector<std::int64_t>& coeffs, std::int64_t sign) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(sf.structural), 0);
    for (int i = 0; i < variables; ++i) {
      const auto c = coeffs[static_cast<std::size_t>(i)] * sign;
      row[static_cast<std::size_t>(i)] = c;
      if (!nonnegative) row[static_cast<std::size_t>(variables + i)] = -c;
    }
    return row;
  };
  for (const auto& con : constraints) {
    if (con.coeffs.size() != static_cast<std::size_t>(variables)) {
      throw std::invalid_argument("constraint width differs from variable count");
    }
    auto row = spread(con.coeffs, -1);
    if (con.relation == Relation::Strict) row[static_cast<std::size_t>(t)] = 1;
    sf.le_rows.push_back(std::move(row));
    sf.le_rhs.push_back(0);
  }
  std::vector<std::int64_t> cap(static_cast<std::size_t>(sf.structural), 0);
  cap[static_cast<std::size_t>(t)] = 1;
  sf.le_rows.push_back(std::move(cap));
  sf.le_rhs.push_back(1);
  sf.eq_rows.emplace_back(static_cast<std::size_t>(sf.structural), 1);
  sf.eq_rows.back()[static_cast<std::size_t>(t)] = 0;
  sf.eq_rhs.push_back(1);
  sf.objective.assign(static_cast<std::size_t>(sf.structural), 0);
  sf.objective[static_cast<std::size_t>(t)] = 1;
  return sf;
}

MaxSlackResult to_result(const StandardSolution& sol, int variables, bool nonnegative) {
  MaxSlackResult out;
  if (!sol.feasible) return out;
  out.slack = Rational(sol.value_numerator, sol.denominator);
  out.slack.canonicalize();
  out.feasible = sgn(out.slack) > 0;
  out.denominator = sol.denominator;
  for (int i = 0; i < variables; ++i) {
    BigInt num = sol.x_numerators[static_cast<std::size_t>(i)];
    if (!nonnegative) num -= sol.x_numerators[static_cast<std::size_t>(variables + i)];
    Rational q(num, sol.denominator);
    q.canonicalize();
    out.numerators.push_back(std::move(num));
    out.point.push_back(std::move(q));
  }
  return out;
}

}  // namespace

MaxSlackResult max_slack(int variables, std::span<const IntegerConstraint> constraints, bool nonnegative) {
  if (variables <= 0) throw std::invalid_argument("max_slack needs at least one variable");
  const auto sf = max_slack_form(variables, constraints, nonnegative);
  return to_result(solve_standard(sf), variables, nonnegative);
}

MaxSlackResult max_slack(const LinearSystem& system) {
  // Rows are homogeneous, so each may be rescaled to primitive integers.
  std::vector<IntegerConstraint> rows;
  for (const auto& con : system.constraints) {
    if (con.coeffs.size() != static_cast<std::size_t>(system.variables)) {
      throw std::invalid_argument("constraint width differs from variable count");
    }
    BigInt den = 1;
    for (const auto& c : con.coeffs) den = lcm(den, BigInt(c.get_den()));
    BigInt g = 0;
    std::vector<BigInt> ints;
    for (const auto& c : con.coeffs) {
      ints.emplace_back(c.get_num() * (den / c.get_den()));
      g = gcd(g, ints.back());
    }
    IntegerConstraint row;
    row.relation = con.relation;
    for (auto& v : ints) {
      if (g != 0) v /= g;
      if (!v.fits_slong_p()) throw std::invalid_argument("constraint coefficients too large");
      row.coeffs.push_back(v.get_si());
    }
    rows.push_back(std::move(row));
  }
  return max_slack(system.variables, rows, system.nonnegative);
}

bool satisfies(const LinearConstraint& constraint, std::span<const Rational> point) {
  Rational v = 0;
  for (std::size_t i = 0; i < constraint.coeffs.size(); ++i) v += constraint.coeffs[i] * point[i];
  return constraint.relation == Relation::Strict ? sgn(v) > 0 : sgn(v) >= 0;
}

std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& system) {
  auto result = max_slack(system);
  if (!result.feasible) return std::nullopt;
  for (const auto& con : system.constraints) {
    if (!satisfies(con, result.point)) throw InternalError("max-slack optimum violates a constraint");
  }
  return std::move(result.point);
}

}  // namespace polyspace
