#include "drtest/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace drtest {

LinearSystem::LinearSystem(std::size_t variable_count) {
  for (std::size_t i = 0; i < variable_count; ++i) {
    variables.push_back("l" + std::to_string(i + 1));
  }
}

void LinearSystem::add(RationalVector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != variables.size()) {
    throw std::invalid_argument("constraint has " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(variables.size()) +
                                " variables");
  }
  constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearSystem::validate() const {
  for (const auto& c : constraints) {
    if (c.coeffs.size() != variables.size()) {
      throw std::invalid_argument("constraint width does not match the variable count");
    }
  }
}

LinearSystem strictify(const LinearSystem& sys) {
  LinearSystem out = sys;
  for (auto& c : out.constraints) {
    if (c.relation != Relation::Gt) {
      continue;
    }
    if (c.rhs != 0) {
      throw std::invalid_argument("strictify: strict constraint with nonzero right-hand side");
    }
    c.relation = Relation::Ge;
    c.rhs = 1;
  }
  return out;
}

namespace {

// Phase-one tableau. Columns: x+ (n), x- (one per free variable), one slack
// per Ge row, one artificial per row, then the right-hand side. The last row holds reduced
// costs and the negated objective.
class Tableau {
 public:
  Tableau(const LinearSystem& sys, const std::vector<bool>& nonneg)
      : n_(sys.variable_count()), m_(sys.constraints.size()) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!nonneg[j]) {
        negative_of_.push_back(j);
      }
    }
    structural_ = n_ + negative_of_.size();
    for (const auto& c : sys.constraints) {
      if (c.relation == Relation::Ge) {
        slack_of_.push_back(slacks_++);
      } else {
        slack_of_.push_back(npos);
      }
    }
    width_ = structural_ + slacks_ + m_;
    t_.assign(m_ + 1, RationalVector(width_ + 1));
    sigma_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& c = sys.constraints[i];
      if (c.relation == Relation::Gt) {
        throw std::invalid_argument("feasible: strict constraint present, strictify first");
      }
      auto& row = t_[i];
      for (std::size_t j = 0; j < n_; ++j) {
        row[j] = c.coeffs[j];
      }
      for (std::size_t k = 0; k < negative_of_.size(); ++k) {
        row[n_ + k] = -c.coeffs[negative_of_[k]];
      }
      if (slack_of_[i] != npos) {
        row[structural_ + slack_of_[i]] = -1;
      }
      row[width_] = c.rhs;
      if (c.rhs < 0) {
        sigma_[i] = -1;
        for (std::size_t j = 0; j < width_ + 1; ++j) {
          row[j] = -row[j];
        }
      }
      row[artificial(i)] = 1;
      basis_[i] = artificial(i);
    }
    auto& cost = t_[m_];
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < width_ + 1; ++j) {
        if (j < artificial(0) || j == width_) {
          cost[j] -= t_[i][j];
        }
      }
    }
  }

  // Dantzig's rule for the entering column. Ties in the ratio test are broken
  // lexicographically on the artificial columns, which start as the identity;
  // that rules out cycling on the heavily degenerate systems we build.
  void solve() {
    while (true) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < width_; ++j) {
        if (t_[m_][j] < 0 && (enter == npos || t_[m_][j] < t_[m_][enter])) {
          enter = j;
        }
      }
      if (enter == npos) {
        return;
      }
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) {
          continue;
        }
        Rational ratio = t_[i][width_] / t_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && lex_less(i, leave, enter))) {
          leave = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so a leaving row always exists.
      pivot(leave, enter);
    }
  }

  bool optimum_is_zero() const { return t_[m_][width_] == 0; }

  RationalVector point() const {
    RationalVector x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t b = basis_[i];
      if (b < n_) {
        x[b] += t_[i][width_];
      } else if (b < structural_) {
        x[negative_of_[b - n_]] -= t_[i][width_];
      }
    }
    return x;
  }

  /// Dual multipliers from the artificial reduced costs, mapped back to the
  /// original row signs.
  RationalVector farkas() const {
    RationalVector u(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational y = Rational(1) - t_[m_][artificial(i)];
      u[i] = sigma_[i] > 0 ? y : Rational(-y);
    }
    return u;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t artificial(std::size_t i) const { return structural_ + slacks_ + i; }

  bool lex_less(std::size_t a, std::size_t b, std::size_t enter) const {
    for (std::size_t k = 0; k < m_; ++k) {
      Rational x = t_[a][artificial(k)] / t_[a][enter];
      Rational y = t_[b][artificial(k)] / t_[b][enter];
      if (x != y) {
        return x < y;
      }
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t_[r][c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (t_[r][j] != 0) {
        t_[r][j] /= p;
        nonzero.push_back(j);
      }
    }
    Rational f;
    Rational term;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) {
        continue;
      }
      f = t_[i][c];
      for (auto j : nonzero) {
        term = f * t_[r][j];
        t_[i][j] -= term;
      }
    }
    basis_[r] = c;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t slacks_ = 0;
  std::size_t structural_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> negative_of_;
  std::vector<std::size_t> slack_of_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
  std::vector<RationalVector> t_;
};


// The alternative system A^T u = 0, b^T u = 1, u >= 0 on Ge rows. It has
// n + 1 rows, which is far smaller when the original has many constraints.
// Its phase-one multipliers (z, t) give the point -z / t when it is
// infeasible. Both answers are re-checked by the caller.
std::optional<FeasibilityResult> feasible_via_alternative(const LinearSystem& sys) {
  std::size_t n = sys.variable_count();
  std::size_t m = sys.constraints.size();
  LinearSystem alt(m);
  std::vector<bool> nonneg(m);
  for (std::size_t i = 0; i < m; ++i) {
    nonneg[i] = sys.constraints[i].relation == Relation::Ge;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    RationalVector row(m);
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = k < n ? sys.constraints[i].coeffs[k] : sys.constraints[i].rhs;
    }
    alt.add(std::move(row), Relation::Eq, k < n ? 0 : 1);
  }
  Tableau tab(alt, nonneg);
  tab.solve();
  FeasibilityResult out;
  if (tab.optimum_is_zero()) {
    out.certificate = tab.point();
    if (certifies_infeasible(sys, out.certificate)) {
      return out;
    }
    return std::nullopt;
  }
  RationalVector y = tab.farkas();
  if (y[n] <= 0) {
    return std::nullopt;
  }
  RationalVector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = -y[k] / y[n];
  }
  if (!satisfies(sys, x)) {
    return std::nullopt;
  }
  out.witness = std::move(x);
  return out;
}

}  // namespace

FeasibilityResult feasible(const LinearSystem& sys) {
  sys.validate();
  for (const auto& c : sys.constraints) {
    if (c.relation == Relation::Gt) {
      throw std::invalid_argument("feasible: strict constraint present, strictify first");
    }
  }
  if (sys.constraints.size() > sys.variable_count() + 1) {
    if (auto out = feasible_via_alternative(sys)) {
      return *out;
    }
  }
  Tableau tab(sys, std::vector<bool>(sys.variable_count(), false));
  tab.solve();
  FeasibilityResult out;
  if (tab.optimum_is_zero()) {
    out.witness = tab.point();
  } else {
    out.certificate = tab.farkas();
  }
  return out;
}

bool satisfies(const LinearSystem& sys, const RationalVector& x) {
  if (x.size() != sys.variable_count()) {
    return false;
  }
  for (const auto& c : sys.constraints) {
    Rational lhs = dot(c.coeffs, x);
    bool ok = c.relation == Relation::Eq   ? lhs == c.rhs
              : c.relation == Relation::Ge ? lhs >= c.rhs
                                           : lhs > c.rhs;
    if (!ok) {
      return false;
    }
  }
  return true;
}

bool certifies_infeasible(const LinearSystem& sys, const RationalVector& u) {
  if (u.size() != sys.constraints.size()) {
    return false;
  }
  RationalVector combo(sys.variable_count());
  Rational rhs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& c = sys.constraints[i];
    if (c.relation == Relation::Gt) {
      return false;
    }
    if (c.relation == Relation::Ge && u[i] < 0) {
      return false;
    }
    for (std::size_t j = 0; j < combo.size(); ++j) {
      combo[j] += u[i] * c.coeffs[j];
    }
    rhs += u[i] * c.rhs;
  }
  return is_zero(combo) && rhs > 0;
}

std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t n) {
  std::vector<RationalVector> a;
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw std::invalid_argument("null_space: row width does not match n");
    }
    a.push_back(r);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && a[p][col] == 0) {
      ++p;
    }
    if (p == a.size()) {
      continue;
    }
    std::swap(a[p], a[rank]);
    Rational lead = a[rank][col];
    for (auto& x : a[rank]) {
      x /= lead;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col] == 0) {
        continue;
      }
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[rank][j];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<RationalVector> basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) {
    is_pivot[c] = true;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v[pivot_cols[r]] = -a[r][free];
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<RationalVector> null_space(const std::vector<ExponentVector>& rows, std::size_t n) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    r.emplace_back(row.begin(), row.end());
  }
  return null_space(r, n);
}

namespace {

std::vector<RationalVector> others(const RationalVector& point,
                                   const std::vector<RationalVector>& cloud) {
  auto it = std::find(cloud.begin(), cloud.end(), point);
  if (it == cloud.end()) {
    throw std::invalid_argument("is_extreme: point is not in the cloud");
  }
  std::vector<RationalVector> rest(cloud.begin(), it);
  rest.insert(rest.end(), std::next(it), cloud.end());
  for (const auto& p : rest) {
    if (p.size() != point.size()) {
      throw std::invalid_argument("is_extreme: mixed dimensions in the cloud");
    }
  }
  return rest;
}

// mu >= 0 (one row each), sum mu = 1, sum mu p = point.
LinearSystem hull_system(const RationalVector& point, const std::vector<RationalVector>& rest) {
  const std::size_t k = rest.size();
  LinearSystem sys(k);
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector e(k);
    e[i] = 1;
    sys.add(std::move(e), Relation::Ge, 0);
  }
  sys.add(RationalVector(k, Rational(1)), Relation::Eq, 1);
  for (std::size_t c = 0; c < point.size(); ++c) {
    RationalVector row(k);
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = rest[i][c];
    }
    sys.add(std::move(row), Relation::Eq, point[c]);
  }
  return sys;
}

}  // namespace

bool is_extreme(const RationalVector& point, const std::vector<RationalVector>& cloud) {
  auto rest = others(point, cloud);
  return !feasible(hull_system(point, rest)).is_feasible();
}

std::optional<RationalVector> extreme_normal(const RationalVector& point,
                                             const std::vector<RationalVector>& cloud) {
  auto rest = others(point, cloud);
  if (rest.empty()) {
    RationalVector c(point.size());
    if (!c.empty()) {
      c[0] = 1;
    }
    return c;
  }
  auto result = feasible(hull_system(point, rest));
  if (result.is_feasible()) {
    return std::nullopt;
  }
  // With u_s the multiplier of the sum row, the coordinate multipliers c
  // satisfy c.point > -u_s >= c.p_k for every remaining p_k.
  const std::size_t k = rest.size();
  RationalVector c(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    c[i] = result.certificate[k + 1 + i];
  }
  return primitive(c);
}

}  // namespace drtest
