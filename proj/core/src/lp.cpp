#include "mvdist/lp.hpp"

#include <cmath>

#include "mvdist/error.hpp"

namespace mvdist {
namespace {

template <class T>
T tolerance();
template <>
Scalar tolerance<Scalar>() {
  return 0;
}
template <>
double tolerance<double>() {
  return 1e-9;
}

/// Tableau for min d.x with reduced costs in `cost`; the last column holds the right-hand side.
template <class T>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), cost_(cols + 1), basis_(rows), eps_(tolerance<T>()) {}

  T& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  T& rhs(std::size_t r) { return at(r, cols_); }
  T& cost(std::size_t c) { return cost_[c]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  /// Runs pivots on columns below `limit`; false when unbounded.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost_[j] < -eps_) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows_;
      T best{};
      for (std::size_t i = 0; i < rows_; ++i) {
        const T& a = at(i, enter);
        if (!(a > eps_)) continue;
        T ratio = rhs(i) / a;
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T inv = T(1) / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (at(r, j) != 0) at(r, j) *= inv;
    }
    auto eliminate = [&](T* row) {
      const T f = row[c];
      if (f == 0) return;
      const T* src = &at(r, 0);
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (src[j] != 0) row[j] -= f * src[j];
      }
      row[c] = 0;
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(&at(i, 0));
    }
    eliminate(cost_.data());
    basis_[r] = c;
  }

  std::vector<T> solution(std::size_t n) {
    std::vector<T> x(n);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n) x[basis_[i]] = rhs(i);
    }
    return x;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> cells_;
  std::vector<T> cost_;
  std::vector<std::size_t> basis_;
  T eps_;
};

}  // namespace

template <class T>
LpSolution<T> maximize_leq(const Matrix<T>& a, const std::vector<T>& b, const std::vector<T>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  Tableau<T> tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) throw Error(ErrorKind::internal, "maximize_leq needs a non-negative right-hand side");
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = a[i][j];
    tab.at(i, n + i) = 1;
    tab.rhs(i) = b[i];
    tab.basis(i) = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) tab.cost(j) = -c[j];
  LpSolution<T> out;
  if (!tab.optimize(n + m)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.x = tab.solution(n);
  for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
  return out;
}

template <class T>
std::optional<std::vector<T>> feasible_point(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  Tableau<T> tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      tab.at(i, j) = flip ? T(-a[i][j]) : a[i][j];
      tab.cost(j) -= tab.at(i, j);
    }
    tab.at(i, n + i) = 1;
    tab.rhs(i) = flip ? T(-b[i]) : b[i];
    tab.cost(n + m) -= tab.rhs(i);
    tab.basis(i) = n + i;
  }
  tab.optimize(n);
  if (-tab.cost(n + m) > tolerance<T>()) return std::nullopt;
  return tab.solution(n);
}

template LpSolution<Scalar> maximize_leq(const Matrix<Scalar>&, const std::vector<Scalar>&, const std::vector<Scalar>&);
template LpSolution<double> maximize_leq(const Matrix<double>&, const std::vector<double>&, const std::vector<double>&);
template std::optional<std::vector<Scalar>> feasible_point(const Matrix<Scalar>&, const std::vector<Scalar>&);
template std::optional<std::vector<double>> feasible_point(const Matrix<double>&, const std::vector<double>&);

Inradius inradius_center(const VPolytope& p) {
  if (!p.is_full_dimensional()) throw Error(ErrorKind::domain, "inradius of a lower-dimensional polytope");
  const std::size_t n = p.dim();
  const Point x0 = vertex_centroid(p);
  // Shift to y = x - x0 so the slack basis is feasible; columns y+, y-, r.
  Matrix<Scalar> a;
  std::vector<Scalar> b;
  std::vector<Scalar> bounds;
  bool exact = true;
  for (const auto& f : p.facets()) {
    const Scalar len2 = norm2(f.normal());
    exact = exact && exact_sqrt(len2).has_value();
    bounds.push_back(sqrt_upper_bound(len2, 60));
    std::vector<Scalar> row(2 * n + 1);
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = -f.normal()[k];
      row[n + k] = f.normal()[k];
    }
    row[2 * n] = bounds.back();
    a.push_back(std::move(row));
    b.push_back(f.slack(x0));
  }
  std::vector<Scalar> c(2 * n + 1);
  c[2 * n] = 1;
  const auto sol = maximize_leq(a, b, c);
  if (sol.status != LpStatus::optimal) throw Error(ErrorKind::internal, "Chebyshev LP unbounded");
  Inradius out{sol.x[2 * n], x0, exact};
  for (std::size_t k = 0; k < n; ++k) out.center[k] += sol.x[k] - sol.x[n + k];
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    if (p.facets()[i].slack(out.center) < bounds[i] * out.radius) {
      throw Error(ErrorKind::internal, "Chebyshev center fails its certificate");
    }
  }
  return out;
}

}  // namespace mvdist
