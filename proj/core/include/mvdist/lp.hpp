#pragma once

#include <optional>
#include <vector>

#include "mvdist/polytope.hpp"

namespace mvdist {

/// Dense simplex solver (Bland's rule), instantiated for Scalar (exact) and
/// double (tolerance 1e-9).
template <class T>
using Matrix = std::vector<std::vector<T>>;

enum class LpStatus { optimal, unbounded };

template <class T>
struct LpSolution {
  LpStatus status = LpStatus::optimal;
  std::vector<T> x;
  T objective{};
};

/// max c.x subject to A x <= b, x >= 0; requires b >= 0 so the slack basis is feasible.
template <class T>
LpSolution<T> maximize_leq(const Matrix<T>& a, const std::vector<T>& b, const std::vector<T>& c);

/// Some x >= 0 with A x = b, or nullopt.
template <class T>
std::optional<std::vector<T>> feasible_point(const Matrix<T>& a, const std::vector<T>& b);

extern template LpSolution<Scalar> maximize_leq(const Matrix<Scalar>&, const std::vector<Scalar>&,
                                                const std::vector<Scalar>&);
extern template LpSolution<double> maximize_leq(const Matrix<double>&, const std::vector<double>&,
                                                const std::vector<double>&);
extern template std::optional<std::vector<Scalar>> feasible_point(const Matrix<Scalar>&, const std::vector<Scalar>&);
extern template std::optional<std::vector<double>> feasible_point(const Matrix<double>&, const std::vector<double>&);

struct Inradius {
  /// Equal to the inradius when `exact`, otherwise a rational lower bound
  /// within a relative 1e-15 of it.
  Scalar radius;
  Point center;
  bool exact = false;
};

/// Chebyshev center of a full-dimensional polytope.
Inradius inradius_center(const VPolytope& p);

}  // namespace mvdist
