#include "mvdist/mixed_volume.hpp"

#include <bit>
#include <optional>

#include "mvdist/error.hpp"

namespace mvdist {
namespace {

void require_same_dim(const VPolytope& a, const VPolytope& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::domain, "bodies of different ambient dimension");
}

/// Solves the square system m x = rhs exactly (m nonsingular).
std::vector<Scalar> solve(std::vector<std::vector<Scalar>> m, std::vector<Scalar> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::internal, "singular interpolation system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Scalar f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace

Scalar binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Scalar(out);
}

std::vector<Scalar> steiner_volumes(const VPolytope& g, const VPolytope& k) {
  require_same_dim(g, k);
  const std::size_t n = g.dim();
  std::vector<Scalar> out{volume(g)};
  for (std::size_t t = 1; t <= n; ++t) out.push_back(volume(minkowski_sum(g, scale(k, Scalar(static_cast<long>(t))))));
  return out;
}

SteinerProfile profile_from_volumes(std::size_t n, const std::vector<Scalar>& volumes) {
  if (volumes.size() != n + 1) throw Error(ErrorKind::internal, "need n + 1 samples of the volume polynomial");
  std::vector<std::vector<Scalar>> m(n + 1, std::vector<Scalar>(n + 1));
  for (std::size_t t = 0; t <= n; ++t) {
    Scalar power = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      m[t][j] = power;
      power *= static_cast<long>(t);
    }
  }
  std::vector<Scalar> coef = solve(std::move(m), volumes);
  SteinerProfile out{n, {}};
  for (std::size_t j = 0; j <= n; ++j) {
    out.mv.push_back(coef[j] / binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
  }
  return out;
}

SteinerProfile steiner_profile(const VPolytope& g, const VPolytope& k) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "reference body must be full-dimensional");
  return profile_from_volumes(g.dim(), steiner_volumes(g, k));
}

Scalar mixed_volume_full(const std::vector<VPolytope>& bodies) {
  if (bodies.empty()) throw Error(ErrorKind::domain, "no bodies");
  const std::size_t n = bodies[0].dim();
  if (bodies.size() != n) throw Error(ErrorKind::domain, "mixed volume needs exactly n bodies");
  for (const auto& b : bodies) require_same_dim(bodies[0], b);
  Scalar total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::optional<VPolytope> sum;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      sum = sum ? minkowski_sum(*sum, bodies[i]) : bodies[i];
    }
    const Scalar v = volume(*sum);
    if ((n - std::popcount(mask)) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  for (std::size_t i = 2; i <= n; ++i) total /= static_cast<long>(i);
  return total;
}

RadicalSum mv1_ball(const VPolytope& g) {
  if (!g.is_full_dimensional()) throw Error(ErrorKind::domain, "MV1(G, B) needs a full-dimensional G");
  return surface_measure(g) * rational(1, static_cast<long>(g.dim()));
}

}  // namespace mvdist
