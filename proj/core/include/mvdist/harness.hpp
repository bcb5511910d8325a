#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvdist/caps.hpp"
#include "mvdist/metrics.hpp"
#include "mvdist/random.hpp"

namespace mvdist {

/// t_max, ..., t_min in `steps` geometric steps (decreasing). Values within
/// 1e-12 of a power of two are snapped to it, so dyadic schedules are exact.
std::vector<Scalar> geometric_schedule(double t_max, double t_min, std::size_t steps);

/// 2^-first, ..., 2^-last.
std::vector<Scalar> dyadic_schedule(unsigned first, unsigned last);

/// 1 - g for each gap g of geometric_schedule(gap_max, gap_min, steps): r climbs towards 1.
std::vector<Scalar> scaling_schedule(double gap_max, double gap_min, std::size_t steps);

/// Valid slope window for the regular m-gon proxy of the unit disk: [10 sagitta, 1/4].
std::pair<double, double> polygon_window(unsigned m);

enum class FamilyKind { cap_slice, scaling };

struct SweepConfig {
  FamilyKind family = FamilyKind::cap_slice;
  /// Cap direction; defaults to family_direction(G).
  std::optional<Point> direction{};
  double t_min = 0;
  double t_max = 0;
  std::size_t steps = 0;
  Placement placement = Placement::chebyshev_center;
};

/// Throws ErrorKind::config for t_min >= t_max, non-positive bounds or steps < 4.
void validate(const SweepConfig& config);

std::vector<FamilyPoint> run_sweep(const VPolytope& g, const SweepConfig& config);

/// Doubles are written with 17 significant digits; exact values as rationals.
std::string format_double(double x);

std::string family_csv(const std::vector<FamilyPoint>& points, FamilyKind kind, const VPolytope& g);
std::string report_csv(const MetricReport& report);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a column; throws ErrorKind::parse if absent.
  std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
  /// Range of the t column used, or of dH when there is no t column.
  double t_lo = 0;
  double t_hi = 0;
  std::size_t rows = 0;
  std::vector<double> residuals;
};

/// Least squares of log y against log x; needs 4 or more positive pairs.
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Fits log dG against log dH over rows whose t lies in [lo, hi].
SlopeFit fit_csv(const CsvTable& table, std::optional<std::pair<double, double>> window = std::nullopt);

/// Log-log plot of dG against dH built from the CSV alone.
std::string svg_plot(const CsvTable& table, const std::string& title);

/// Hull of k uniform points (k in [3, 12]) drawn on the 2^-10 grid of G's
/// bounding box and rejected outside G.
VPolytope random_body(const VPolytope& g, Rng& rng);

struct VerifySummary {
  std::size_t pairs = 0;
  std::size_t sandwich_violations = 0;
  std::size_t upper_violations = 0;
  std::size_t lower_violations = 0;
  std::size_t lower_rho_violations = 0;
  /// Pairs with K != L but d_G = 0.
  std::size_t zero_distance_pairs = 0;
  TriangleProbe triangle;
  ConstantsReport constants;
  std::vector<MetricReport> reports;
  std::string csv;

  std::size_t violations() const {
    return sandwich_violations + upper_violations + lower_violations + lower_rho_violations;
  }
};

/// `pairs` random pairs in G (pair i uses the stream stream_seed(seed, i)),
/// a metric report for each, and a quasi-triangle probe over the triples
/// (K_i, L_i, K_{i+1}).
VerifySummary run_verify(const VPolytope& g, std::size_t pairs, std::uint64_t seed);

}  // namespace mvdist
