#include <gtest/gtest.h>

#include <cmath>

#include "mvdist/error.hpp"
#include "mvdist/harness.hpp"
#include "support.hpp"

namespace mvdist {
namespace {

using testing::q;

TEST(Schedules, DyadicAndGeometric) {
  EXPECT_EQ(dyadic_schedule(1, 3), (std::vector<Scalar>{q("1/2"), q("1/4"), q("1/8")}));
  const auto g = geometric_schedule(0.5, 1.0 / 1024, 10);
  ASSERT_EQ(g.size(), 10u);
  EXPECT_EQ(g, dyadic_schedule(1, 10));
  const auto h = geometric_schedule(0.3, 0.01, 7);
  ASSERT_EQ(h.size(), 7u);
  for (std::size_t i = 1; i < h.size(); ++i) {
    EXPECT_LT(h[i], h[i - 1]);
    EXPECT_NEAR(to_double(h[i] / h[i - 1]), std::pow(0.01 / 0.3, 1.0 / 6), 1e-12);
  }
  const auto r = scaling_schedule(0.5, 0.5 / 64, 7);
  EXPECT_EQ(r.front(), q("1/2"));
  EXPECT_EQ(r.back(), q("127/128"));
  EXPECT_THROW(geometric_schedule(0.1, 0.2, 8), Error);
  EXPECT_THROW(scaling_schedule(1.5, 0.1, 8), Error);
  const auto [lo, hi] = polygon_window(256);
  EXPECT_NEAR(lo, 10 * polygon_sagitta(256), 1e-18);
  EXPECT_EQ(hi, 0.25);
}

TEST(SweepConfig, Validation) {
  SweepConfig c{.t_min = 0.01, .t_max = 0.5, .steps = 3};
  try {
    validate(c);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config);
  }
  c.steps = 4;
  EXPECT_NO_THROW(validate(c));
  c.t_min = 0.6;
  EXPECT_THROW(validate(c), Error);
  c.t_min = 0;
  EXPECT_THROW(validate(c), Error);
}

TEST(Fit, SyntheticPowerLaw) {
  std::vector<double> x, y;
  for (int i = 0; i < 8; ++i) {
    x.push_back(std::ldexp(1.0, -i));
    y.push_back(3 * x.back() * x.back());
  }
  const SlopeFit f = fit_loglog(x, y);
  EXPECT_NEAR(f.slope, 2, 1e-12);
  EXPECT_NEAR(f.intercept, std::log(3.0), 1e-12);
  EXPECT_NEAR(f.r2, 1, 1e-12);
  EXPECT_EQ(f.rows, 8u);
  EXPECT_THROW(fit_loglog({1, 2, 3}, {1, 2, 3}), Error);
  EXPECT_THROW(fit_loglog({1, 2, 3, 0}, {1, 2, 3, 4}), Error);
}

TEST(Sweep, SquareCsvRoundTrip) {
  const VPolytope sq = testing::unit_square();
  const SweepConfig c{.t_min = 1.0 / 256, .t_max = 0.5, .steps = 8};
  const auto pts = run_sweep(sq, c);
  const std::string csv = family_csv(pts, FamilyKind::cap_slice, sq);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "t,s,h,dH_sq,dH,dG,rhoG,volC,height_ok,cap_volume_ok,double_cap_volume_ok,monotone_ok");
  EXPECT_EQ(family_csv(run_sweep(sq, c), FamilyKind::cap_slice, sq), csv);
  const CsvTable t = parse_csv(csv);
  ASSERT_EQ(t.rows.size(), 8u);
  EXPECT_EQ(t.rows[0][t.column("t")], "1/2");
  for (const auto& row : t.rows) {
    for (const char* flag : {"height_ok", "cap_volume_ok", "double_cap_volume_ok", "monotone_ok"}) {
      EXPECT_EQ(row[t.column(flag)], "1");
    }
  }
  const SlopeFit f = fit_csv(t);
  EXPECT_NEAR(f.slope, 2, 1e-6);
  EXPECT_GT(f.r2, 0.999999);
  const SlopeFit w = fit_csv(t, std::pair{0.01, 0.2});
  EXPECT_EQ(w.rows, 4u);
  EXPECT_THROW(t.column("nope"), Error);
  const std::string svg = svg_plot(t, "square");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(family_csv(pts, FamilyKind::cap_slice, sq), csv);
}

TEST(Sweep, ScalingCsv) {
  const VPolytope sq = testing::unit_square();
  const SweepConfig c{.family = FamilyKind::scaling, .t_min = 1.0 / 64, .t_max = 0.5, .steps = 6};
  const auto pts = run_sweep(sq, c);
  const std::string csv = family_csv(pts, FamilyKind::scaling, sq);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,gap,dH_sq,dH,dG,rhoG,rho_closed_form,closed_form_ok,rho_over_dH,rho_over_dH15");
  const CsvTable t = parse_csv(csv);
  for (const auto& row : t.rows) EXPECT_EQ(row[t.column("closed_form_ok")], "1");
}

TEST(RandomBody, StaysInsideAndIsDeterministic) {
  const VPolytope g = testing::unit_simplex2();
  Rng a(17), b(17);
  for (int i = 0; i < 30; ++i) {
    const VPolytope k = random_body(g, a);
    EXPECT_TRUE(is_subset(k, g));
    EXPECT_EQ(k, random_body(g, b));
  }
}

TEST(Verify, SmallRunAndEmptyRun) {
  const VPolytope sq = testing::unit_square();
  const VerifySummary s = run_verify(sq, 20, 7);
  EXPECT_EQ(s.pairs, 20u);
  EXPECT_EQ(s.reports.size(), 20u);
  EXPECT_EQ(s.violations(), 0u);
  EXPECT_EQ(s.zero_distance_pairs, 0u);
  EXPECT_EQ(run_verify(sq, 20, 7).csv, s.csv);
  EXPECT_EQ(s.csv.substr(0, s.csv.find('\n')), "pair,dG,rhoG,dH_sq,dH,sandwich_ok,upper_ok,lower_ok,lower_rho_ok");
  const VerifySummary empty = run_verify(sq, 0, 7);
  EXPECT_EQ(empty.pairs, 0u);
  EXPECT_EQ(empty.violations(), 0u);
  EXPECT_EQ(empty.triangle.evaluated, 0u);
}

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, 1.0 / 3, 1e-300, 12345.678}) EXPECT_EQ(std::stod(format_double(x)), x);
}

}  // namespace
}  // namespace mvdist
