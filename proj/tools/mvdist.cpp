// Command-line front end: reports, family sweeps, slope fits, verification suites.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mvdist/caps.hpp"
#include "mvdist/error.hpp"
#include "mvdist/estimator.hpp"
#include "mvdist/harness.hpp"
#include "mvdist/polytope_io.hpp"

namespace {

using namespace mvdist;

enum Exit { kOk = 0, kViolations = 1, kParse = 2, kContainment = 3, kConfig = 4, kInternal = 5 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return kParse;
    case ErrorKind::containment:
      return kContainment;
    case ErrorKind::config:
    case ErrorKind::domain:
      return kConfig;
    case ErrorKind::internal:
      return kInternal;
  }
  return kInternal;
}

std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a == std::string::npos) throw Error(ErrorKind::config, "empty entry in '" + text + "'");
    try {
      out.push_back(parse_scalar(item.substr(a, b - a + 1)));
    } catch (const Error& e) {
      throw Error(ErrorKind::config, e.what());
    }
  }
  return out;
}

/// Comma-separated decimals or rationals.
std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find('/') != std::string::npos) {
      for (const auto& q : parse_list(item)) out.push_back(to_double(q));
      continue;
    }
    double v = 0;
    const char* end = item.data() + item.size();
    const char* first = item.data() + std::min(item.find_first_not_of(' '), item.size());
    const auto [ptr, ec] = std::from_chars(first, end, v);
    if (ec != std::errc() || first == end || std::string_view(ptr, end).find_first_not_of(' ') != std::string_view::npos) {
      throw Error(ErrorKind::config, "not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::config, "cannot write " + path);
  out << text;
}

std::string flag_word(bool ok) { return ok ? "ok" : "VIOLATED"; }

void print_report(const MetricReport& r, const ConstantsReport& c) {
  std::printf("n          %zu\n", r.n);
  std::printf("d_G        %s  (%.17g)\n", to_string(r.dg).c_str(), to_double(r.dg));
  std::printf("rho_G      %s  (%.17g)\n", to_string(r.rho).c_str(), to_double(r.rho));
  std::printf("d_H^2      %s\n", to_string(r.dh_sq()).c_str());
  std::printf("d_H        %.17g\n", r.dh());
  if (r.witness.support) {
    auto coords = [](const Point& x) {
      std::string out = "(";
      for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + to_string(x[i]);
      return out + ")";
    };
    std::printf("witness    p=%s q=%s\n", coords(r.witness.p).c_str(), coords(r.witness.q).c_str());
  }
  std::printf("sandwich   d_G <= rho_G <= %s d_G: %s\n", to_string(r.binom).c_str(), flag_word(r.sandwich_ok).c_str());
  std::printf("upper      d_G <= %.17g d_H: %s\n", c.c_upper_value, flag_word(r.upper_ok).c_str());
  std::printf("lower      %.17g d_H^%zu <= d_G: %s\n", c.c_lower, r.n, flag_word(r.lower_ok).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-volume distances between convex polytopes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string body, kfile, lfile, out, svg, dir, family = "cap-slice", placement = "center", box = "auto";
  std::string box_lo, box_hi, csv, window;
  double t_min = 0, t_max = 0, rolling = 0;
  std::size_t steps = 16, pairs = 200, samples = 1000000;
  std::uint64_t seed = 1;
  unsigned proxy_window = 0, m = 256;
  bool dg = false;

  auto* report = app.add_subcommand("report", "exact d_G, rho_G, Hausdorff distance and bound checks for one pair");
  report->add_option("-g,--body", body, "reference body G")->required();
  report->add_option("--k", kfile, "body K")->required();
  report->add_option("--l", lfile, "body L")->required();
  report->add_option("--out", out, "CSV output (default: stdout after the report)");

  auto* sweep = app.add_subcommand("sweep", "cap/slice or scaling family over a geometric schedule");
  sweep->add_option("-g,--body", body, "reference body G")->required();
  sweep->add_option("--dir", dir, "cap direction \"a,b[,c]\" (default: towards the farthest vertex)");
  sweep->add_option("--t-min", t_min, "smallest cap height (scaling: smallest gap 1 - r)")->required();
  sweep->add_option("--t-max", t_max, "largest cap height (scaling: largest gap 1 - r)")->required();
  sweep->add_option("--steps", steps, "schedule length (>= 4)");
  sweep->add_option("--family", family, "cap-slice | scaling")->check(CLI::IsMember({"cap-slice", "scaling"}));
  sweep->add_option("--placement", placement, "scaling origin: center | vertex")->check(CLI::IsMember({"center", "vertex"}));
  sweep->add_option("--seed", seed, "accepted for uniformity; sweeps are deterministic");
  sweep->add_option("--out", out, "CSV output (default: stdout)");
  sweep->add_option("--svg", svg, "also write a log-log plot");

  auto* fit = app.add_subcommand("fit", "least-squares slope of log dG against log dH");
  fit->add_option("csv", csv, "sweep CSV")->required();
  auto* window_opt = fit->add_option("--window", window, "t window \"lo,hi\"");
  fit->add_option("--proxy-window", proxy_window, "use the valid window of the regular m-gon proxy")->excludes(window_opt);

  auto* verify = app.add_subcommand("verify", "random-pair suite: sandwich and both Hoelder bounds");
  verify->add_option("-g,--body", body, "reference body G")->required();
  verify->add_option("--pairs", pairs, "number of random pairs");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--out", out, "per-pair CSV (default: not written)");

  auto* constants = app.add_subcommand("constants", "explicit constants of the Hoelder bounds for G");
  constants->add_option("-g,--body", body, "reference body G")->required();
  constants->add_option("--rolling-radius", rolling, "radius of a ball rolling freely in G (smooth bodies)");

  auto* estimate = app.add_subcommand("estimate", "Monte-Carlo rho_G (and d_G) in any dimension");
  estimate->add_option("-g,--body", body, "reference body G")->required();
  estimate->add_option("--k", kfile, "body K")->required();
  estimate->add_option("--l", lfile, "body L")->required();
  estimate->add_option("--samples", samples, "sample count (>= 1000)");
  estimate->add_option("--seed", seed, "master seed");
  estimate->add_option("--box", box, "auto | explicit")->check(CLI::IsMember({"auto", "explicit"}));
  estimate->add_option("--box-lo", box_lo, "explicit box corner \"a,b,...\"");
  estimate->add_option("--box-hi", box_hi, "explicit box corner \"a,b,...\"");
  estimate->add_flag("--dg", dg, "also estimate d_G by polynomial fit");

  auto* polygon = app.add_subcommand("polygon", "write the regular m-gon proxy of the unit disk");
  polygon->add_option("--m", m, "vertex count (multiple of 8)");
  polygon->add_option("--out", out, "polytope JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*report) {
      const VPolytope g = read_polytope_file(body);
      const VPolytope k = read_polytope_file(kfile);
      const VPolytope l = read_polytope_file(lfile);
      const ConstantsReport c = theoretical_constants(g);
      const MetricReport r = metric_report(g, k, l, c);
      print_report(r, c);
      emit(out, report_csv(r));
    } else if (*sweep) {
      const VPolytope g = read_polytope_file(body);
      SweepConfig config;
      config.family = family == "scaling" ? FamilyKind::scaling : FamilyKind::cap_slice;
      if (!dir.empty()) {
        const auto d = parse_list(dir);
        if (d.size() != g.dim()) throw Error(ErrorKind::config, "--dir has the wrong number of components");
        config.direction = Point(d);
      }
      config.t_min = t_min;
      config.t_max = t_max;
      config.steps = steps;
      config.placement = placement == "vertex" ? Placement::vertex : Placement::chebyshev_center;
      const auto points = run_sweep(g, config);
      const std::string text = family_csv(points, config.family, config.family == FamilyKind::scaling
                                                                      ? place_at_origin(g, config.placement)
                                                                      : g);
      emit(out, text);
      if (!svg.empty()) emit(svg, svg_plot(parse_csv(text), body + " (" + family + ")"));
    } else if (*fit) {
      const CsvTable table = parse_csv(slurp(csv));
      std::optional<std::pair<double, double>> w;
      if (!window.empty()) {
        const auto v = parse_doubles(window);
        if (v.size() != 2 || !(v[0] < v[1])) throw Error(ErrorKind::config, "--window needs \"lo,hi\" with lo < hi");
        w = std::make_pair(v[0], v[1]);
      } else if (proxy_window != 0) {
        w = polygon_window(proxy_window);
      }
      const SlopeFit f = fit_csv(table, w);
      std::printf("slope      %.6f\nintercept  %.6f\nr2         %.6f\nrows       %zu\nwindow     [%.6g, %.6g]\n",
                  f.slope, f.intercept, f.r2, f.rows, f.t_lo, f.t_hi);
      std::printf("residuals ");
      for (double r : f.residuals) std::printf(" %.3e", r);
      std::printf("\n");
    } else if (*verify) {
      const VPolytope g = read_polytope_file(body);
      const VerifySummary s = run_verify(g, pairs, seed);
      if (!out.empty()) emit(out, s.csv);
      std::printf("pairs                 %zu\n", s.pairs);
      std::printf("sandwich violations   %zu\n", s.sandwich_violations);
      std::printf("upper violations      %zu\n", s.upper_violations);
      std::printf("lower violations      %zu\n", s.lower_violations);
      std::printf("lower (rho) violations %zu\n", s.lower_rho_violations);
      std::printf("d_G = 0 with K != L   %zu\n", s.zero_distance_pairs);
      if (s.triangle.max_ratio) {
        std::printf("quasi-triangle max    %.17g over %zu triples (%zu skipped, %zu unbounded)\n",
                    to_double(*s.triangle.max_ratio), s.triangle.evaluated, s.triangle.skipped, s.triangle.unbounded);
      }
      return s.violations() == 0 ? kOk : kViolations;
    } else if (*constants) {
      const VPolytope g = read_polytope_file(body);
      const ConstantsReport c = theoretical_constants(g, rolling > 0 ? std::optional<double>(rolling) : std::nullopt);
      std::printf("n          %zu\n", c.n);
      std::printf("diam       %.17g  (diam^2 = %s)\n", c.diam, to_string(c.diam_sq).c_str());
      std::printf("r_in       %.17g  (%s, %s)\n", c.r_in, c.inradius.exact ? "exact" : "certified lower bound",
                  to_string(c.inradius.radius).c_str());
      std::printf("MV1(G,B)   %s  (%.17g)\n", c.mv1_ball.to_string().c_str(), c.mv1_ball.to_double());
      std::printf("C_upper    %s  (%.17g)\n", c.c_upper.to_string().c_str(), c.c_upper_value);
      std::printf("C_lower    %.17g\n", c.c_lower);
      for (std::size_t k = 0; k < c.omega.size(); ++k) std::printf("omega_%zu    %.17g\n", k, c.omega[k]);
      if (c.c_smooth) {
        std::printf("C_cap      %.17g  (quadrature %.17g, displayed form %.17g)\n", *c.c_cap, *c.c_cap_quadrature,
                    *c.c_cap_displayed);
        std::printf("C_smooth   %.17g\n", *c.c_smooth);
      }
    } else if (*estimate) {
      const VertexData gd = read_vertex_file(body);
      const VertexData kd = read_vertex_file(kfile);
      const VertexData ld = read_vertex_file(lfile);
      const VertexBody g(gd.dim, gd.vertices);
      const VertexBody k(kd.dim, kd.vertices);
      const VertexBody l(ld.dim, ld.vertices);
      std::optional<Box> b;
      if (box == "explicit") {
        if (box_lo.empty() || box_hi.empty()) throw Error(ErrorKind::config, "--box explicit needs --box-lo and --box-hi");
        b = Box{parse_doubles(box_lo), parse_doubles(box_hi)};
        if (b->lo.size() != g.dim() || b->hi.size() != g.dim()) throw Error(ErrorKind::config, "box of wrong dimension");
      }
      const RhoEstimate r = mc_rho_G(g, k, l, samples, seed, b);
      std::printf("Vol(G+K)   %.10g +- %.3g\n", r.gk.mean, r.gk.ci95);
      std::printf("Vol(G+L)   %.10g +- %.3g\n", r.gl.mean, r.gl.ci95);
      std::printf("Vol(G+U)   %.10g +- %.3g\n", r.gu.mean, r.gu.ci95);
      std::printf("rho_G      %.10g +- %.3g  (95%%, %zu samples)\n", r.rho, r.ci95, samples);
      if (dg) {
        const DgEstimate d = mc_d_G(g, k, l, samples, seed);
        std::printf("d_G        %.10g +- %.3g\n", d.dg, d.ci95);
      }
    } else if (*polygon) {
      emit(out, to_json(regular_polygon_proxy(m)) + "\n");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
