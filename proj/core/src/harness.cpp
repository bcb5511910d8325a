#include "mvdist/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mvdist/error.hpp"
#include "mvdist/parallel.hpp"

namespace mvdist {
namespace {

Scalar exact(double x) {
  Scalar q(x);
  return q;
}

/// Exact power of two when x is within 1e-12 (relative) of one.
Scalar snap_dyadic(double x) {
  const double k = std::round(std::log2(x));
  const double p = std::exp2(k);
  if (std::abs(x - p) <= 1e-12 * p) return exact(p);
  return exact(x);
}

const char* flag(bool b) { return b ? "1" : "0"; }

double cell_value(const std::string& cell) {
  try {
    return to_double(parse_scalar(cell));
  } catch (const Error&) {
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used == cell.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::parse, "not a number: '" + cell + "'");
}

}  // namespace

std::vector<Scalar> geometric_schedule(double t_max, double t_min, std::size_t steps) {
  if (!(t_min > 0) || !(t_max > t_min)) throw Error(ErrorKind::config, "schedule needs 0 < t-min < t-max");
  if (steps < 2) throw Error(ErrorKind::config, "schedule needs two or more steps");
  std::vector<Scalar> out;
  const double ratio = std::log(t_min / t_max) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = i + 1 == steps ? t_min : t_max * std::exp(ratio * static_cast<double>(i));
    out.push_back(snap_dyadic(t));
  }
  return out;
}

std::vector<Scalar> dyadic_schedule(unsigned first, unsigned last) {
  std::vector<Scalar> out;
  for (unsigned k = first; k <= last; ++k) out.push_back(Scalar(1, 1) / Scalar(mpz_class(1) << k));
  return out;
}

std::vector<Scalar> scaling_schedule(double gap_max, double gap_min, std::size_t steps) {
  if (gap_max >= 1) throw Error(ErrorKind::config, "scale gaps must lie in (0, 1)");
  std::vector<Scalar> out;
  for (const auto& g : geometric_schedule(gap_max, gap_min, steps)) out.push_back(1 - g);
  return out;
}

std::pair<double, double> polygon_window(unsigned m) { return {10 * polygon_sagitta(m), 0.25}; }

void validate(const SweepConfig& config) {
  if (config.steps < 4) throw Error(ErrorKind::config, "--steps must be at least 4 for a slope fit");
  if (!(config.t_min > 0) || !(config.t_max > config.t_min)) {
    throw Error(ErrorKind::config, "need 0 < --t-min < --t-max");
  }
  if (config.family == FamilyKind::scaling && config.t_max >= 1) {
    throw Error(ErrorKind::config, "scaling gaps 1 - r must lie in (0, 1)");
  }
}

std::vector<FamilyPoint> run_sweep(const VPolytope& g, const SweepConfig& config) {
  validate(config);
  if (config.family == FamilyKind::scaling) {
    return scaling_family(g, scaling_schedule(config.t_max, config.t_min, config.steps), config.placement);
  }
  const Point d = config.direction ? *config.direction : family_direction(g);
  return cap_slice_family(g, d, geometric_schedule(config.t_max, config.t_min, config.steps));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string family_csv(const std::vector<FamilyPoint>& points, FamilyKind kind, const VPolytope& g) {
  std::ostringstream out;
  if (kind == FamilyKind::cap_slice) {
    out << "t,s,h,dH_sq,dH,dG,rhoG,volC,height_ok,cap_volume_ok,double_cap_volume_ok,monotone_ok\n";
    for (const auto& p : points) {
      out << to_string(p.t) << ',' << format_double(to_double(p.t)) << ',' << format_double(p.height) << ','
          << to_string(p.dh_sq) << ',' << format_double(p.dh) << ',' << to_string(p.dg) << ',' << to_string(p.rho)
          << ',' << to_string(p.vol_cap) << ',' << flag(p.height_ok) << ',' << flag(p.cap_volume_ok) << ','
          << flag(p.double_cap_volume_ok) << ',' << flag(p.monotone_ok) << '\n';
    }
    return out.str();
  }
  const std::size_t n = g.dim();
  const Scalar vol = volume(g);
  out << "t,gap,dH_sq,dH,dG,rhoG,rho_closed_form,closed_form_ok,rho_over_dH,rho_over_dH15\n";
  for (const auto& p : points) {
    const Scalar closed = vol * (pow(Scalar(2), static_cast<unsigned>(n)) - pow(1 + p.t, static_cast<unsigned>(n)));
    const double rho = to_double(p.rho);
    out << to_string(p.t) << ',' << to_string(1 - p.t) << ',' << to_string(p.dh_sq) << ',' << format_double(p.dh)
        << ',' << to_string(p.dg) << ',' << to_string(p.rho) << ',' << to_string(closed) << ','
        << flag(p.closed_form_ok) << ',' << format_double(rho / p.dh) << ',' << format_double(rho / std::pow(p.dh, 1.5))
        << '\n';
  }
  return out.str();
}

std::string report_csv(const MetricReport& r) {
  std::ostringstream out;
  out << "n,dG,rhoG,dH_sq,dH,sandwich_ok,upper_ok,lower_ok,lower_rho_ok\n";
  out << r.n << ',' << to_string(r.dg) << ',' << to_string(r.rho) << ',' << to_string(r.dh_sq()) << ','
      << format_double(r.dh()) << ',' << flag(r.sandwich_ok) << ',' << flag(r.upper_ok) << ',' << flag(r.lower_ok)
      << ',' << flag(r.lower_rho_ok) << '\n';
  return out.str();
}

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorKind::parse, "CSV has no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!l.empty() && l.back() == ',') cells.emplace_back();
    return cells;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (table.header.empty()) {
      table.header = split(line);
      continue;
    }
    auto cells = split(line);
    if (cells.size() != table.header.size()) throw Error(ErrorKind::parse, "CSV row of wrong width: " + line);
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty()) throw Error(ErrorKind::parse, "empty CSV");
  return table;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::internal, "fit inputs of different length");
  if (x.size() < 4) throw Error(ErrorKind::config, "a slope fit needs at least 4 rows");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw Error(ErrorKind::config, "slope fit needs positive dH and dG");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const auto m = static_cast<double>(lx.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0;
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) throw Error(ErrorKind::config, "slope fit needs distinct dH values");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    fit.residuals.push_back(r);
    ss_res += r * r;
  }
  fit.r2 = syy == 0 ? 1.0 : std::clamp(1 - ss_res / syy, 0.0, 1.0);
  fit.rows = lx.size();
  fit.t_lo = *std::min_element(x.begin(), x.end());
  fit.t_hi = *std::max_element(x.begin(), x.end());
  return fit;
}

SlopeFit fit_csv(const CsvTable& table, std::optional<std::pair<double, double>> window) {
  const std::size_t dh = table.column("dH");
  const std::size_t dg = table.column("dG");
  const auto t_it = std::find(table.header.begin(), table.header.end(), "t");
  const bool has_t = t_it != table.header.end();
  const std::size_t tc = has_t ? static_cast<std::size_t>(t_it - table.header.begin()) : dh;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> ts;
  for (const auto& row : table.rows) {
    const double t = cell_value(row[tc]);
    if (window && (t < window->first || t > window->second)) continue;
    x.push_back(cell_value(row[dh]));
    y.push_back(cell_value(row[dg]));
    ts.push_back(t);
  }
  SlopeFit fit = fit_loglog(x, y);
  fit.t_lo = *std::min_element(ts.begin(), ts.end());
  fit.t_hi = *std::max_element(ts.begin(), ts.end());
  return fit;
}

std::string svg_plot(const CsvTable& table, const std::string& title) {
  const std::size_t dh = table.column("dH");
  const std::size_t dg = table.column("dG");
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows) {
    const double x = cell_value(row[dh]);
    const double y = cell_value(row[dg]);
    if (x > 0 && y > 0) pts.emplace_back(std::log10(x), std::log10(y));
  }
  constexpr double kW = 640;
  constexpr double kH = 480;
  constexpr double kPad = 60;
  double x0 = 0;
  double x1 = 1;
  double y0 = 0;
  double y1 = 1;
  if (!pts.empty()) {
    x0 = std::floor(std::min_element(pts.begin(), pts.end())->first);
    x1 = std::ceil(std::max_element(pts.begin(), pts.end())->first);
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.second < b.second; });
    y0 = std::floor(lo->second);
    y1 = std::ceil(hi->second);
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
  }
  auto px = [&](double x) { return kPad + (x - x0) / (x1 - x0) * (kW - 2 * kPad); };
  auto py = [&](double y) { return kH - kPad - (y - y0) / (y1 - y0) * (kH - 2 * kPad); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\">" << title
      << "</text>\n";
  out << "<g stroke=\"black\" fill=\"none\"><rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kW - 2 * kPad
      << "\" height=\"" << kH - 2 * kPad << "\"/></g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double d = x0; d <= x1; d += 1) {
    out << "<text x=\"" << px(d) << "\" y=\"" << kH - kPad + 16 << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
  }
  for (double d = y0; d <= y1; d += 1) {
    out << "<text x=\"" << kPad - 6 << "\" y=\"" << py(d) + 4 << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 16 << "\" text-anchor=\"middle\">dH</text>\n";
  out << "<text x=\"16\" y=\"" << kH / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << kH / 2
      << ")\">dG</text>\n</g>\n";
  if (pts.size() >= 2) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (auto& [x, y] : pts) {
      xs.push_back(std::pow(10.0, x));
      ys.push_back(std::pow(10.0, y));
    }
    const auto lx = std::minmax_element(pts.begin(), pts.end());
    if (pts.size() >= 4) {
      const SlopeFit fit = fit_loglog(xs, ys);
      const double a = lx.first->first;
      const double b = lx.second->first;
      const double l10 = std::log(10.0);
      auto line_y = [&](double x) { return (fit.intercept + fit.slope * x * l10) / l10; };
      out << "<line x1=\"" << px(a) << "\" y1=\"" << py(line_y(a)) << "\" x2=\"" << px(b) << "\" y2=\""
          << py(line_y(b)) << "\" stroke=\"steelblue\"/>\n";
      out << "<text x=\"" << kPad + 8 << "\" y=\"" << kPad + 16
          << "\" font-family=\"sans-serif\" font-size=\"12\">slope " << format_double(std::round(fit.slope * 1000) / 1000)
          << "</text>\n";
    }
  }
  for (auto& [x, y] : pts) out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"crimson\"/>\n";
  out << "</svg>\n";
  return out.str();
}

VPolytope random_body(const VPolytope& g, Rng& rng) {
  const BoundingBox box = bounding_box(g);
  const std::size_t n = g.dim();
  const std::size_t k = 3 + rng() % 10;
  constexpr unsigned kGrid = 1024;
  std::vector<Point> pts;
  while (pts.size() < k) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar step = rational(static_cast<long>(rng() % (kGrid + 1)), kGrid);
      p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * step;
    }
    if (contains(g, p)) pts.push_back(std::move(p));
  }
  return convex_hull(std::move(pts), n);
}

VerifySummary run_verify(const VPolytope& g, std::size_t pairs, std::uint64_t seed) {
  VerifySummary out;
  out.pairs = pairs;
  out.constants = theoretical_constants(g);
  std::vector<VPolytope> ks;
  std::vector<VPolytope> ls;
  for (std::size_t i = 0; i < pairs; ++i) {
    Rng rng(stream_seed(seed, i));
    ks.push_back(random_body(g, rng));
    ls.push_back(random_body(g, rng));
  }
  out.reports = parallel_map(pairs, [&](std::size_t i) { return metric_report(g, ks[i], ls[i], out.constants); });
  struct Triangle {
    Scalar km;
    Scalar lm;
  };
  const std::size_t triples = pairs >= 2 ? pairs : 0;
  const auto tri = parallel_map(triples, [&](std::size_t i) {
    const VPolytope& m = ks[(i + 1) % pairs];
    return Triangle{d_G(g, ks[i], m), d_G(g, ls[i], m)};
  });
  for (std::size_t i = 0; i < triples; ++i) out.triangle.record(tri[i].km, out.reports[i].dg + tri[i].lm);
  std::ostringstream csv;
  csv << "pair,dG,rhoG,dH_sq,dH,sandwich_ok,upper_ok,lower_ok,lower_rho_ok\n";
  for (std::size_t i = 0; i < pairs; ++i) {
    const MetricReport& r = out.reports[i];
    out.sandwich_violations += !r.sandwich_ok;
    out.upper_violations += !r.upper_ok;
    out.lower_violations += !r.lower_ok;
    out.lower_rho_violations += !r.lower_rho_ok;
    out.zero_distance_pairs += sgn(r.dg) == 0 && ks[i] != ls[i];
    csv << i << ',' << to_string(r.dg) << ',' << to_string(r.rho) << ',' << to_string(r.dh_sq()) << ','
        << format_double(r.dh()) << ',' << flag(r.sandwich_ok) << ',' << flag(r.upper_ok) << ',' << flag(r.lower_ok)
        << ',' << flag(r.lower_rho_ok) << '\n';
  }
  out.csv = csv.str();
  return out;
}

}  // namespace mvdist
