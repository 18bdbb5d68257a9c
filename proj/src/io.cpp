#include "sdl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "sdl/error.hpp"

namespace sdl {

namespace {

using ordered_json = nlohmann::ordered_json;

// nlohmann already maps non-finite doubles to null; this wrapper only names
// the intent at the call sites.
ordered_json num_or_null(double v) { return ordered_json(v); }

ordered_json fit_json(const DecayFit& f) {
  ordered_json j;
  j["exponent"] = num_or_null(f.exponent);
  j["intercept"] = num_or_null(f.intercept);
  j["r_min"] = num_or_null(f.r_min);
  j["r_max"] = num_or_null(f.r_max);
  j["n_points"] = f.n_points;
  j["rms_residual"] = num_or_null(f.rms_residual);
  return j;
}

ordered_json energy_json(const EnergyReport& r) {
  ordered_json j;
  j["s"] = num_or_null(r.s);
  j["theta"] = num_or_null(r.theta);
  j["value"] = num_or_null(r.value);
  j["infinite"] = r.infinite;
  j["method"] = r.method == EnergyReport::Method::real_space
                    ? "real_space"
                    : "frequency_shells";
  j["r_min"] = num_or_null(r.r_min);
  j["r_max"] = num_or_null(r.r_max);
  j["tail_slope"] = num_or_null(r.tail_slope);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Plot geometry shared by the SVG helpers below.
constexpr double kW = 640.0, kH = 400.0;
constexpr double kL = 56.0, kR = 16.0, kT = 16.0, kB = 44.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string polyline(const std::vector<ThresholdCurvePoint>& rows,
                     double ThresholdCurvePoint::*field, double t_max,
                     const char* stroke, const char* dash) {
  std::string points;
  for (const auto& r : rows) {
    const double x = kL + r.theta * (kW - kL - kR);
    const double y = (kH - kB) - (r.*field / t_max) * (kH - kT - kB);
    points += px(x) + "," + px(y) + " ";
  }
  if (!points.empty()) points.pop_back();
  std::string el = "  <polyline fill=\"none\" stroke=\"";
  el += stroke;
  el += "\" stroke-width=\"2\"";
  if (dash[0] != '\0') el += std::string(" stroke-dasharray=\"") + dash + "\"";
  el += " points=\"" + points + "\"/>\n";
  return el;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // snprintf honors the global locale's decimal point; artifacts are pinned
  // to '.' regardless of what the host process set.
  for (char* c = buf; *c; ++c)
    if (*c == ',') *c = '.';
  return buf;
}

std::string csv_of_measure(const DiscreteMeasure& m) {
  std::string out;
  for (std::size_t t = 0; t < m.dim(); ++t)
    out += "x" + std::to_string(t + 1) + ",";
  out += "weight\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double* p = m.position(i);
    for (std::size_t t = 0; t < m.dim(); ++t) out += format_double(p[t]) + ",";
    out += format_double(m.weight(i)) + "\n";
  }
  return out;
}

std::string csv_of_shells(const std::vector<ShellStat>& shells) {
  std::string out = "r,p,mean_pow,sup_pow,n_dirs\n";
  for (const auto& s : shells) {
    out += format_double(s.radius) + "," + format_double(s.p) + "," +
           format_double(s.mean_pow) + "," + format_double(s.sup_pow) + "," +
           std::to_string(s.n_dirs) + "\n";
  }
  return out;
}

std::string csv_of_profile(const SpectrumProfile& p) {
  std::string out = "theta,s_est,exponent,r_min,r_max,n_shells,n_dirs,rms_residual\n";
  for (const auto& e : p.entries) {
    out += format_double(e.theta) + "," + format_double(e.s_est) + "," +
           format_double(e.fit.exponent) + "," + format_double(e.fit.r_min) +
           "," + format_double(e.fit.r_max) + "," +
           std::to_string(e.fit.n_points) + "," + std::to_string(p.n_dirs) +
           "," + format_double(e.fit.rms_residual) + "\n";
  }
  return out;
}

std::string csv_of_adecay_table(const ADecayTable& t) {
  std::string out = "tau,a_avg,a_kernel\n";
  for (const auto& r : t.rows)
    out += format_double(r.tau) + "," + format_double(r.a_avg) + "," +
           format_double(r.a_kernel) + "\n";
  return out;
}

std::string csv_of_adecay_curve(const ADecayReport& r) {
  std::string out = "tau,a_avg\n";
  for (const auto& [tau, a] : r.curve)
    out += format_double(tau) + "," + format_double(a) + "\n";
  return out;
}

std::string csv_of_distances(const DistanceSample& s) {
  std::string out = "value\n";
  for (double v : s.values) out += format_double(v) + "\n";
  return out;
}

std::string csv_of_boxcurve(const BoxCountCurve& c) {
  std::string out = "epsilon,count\n";
  for (const auto& r : c.rows)
    out += format_double(r.epsilon) + "," + std::to_string(r.count) + "\n";
  return out;
}

std::string csv_of_thresholds(const std::vector<ThresholdCurvePoint>& rows) {
  std::string out = "theta,t_proved,t_conj,t_lower\n";
  for (const auto& r : rows)
    out += format_double(r.theta) + "," + format_double(r.t_proved) + "," +
           format_double(r.t_conj) + "," + format_double(r.lower) + "\n";
  return out;
}

std::string json_of_distance_meta(const DistanceSample& s) {
  ordered_json j;
  j["count"] = s.values.size();
  j["squared"] = s.squared;
  j["source_e"] = s.source_e;
  j["source_f"] = s.source_f;
  j["pin"] = s.pin;
  return dump(j);
}

std::string json_of_energy(const EnergyReport& r) { return dump(energy_json(r)); }

std::string json_of_equivalence(const EquivalenceRatio& r) {
  ordered_json j;
  j["real"] = energy_json(r.real_side);
  j["freq"] = energy_json(r.freq_side);
  j["ratio"] = num_or_null(r.ratio);
  j["valid"] = r.valid;
  j["status"] = r.status;
  return dump(j);
}

std::string json_of_fit(const DecayFit& f) { return dump(fit_json(f)); }

std::string json_of_experiment(const ExperimentReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["seed"] = r.seed;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  ordered_json metrics = ordered_json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = num_or_null(v);
  j["metrics"] = metrics;
  ordered_json asserts = ordered_json::array();
  for (const auto& a : r.assertions) {
    ordered_json e;
    e["label"] = a.label;
    e["lhs"] = num_or_null(a.lhs);
    e["rhs"] = num_or_null(a.rhs);
    e["op"] = a.op;
    e["pass"] = a.pass;
    asserts.push_back(e);
  }
  j["assertions"] = asserts;
  j["verdict"] = verdict_name(r.verdict);
  j["artifacts"] = r.artifacts;
  j["notes"] = r.notes;
  return dump(j);
}

std::string svg_of_thresholds(const std::vector<ThresholdCurvePoint>& rows) {
  if (rows.empty()) fail_usage("svg_of_thresholds: empty table");
  double t_max = 0.0;
  for (const auto& r : rows) t_max = std::max(t_max, r.t_proved);
  t_max = std::ceil(t_max * 1.05);
  if (t_max <= 0.0) t_max = 1.0;
  const std::size_t d = rows.front().d;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"0 0 640 400\" width=\"640\" height=\"400\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";

  // Axes with ticks: theta quarters on x, integer steps on y.
  const double x0 = kL, x1 = kW - kR, y0 = kH - kB, y1 = kT;
  svg += "  <line x1=\"" + px(x0) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x1) +
         "\" y2=\"" + px(y0) + "\" stroke=\"black\"/>\n";
  svg += "  <line x1=\"" + px(x0) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x0) +
         "\" y2=\"" + px(y1) + "\" stroke=\"black\"/>\n";
  for (int q = 0; q <= 4; ++q) {
    const double theta = q / 4.0;
    const double x = x0 + theta * (x1 - x0);
    svg += "  <line x1=\"" + px(x) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x) +
           "\" y2=\"" + px(y0 + 5) + "\" stroke=\"black\"/>\n";
    char lab[16];
    std::snprintf(lab, sizeof lab, "%.2f", theta);
    svg += "  <text x=\"" + px(x) + "\" y=\"" + px(y0 + 20) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">" + lab + "</text>\n";
  }
  const int y_step = std::max(1, static_cast<int>(std::lround(t_max / 6.0)));
  for (int t = 0; t <= static_cast<int>(t_max); t += y_step) {
    const double y = y0 - (t / t_max) * (y0 - y1);
    svg += "  <line x1=\"" + px(x0 - 5) + "\" y1=\"" + px(y) + "\" x2=\"" +
           px(x0) + "\" y2=\"" + px(y) + "\" stroke=\"black\"/>\n";
    svg += "  <text x=\"" + px(x0 - 9) + "\" y=\"" + px(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">" + std::to_string(t) + "</text>\n";
  }
  svg += "  <text x=\"" + px((x0 + x1) / 2) + "\" y=\"" + px(kH - 8) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\">theta</text>\n";

  // Interior transition markers of the proved curve, when they fall in (0,1).
  const double root = std::sqrt(static_cast<double>(d));
  for (double mark : {(root - 2.0) / static_cast<double>(d), 1.0 / root}) {
    if (!(mark > 0.0) || !(mark < 1.0)) continue;
    const double x = x0 + mark * (x1 - x0);
    svg += "  <line x1=\"" + px(x) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x) +
           "\" y2=\"" + px(y1) +
           "\" stroke=\"#999999\" stroke-dasharray=\"3,4\"/>\n";
  }

  svg += polyline(rows, &ThresholdCurvePoint::t_proved, t_max, "#1f77b4", "");
  svg += polyline(rows, &ThresholdCurvePoint::t_conj, t_max, "#d62728", "6,4");
  svg += polyline(rows, &ThresholdCurvePoint::lower, t_max, "#2ca02c", "2,3");

  const char* names[3] = {"proved", "conjectural", "lower bound"};
  const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
  for (int i = 0; i < 3; ++i) {
    const double y = kT + 16.0 + 18.0 * i;
    svg += "  <line x1=\"" + px(x0 + 12) + "\" y1=\"" + px(y - 4) + "\" x2=\"" +
           px(x0 + 40) + "\" y2=\"" + px(y - 4) + "\" stroke=\"" + colors[i] +
           "\" stroke-width=\"2\"/>\n";
    svg += "  <text x=\"" + px(x0 + 46) + "\" y=\"" + px(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + names[i] +
           "</text>\n";
  }
  svg += "  <text x=\"" + px(x1) + "\" y=\"" + px(kT + 12) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"end\">d = " + std::to_string(d) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail_usage("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) fail_usage("write failed: " + path);
}

}  // namespace sdl
