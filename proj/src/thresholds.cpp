#include "sdl/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "sdl/error.hpp"

namespace sdl {

namespace {

void check_theta(double theta, const char* who) {
  if (!(theta >= 0.0) || theta > 1.0)
    fail_usage(std::string(who) + ": theta must lie in [0, 1]");
}

void check_dim(std::size_t d, const char* who) {
  if (d < 2) fail_usage(std::string(who) + ": ambient dimension must be >= 2");
}

}  // namespace

double BetaInputs::a() const {
  double gain = v;  // min{v, v/(2 theta2)}; theta2 = 0 reads the quotient as +inf
  if (theta2 > 0.0) gain = std::min(gain, v / (2.0 * theta2));
  return std::min(0.5 * static_cast<double>(d), gain);
}

namespace {

void check_beta_inputs(const BetaInputs& in, const char* who) {
  check_dim(in.d, who);
  check_theta(in.theta1, who);
  check_theta(in.theta2, who);
  if (!(in.u >= 0.0)) fail_usage(std::string(who) + ": u must be >= 0");
  if (!(in.v >= 0.0)) fail_usage(std::string(who) + ": v must be >= 0");
}

}  // namespace

double beta_thm(const BetaInputs& in) {
  check_beta_inputs(in, "beta_thm");
  const double d = static_cast<double>(in.d);
  if (in.u > d)
    fail_usage("beta_thm: u > d is a separate regime (beta_u_above_d)");
  const double a = in.a();
  if (in.u < d * in.theta1) return (in.u + 2.0 * in.theta1 * a - d * in.theta1) / 2.0;
  return in.u * a / d;
}

double beta_u_above_d(const BetaInputs& in) {
  check_beta_inputs(in, "beta_u_above_d");
  if (!(in.u > static_cast<double>(in.d)))
    fail_usage("beta_u_above_d: requires u > d");
  return in.a();
}

double beta_cor_half(double u, double v, std::size_t d) {
  check_dim(d, "beta_cor_half");
  const double half_d = 0.5 * static_cast<double>(d);
  if (!(u >= 0.0) || u > half_d || !(v >= 0.0) || v > half_d)
    fail_usage("beta_cor_half: requires 0 <= u, v <= d/2");
  return (u + v) / 2.0 - static_cast<double>(d) / 4.0;
}

double beta_theta_zero(double s, double theta, std::size_t d) {
  check_dim(d, "beta_theta_zero");
  check_theta(theta, "beta_theta_zero");
  if (!(s >= 0.0)) fail_usage("beta_theta_zero: s must be >= 0");
  if (theta == 0.0) return s / 2.0;
  return (s - static_cast<double>(d) * theta) / 2.0;
}

double beta_cormain(double s, double theta, std::size_t d) {
  check_dim(d, "beta_cormain");
  check_theta(theta, "beta_cormain");
  if (!(s >= 0.0)) fail_usage("beta_cormain: s must be >= 0");
  const double dd = static_cast<double>(d);
  if (theta == 0.0) return s / 2.0;
  if (theta < 0.5) {
    const double inner = std::min(
        {(s * (1.0 + 2.0 * theta) - dd * theta) / 2.0, s / 2.0, s * s / dd});
    return std::max((s - dd * theta) / 2.0, inner);
  }
  return std::min(s - dd * theta / 2.0, s / 2.0);
}

double beta_cormain_piecewise(double s, double theta, std::size_t d) {
  check_dim(d, "beta_cormain_piecewise");
  check_theta(theta, "beta_cormain_piecewise");
  if (!(s >= 0.0)) fail_usage("beta_cormain_piecewise: s must be >= 0");
  if (theta == 0.0 || theta >= 0.5) return beta_cormain(s, theta, d);
  const double dd = static_cast<double>(d);
  if (s <= dd * theta) return (s * (1.0 + 2.0 * theta) - dd * theta) / 2.0;
  if (s <= dd / 2.0)
    return std::max((s - dd * theta) / 2.0, s * s / dd);
  return s / 2.0;
}

double beta_gamma(double u, double theta1, double gamma, std::size_t d) {
  check_dim(d, "beta_gamma");
  check_theta(theta1, "beta_gamma");
  if (!(u >= 0.0)) fail_usage("beta_gamma: u must be >= 0");
  if (!(gamma > 0.0)) fail_usage("beta_gamma: gamma must be positive");
  return (u + 2.0 * theta1 * gamma - static_cast<double>(d) * theta1) / 2.0;
}

double t_proved(double theta, std::size_t d) {
  check_dim(d, "t_proved");
  check_theta(theta, "t_proved");
  const double dd = static_cast<double>(d);
  const double sd = std::sqrt(dd);
  // branch conditions tested in declaration order; for d < 4 the middle
  // junctions invert (1/sqrt(d) > 1/2) and first match wins
  if (theta < (sd - 2.0) / dd) return 2.0 + dd * theta;
  if (theta < 1.0 / sd) return sd;
  if (theta < 0.5) return (2.0 + dd * theta) / (1.0 + 2.0 * theta);
  return 1.0 + dd * theta / 2.0;
}

double t_conj(double theta, std::size_t d) {
  check_dim(d, "t_conj");
  check_theta(theta, "t_conj");
  return 1.0 + (static_cast<double>(d) / 2.0 - 1.0) * theta;
}

double t_lower(double theta, std::size_t d) {
  check_dim(d, "t_lower");
  check_theta(theta, "t_lower");
  return std::max(static_cast<double>(d) * theta / 2.0, 0.5);
}

std::vector<ThresholdCurvePoint> emit_threshold_table(
    std::size_t d, const std::vector<double>& theta_grid) {
  check_dim(d, "emit_threshold_table");
  if (theta_grid.empty()) fail_usage("emit_threshold_table: empty grid");
  std::vector<double> thetas = theta_grid;
  for (double t : thetas) check_theta(t, "emit_threshold_table");

  const double dd = static_cast<double>(d);
  for (double t : {(std::sqrt(dd) - 2.0) / dd, 1.0 / std::sqrt(dd)})
    if (t > 0.0 && t < 1.0) thetas.push_back(t);
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

  std::vector<ThresholdCurvePoint> out;
  out.reserve(thetas.size());
  for (double t : thetas) {
    ThresholdCurvePoint p;
    p.theta = t;
    p.d = d;
    p.t_proved = t_proved(t, d);
    p.t_conj = t_conj(t, d);
    p.lower = t_lower(t, d);
    p.out_of_hypothesis = d < 4;
    out.push_back(p);
  }
  return out;
}

}  // namespace sdl
