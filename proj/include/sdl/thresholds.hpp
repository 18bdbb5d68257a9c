#pragma once
#include <cstddef>
#include <vector>

namespace sdl {

// Inputs of the two-measure pinned lower bound. u is the theta1-spectrum
// value of the pinning measure, v the theta2-spectrum value of the pinned
// one; the derived gain is a = min{d/2, v, v/(2*theta2)}, where theta2 = 0
// reads v/(2*theta2) as +infinity.
struct BetaInputs {
  double u = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double v = 0.0;
  std::size_t d = 2;

  double a() const;
};

// Lower bound for the dimension of pinned distance sets:
//   (u + 2*theta1*a - d*theta1)/2   for 0 <= u < d*theta1,
//   u*a/d                           for d*theta1 <= u <= d.
// The branches agree at u = d*theta1 (both give theta1*a). Requires
// u <= d; the u > d regime is a separate statement (beta_u_above_d).
double beta_thm(const BetaInputs& inp);

// Convention for u > d: the bound is simply a (that regime already forces
// positive Lebesgue measure of the distance set, so no curve is needed).
double beta_u_above_d(const BetaInputs& inp);

// Symmetric half-spectrum corollary: (u + v)/2 - d/4 for u, v <= d/2.
// Equals beta_thm at theta1 = theta2 = 1/2 on its whole domain.
double beta_cor_half(double u, double v, std::size_t d);

// Single-measure bound from the s = dim_F^theta value alone:
// s/2 at theta = 0, (s - d*theta)/2 for theta > 0.
double beta_theta_zero(double s, double theta, std::size_t d);

// Combined single-measure bound, three cases in theta:
//   theta = 0:        s/2
//   0 < theta < 1/2:  max{(s-d*theta)/2, min{(s(1+2*theta)-d*theta)/2,
//                                            s/2, s^2/d}}
//   1/2 <= theta <= 1: min{s - d*theta/2, s/2}
double beta_cormain(double s, double theta, std::size_t d);

// Equivalent piecewise-in-s form of the middle regime (it splits at
// s = d*theta and s = d/2); outside 0 < theta < 1/2 it coincides with
// beta_cormain. Kept as a second literal code path so the claimed
// equivalence stays testable.
double beta_cormain_piecewise(double s, double theta, std::size_t d);

// Interpolation exponent of the averaged pinned-transform decay:
// (u + 2*theta1*gamma - d*theta1)/2 for a caller-chosen 0 < gamma <= a.
double beta_gamma(double u, double theta1, double gamma, std::size_t d);

// Full-dimension threshold curves on theta in [0, 1].
//
// t_proved is the four-branch curve
//   2 + d*theta            on [0, (sqrt(d)-2)/d)
//   sqrt(d)                on [(sqrt(d)-2)/d, 1/sqrt(d))
//   (2+d*theta)/(1+2*theta) on [1/sqrt(d), 1/2)
//   1 + d*theta/2          on [1/2, 1]
// continuous at all three junctions. It is stated for d >= 4; for d = 2, 3
// the middle junctions invert (1/sqrt(d) > 1/2) and the branches are taken
// in written order (see emit_threshold_table's out_of_hypothesis flag).
double t_proved(double theta, std::size_t d);

// The conjectural affine model 1 + (d/2 - 1)*theta.
double t_conj(double theta, std::size_t d);

// Known lower bound for the threshold: max{d*theta/2, 1/2}.
double t_lower(double theta, std::size_t d);

struct ThresholdCurvePoint {
  double theta = 0.0;
  std::size_t d = 2;
  double t_proved = 0.0;
  double t_conj = 0.0;
  double lower = 0.0;
  bool out_of_hypothesis = false;  // d < 4: curve evaluated outside its
                                   // stated hypothesis
};

// The three curves tabulated over the given grid, with the two interior
// transition abscissae (sqrt(d)-2)/d and 1/sqrt(d) inserted as exact grid
// points whenever they fall inside (0, 1).
std::vector<ThresholdCurvePoint> emit_threshold_table(
    std::size_t d, const std::vector<double>& theta_grid);

}  // namespace sdl
