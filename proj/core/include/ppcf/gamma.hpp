#pragma once

// Scalar ingredients of the game for the flow with normal speed
// max(0, kappa)^gamma, 1/3 < gamma < 1.
//
// The speed function phi(kappa) = -|kappa|^gamma (kappa <= 0), 0 otherwise,
// admits the representation
//
//   phi(kappa) = sup_{s > 0} ( kappa s^2 / 2 - f(s) ),   kappa <= 0,
//
// with the cost f(s) = c_gamma s^(2 gamma / (gamma - 1)). The minimizing
// player of the game picks the step size s; f(s) is the normal jump it pays.

namespace ppcf {

class GammaParams {
 public:
  /// Throws std::invalid_argument unless 1/3 < gamma < 1.
  explicit GammaParams(double gamma);

  double gamma() const { return gamma_; }
  /// (1 - gamma) (2 gamma)^(gamma / (1 - gamma))
  double c_gamma() const { return c_gamma_; }
  /// 2 gamma / (gamma - 1), always negative.
  double cost_exponent() const { return cost_exponent_; }

  /// Copy with c_gamma scaled by (1 + relative). Used by self-check
  /// sensitivity tests only.
  GammaParams with_perturbed_cost(double relative) const;

 private:
  double gamma_;
  double c_gamma_;
  double cost_exponent_;
};

inline GammaParams make_gamma_params(double gamma) { return GammaParams(gamma); }

/// c_gamma * s^cost_exponent. Throws for s <= 0.
double f_cost(double s, const GammaParams& p);

/// Speed function: -|kappa|^gamma for kappa <= 0, zero for kappa > 0.
double phi(double kappa, const GammaParams& p);

/// kappa s^2 / 2 - f(s). Throws for s <= 0.
double phi_s(double kappa, double s, const GammaParams& p);

/// The unique maximizer of s -> phi_s(kappa, s) for kappa < 0.
double s_maximizer(double kappa, const GammaParams& p);

/// Admissible exponents of the control interval [eps^alpha1, eps^-alpha2].
struct AlphaWindow {
  double m1;      // (1 - gamma) / (2 gamma), exclusive lower bound of alpha1
  double m2;      // min(1, (1 - gamma) / gamma), exclusive upper bound of alpha1
  double alpha1;
  double m3;      // min(alpha1 * 2 gamma / (1 - gamma) - 1, 1/3), upper bound of alpha2
  double alpha2;
};

/// Validates an explicitly chosen (alpha1, alpha2) pair.
AlphaWindow alpha_window(const GammaParams& p, double alpha1, double alpha2);

/// alpha1 = m1 + scale (m2 - m1), alpha2 = scale * m3, for 0 < scale < 1.
AlphaWindow alphas_from_scale(const GammaParams& p, double scale);

}  // namespace ppcf
