#include "ppcf/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ppcf {

GammaParams::GammaParams(double gamma) : gamma_(gamma) {
  if (!std::isfinite(gamma) || !(gamma > 1.0 / 3.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in the open interval (1/3, 1), got " +
                                std::to_string(gamma));
  }
  c_gamma_ = (1.0 - gamma) * std::pow(2.0 * gamma, gamma / (1.0 - gamma));
  cost_exponent_ = 2.0 * gamma / (gamma - 1.0);
}

GammaParams GammaParams::with_perturbed_cost(double relative) const {
  GammaParams copy = *this;
  copy.c_gamma_ *= 1.0 + relative;
  return copy;
}

double f_cost(double s, const GammaParams& p) {
  if (!(s > 0.0)) throw std::invalid_argument("f_cost requires s > 0");
  return p.c_gamma() * std::pow(s, p.cost_exponent());
}

double phi(double kappa, const GammaParams& p) {
  if (kappa >= 0.0) return 0.0;
  return -std::pow(-kappa, p.gamma());
}

double phi_s(double kappa, double s, const GammaParams& p) {
  return kappa * s * s / 2.0 - f_cost(s, p);
}

double s_maximizer(double kappa, const GammaParams& p) {
  if (!(kappa < 0.0)) {
    throw std::invalid_argument("s_maximizer requires kappa < 0");
  }
  const double g = p.gamma();
  const double base = (g - 1.0) / (2.0 * g * p.c_gamma()) * kappa;
  return std::pow(base, (g - 1.0) / 2.0);
}

namespace {

double alpha1_lower(double g) { return (1.0 - g) / (2.0 * g); }
double alpha1_upper(double g) { return std::min(1.0, (1.0 - g) / g); }
double alpha2_upper(double g, double alpha1) {
  return std::min(alpha1 * 2.0 * g / (1.0 - g) - 1.0, 1.0 / 3.0);
}

}  // namespace

AlphaWindow alpha_window(const GammaParams& p, double alpha1, double alpha2) {
  const double g = p.gamma();
  AlphaWindow w{alpha1_lower(g), alpha1_upper(g), alpha1, 0.0, alpha2};
  if (!(alpha1 > w.m1) || !(alpha1 < w.m2)) {
    throw std::invalid_argument("alpha1 = " + std::to_string(alpha1) + " outside (" +
                                std::to_string(w.m1) + ", " + std::to_string(w.m2) + ")");
  }
  w.m3 = alpha2_upper(g, alpha1);
  if (!(alpha2 > 0.0) || !(alpha2 < w.m3)) {
    throw std::invalid_argument("alpha2 = " + std::to_string(alpha2) + " outside (0, " +
                                std::to_string(w.m3) + ")");
  }
  return w;
}

AlphaWindow alphas_from_scale(const GammaParams& p, double scale) {
  if (!(scale > 0.0) || !(scale < 1.0)) {
    throw std::invalid_argument("scale must lie in (0, 1)");
  }
  const double g = p.gamma();
  const double m1 = alpha1_lower(g);
  const double m2 = alpha1_upper(g);
  const double alpha1 = m1 + scale * (m2 - m1);
  const double m3 = alpha2_upper(g, alpha1);
  return AlphaWindow{m1, m2, alpha1, m3, scale * m3};
}

}  // namespace ppcf
