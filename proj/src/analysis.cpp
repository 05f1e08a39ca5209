#include "lnc/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace lnc {

double effective_noise_factor(std::span<const cplx> h, std::span<const GaussInt> a, double snr, cplx alpha) {
  if (h.size() != a.size()) throw std::invalid_argument("h and a must have equal length");
  double s = 0;
  for (std::size_t l = 0; l < h.size(); ++l) s += std::norm(alpha * h[l] - to_complex(a[l]));
  return std::norm(alpha) + snr * s;
}

double a_m_a(std::span<const cplx> h, std::span<const GaussInt> a, double snr) {
  if (h.size() != a.size()) throw std::invalid_argument("h and a must have equal length");
  // Q(a, alpha_opt): a sum of nonnegative terms, free of the cancellation in the closed form
  cplx ah{};
  double hh = 0;
  for (std::size_t l = 0; l < h.size(); ++l) {
    ah += to_complex(a[l]) * std::conj(h[l]);
    hh += std::norm(h[l]);
  }
  if (hh == 0) throw std::invalid_argument("h must be nonzero");
  return effective_noise_factor(h, a, snr, ah * snr / (hh * snr + 1.0));
}

double union_bound_estimate(const BoundInputs& b) {
  if (b.d_sq < 0 || b.kissing < 0 || !(b.n0 > 0)) throw std::invalid_argument("invalid union bound inputs");
  const double q = b.alpha ? effective_noise_factor(b.h, b.a, b.snr, *b.alpha) : a_m_a(b.h, b.a, b.snr);
  return b.kissing * std::exp(-b.d_sq / (4.0 * b.n0 * q));
}

double union_bound_gain_form(double gamma_c, double kissing, double r_mes, double snr, double a_m_a_h) {
  return kissing * std::exp(-1.5 * gamma_c * std::exp2(-r_mes) * snr / a_m_a_h);
}

}  // namespace lnc
