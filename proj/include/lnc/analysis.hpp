#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lnc/rings.hpp"

namespace lnc {

struct BoundInputs {
  double d_sq = 0;
  double kissing = 1;
  std::vector<cplx> h;
  std::vector<GaussInt> a;
  double snr = 0;
  double n0 = 0;
  std::optional<cplx> alpha;  // MMSE when absent
};

/// |alpha|^2 + SNR ||alpha h - a||^2.
double effective_noise_factor(std::span<const cplx> h, std::span<const GaussInt> a, double snr, cplx alpha);

/// a M a^H, the minimum of effective_noise_factor over alpha.
double a_m_a(std::span<const cplx> h, std::span<const GaussInt> a, double snr);

/// K exp(-d^2 / (4 N0 Q)) with Q = a M a^H, or Q(a, alpha) for an explicit alpha.
double union_bound_estimate(const BoundInputs& b);

/// K exp(-1.5 gamma_c 2^{-R_mes} SNR / aMa^H) for hypercube shaping.
double union_bound_gain_form(double gamma_c, double kissing, double r_mes, double snr, double a_m_a_h);

}  // namespace lnc
