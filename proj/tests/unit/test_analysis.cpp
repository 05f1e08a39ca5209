#include <cmath>

#include "doctest.h"
#include "lnc/analysis.hpp"
#include "lnc/coeffs.hpp"
#include "lnc/constructions.hpp"
#include "support.hpp"

using namespace lnc;

namespace {

std::vector<cplx> random_h(std::size_t n) {
  std::vector<cplx> h(n);
  for (auto& x : h) x = {test::uniform_real(-2, 2), test::uniform_real(-2, 2)};
  return h;
}

}  // namespace

TEST_CASE("union bound estimate") {
  BoundInputs b{0.0, 1.0, {1.0}, {GaussInt{1}}, 1.0, 1.0, std::nullopt};
  CHECK(union_bound_estimate(b) == doctest::Approx(1.0));

  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_h(2);
    const std::vector<GaussInt> a{test::random_nonzero<GaussInt>(3), test::random_element<GaussInt>(3)};
    const double snr = std::pow(10.0, test::uniform_real(-1, 3));
    const auto ctx = GramContext::from_channel(h, snr);
    CHECK(a_m_a(h, a, snr) == doctest::Approx(ctx.quadratic_form(a)).epsilon(1e-9));

    BoundInputs in{test::uniform_real(0.5, 10), 4.0, h, a, snr, 1.5 / snr, std::nullopt};
    const double m_form = union_bound_estimate(in);
    cplx ah{};
    double hh = 0;
    for (std::size_t l = 0; l < 2; ++l) {
      ah += to_complex(a[l]) * std::conj(h[l]);
      hh += std::norm(h[l]);
    }
    in.alpha = ah * snr / (hh * snr + 1);
    CHECK(union_bound_estimate(in) == doctest::Approx(m_form).epsilon(1e-9));
    for (int g = 0; g < 50; ++g) {
      in.alpha = *in.alpha + cplx{test::uniform_real(-0.3, 0.3), test::uniform_real(-0.3, 0.3)};
      CHECK(union_bound_estimate(in) >= m_form * (1 - 1e-12));
    }
  }
}

TEST_CASE("union bound monotonicity") {
  const std::vector<cplx> h{{1, 0}, {0, 1}};
  const std::vector<GaussInt> a{GaussInt{1}, GaussInt{0, 1}};
  double prev = 2;
  for (double d = 0.5; d < 5; d += 0.5) {
    const double u = union_bound_estimate({d, 1.0, h, a, 10.0, 0.15, std::nullopt});
    CHECK(u < prev);
    prev = u;
  }
  prev = 2;
  for (double snr_db = 0; snr_db <= 30; snr_db += 2) {
    const double snr = std::pow(10.0, snr_db / 10);
    const double u = union_bound_estimate({1.0, 1.0, h, a, snr, 1.5 / snr, std::nullopt});
    CHECK(u < prev);
    prev = u;
  }
}

TEST_CASE("gain form of the union bound") {
  // baseline pi = 3: d^2 = 1, gamma_c = 1, R_mes = log2 9, P = 9 / 6
  const auto g = catalog_gain("baseline-pi3");
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = random_h(2);
    const std::vector<GaussInt> a{test::random_nonzero<GaussInt>(2), test::random_nonzero<GaussInt>(2)};
    const double snr = std::pow(10.0, test::uniform_real(0, 3));
    const double q = a_m_a(h, a, snr);
    const double direct = union_bound_estimate({g.d_sq.lower, g.kissing.lower, h, a, snr, 1.5 / snr, std::nullopt});
    const double gain = union_bound_gain_form(g.gamma_c, g.kissing.lower, g.r_mes, snr, q);
    CHECK(gain == doctest::Approx(direct).epsilon(1e-9));
    const double doubled = union_bound_gain_form(2 * g.gamma_c, 1.0, g.r_mes, snr, q);
    const double single = union_bound_gain_form(g.gamma_c, 1.0, g.r_mes, snr, q);
    CHECK(std::log(doubled) == doctest::Approx(2 * std::log(single)).epsilon(1e-9));
  }
  CHECK(union_bound_gain_form(3.0, 7.0, 200.0, 100.0, 1.0) == doctest::Approx(7.0));
}
