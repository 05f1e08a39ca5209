#include <cmath>

#include "doctest.h"
#include "lnc/codec.hpp"
#include "support.hpp"

using namespace lnc;

namespace {

NestedPair scaled_integer_pair(std::size_t n, GaussInt pi) {
  LatticeQuotient<GaussInt> q;
  q.g_fine = Matrix<GaussInt>::identity(n);
  q.j = Matrix<GaussInt>(n, n);
  for (std::size_t i = 0; i < n; ++i) q.j(i, i) = pi;
  auto l = build_labeling(q);
  return NestedPair{"baseline", std::move(q), std::move(l), {}};
}

LncScheme baseline(std::size_t n, std::optional<std::uint64_t> seed = std::nullopt) {
  return LncScheme::coordinate("baseline", construct_a_complex(trivial_code(GaussInt{3}, n)), seed);
}

LncScheme small_trellis(std::size_t nu, std::size_t mu, std::optional<std::uint64_t> seed = std::nullopt) {
  auto enc = table_encoder(nu);
  auto pair = construct_a_complex(terminated_code(enc, mu));
  return LncScheme::trellis("conv", std::move(pair), TrellisQuantizer{enc, mu}, seed);
}

Message<GaussInt> residue_message(std::initializer_list<GaussInt> xs, GaussInt pi) {
  Message<GaussInt> m;
  for (const auto& x : xs) m.components.emplace_back(x, pi);
  return m;
}

double mod3_norm(cplx x) {
  const cplx r = x - 3.0 * to_complex(round_to_ring(x / 3.0));
  return std::norm(r);
}

std::vector<GaussInt> field3() {
  std::vector<GaussInt> v;
  for (i64 a = -1; a <= 1; ++a)
    for (i64 b = -1; b <= 1; ++b) v.push_back({a, b});
  return v;
}

// exhaustive minimum of sum |(c - t) mod 3|^2 over all codewords
double exhaustive_metric(const ConvEncoder& enc, std::size_t mu, std::span<const cplx> t) {
  const auto f = field3();
  std::vector<std::size_t> idx(mu, 0);
  double best = 1e300;
  for (;;) {
    std::vector<GaussInt> in(mu);
    for (std::size_t i = 0; i < mu; ++i) in[i] = f[idx[i]];
    const auto c = conv_encode(enc, in);
    double m = 0;
    for (std::size_t j = 0; j < c.size(); ++j) m += mod3_norm(to_complex(c[j]) - t[j]);
    best = std::min(best, m);
    std::size_t p = 0;
    while (p < mu && ++idx[p] == f.size()) idx[p++] = 0;
    if (p == mu) break;
  }
  return best;
}

std::vector<cplx> random_target(std::size_t n, double spread) {
  std::vector<cplx> t(n);
  for (auto& v : t) v = {test::uniform_real(-spread, spread), test::uniform_real(-spread, spread)};
  return t;
}

}  // namespace

TEST_CASE("encoder without dither") {
  const auto s = baseline(4);
  const auto f = encode(s, s.labeling().zero(), 0, 0);
  for (const auto& v : f.x) CHECK(v == cplx{});

  const auto s1 = baseline(1);
  const auto g = encode(s1, residue_message({GaussInt{2}}, GaussInt{3}), 0, 0);
  CHECK(g.x[0] == cplx{-1, 0});
  CHECK(s1.gamma() == doctest::Approx(3.0));
  CHECK(s1.power() == doctest::Approx(4.0 / 3.0));
  CHECK(baseline(1, 5).power() == doctest::Approx(1.5));
}

TEST_CASE("dither is keyed, uniform over the shaping region and reproducible") {
  const auto s = baseline(64, 99);
  const auto d = s.dither(1, 7);
  CHECK(d == s.dither(1, 7));
  CHECK(d != s.dither(1, 8));
  CHECK(d != s.dither(0, 7));
  double mean_energy = 0;
  for (std::uint64_t fr = 0; fr < 200; ++fr)
    for (const auto& v : s.dither(0, fr)) {
      CHECK(std::abs(v.real()) <= 1.5);
      CHECK(std::abs(v.imag()) <= 1.5);
      mean_energy += std::norm(v);
    }
  mean_energy /= 200.0 * 64.0;
  CHECK(mean_energy == doctest::Approx(1.5).epsilon(0.03));
}

TEST_CASE("encoder output stays in the centered hypercube and round-trips") {
  for (const auto& s : {baseline(3, 11), small_trellis(1, 3, 12), small_trellis(2, 2, 13)}) {
    const double half = s.gamma() / 2;
    for (std::uint64_t fr = 0; fr < 1000; ++fr) {
      const auto w = random_message(s, 5, 0, fr);
      const auto f = encode(s, w, 0, fr);
      std::vector<cplx> t(s.n());
      for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(std::abs(f.x[i].real()) <= half + 1e-12);
        CHECK(std::abs(f.x[i].imag()) <= half + 1e-12);
        t[i] = f.x[i] - f.dither[i];
      }
      REQUIRE(s.labeling().label(s.quantize(t)) == w);
    }
  }
}

TEST_CASE("mmse alpha") {
  const std::vector<cplx> h1{1.0};
  const std::vector<GaussInt> a1{GaussInt{1}};
  CHECK(std::abs(mmse_alpha(h1, a1, 1.0) - cplx{0.5, 0}) < 1e-15);

  const std::vector<cplx> h2{{1, 0}, {0, 1}};
  const std::vector<GaussInt> a2{GaussInt{1}, GaussInt{0, 1}};
  CHECK(std::abs(mmse_alpha(h2, a2, 1e12) - cplx{1, 0}) < 1e-9);

  CHECK_THROWS_AS(mmse_alpha(h1, a1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mmse_alpha(std::vector<cplx>{0.0}, a1, 1.0), std::invalid_argument);

  // grid oracle for |alpha|^2 + SNR ||alpha h - a||^2
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> h{{test::uniform_real(-2, 2), test::uniform_real(-2, 2)},
                        {test::uniform_real(-2, 2), test::uniform_real(-2, 2)}};
    std::vector<GaussInt> a{test::random_element<GaussInt>(2), test::random_nonzero<GaussInt>(2)};
    const double snr = std::pow(10.0, test::uniform_real(-1, 2));
    const auto q = [&](cplx al) {
      double s = 0;
      for (std::size_t l = 0; l < 2; ++l) s += std::norm(al * h[l] - to_complex(a[l]));
      return std::norm(al) + snr * s;
    };
    const cplx best = mmse_alpha(h, a, snr);
    double grid = 1e300;
    for (int i = 0; i <= 200; ++i)
      for (int j = 0; j <= 200; ++j) {
        const cplx al = best + cplx{(i - 100) * 0.01, (j - 100) * 0.01};
        grid = std::min(grid, q(al));
      }
    CHECK(q(best) <= grid + 1e-12);
  }
}

TEST_CASE("noiseless decoding of all message pairs") {
  for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{3}}) {
    const auto s = baseline(1, seed);
    const std::vector<cplx> h{1.0, 1.0};
    const std::vector<GaussInt> a{GaussInt{1}, GaussInt{1}};
    int pairs = 0;
    for (const auto& x1 : field3())
      for (const auto& x2 : field3()) {
        const auto w1 = residue_message({x1}, GaussInt{3}), w2 = residue_message({x2}, GaussInt{3});
        const auto f1 = encode(s, w1, 0, pairs), f2 = encode(s, w2, 1, pairs);
        const std::vector<cplx> y{f1.x[0] + f2.x[0]};
        const std::vector<std::vector<cplx>> d{f1.dither, f2.dither};
        CHECK(decode(s, y, h, a, d, 1e15) == w1 + w2);
        ++pairs;
      }
    CHECK(pairs == 81);
  }
}

TEST_CASE("QPSK over Z[i]/<2> with h = a = [1, i] resolves every pair") {
  const auto s = LncScheme::coordinate("qpsk", scaled_integer_pair(1, GaussInt{2}), std::nullopt);
  REQUIRE(s.labeling().size() == 4);
  const std::vector<cplx> h{{1, 0}, {0, 1}};
  const std::vector<GaussInt> a{GaussInt{1}, GaussInt{0, 1}};
  const std::vector<GaussInt> qpsk{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<std::vector<cplx>> dz{{cplx{}}, {cplx{}}};
  for (const auto& x1 : qpsk)
    for (const auto& x2 : qpsk) {
      const auto w1 = residue_message({x1}, GaussInt{2}), w2 = residue_message({x2}, GaussInt{2});
      const auto f = w1 + GaussInt{0, 1} * w2;
      const auto e1 = encode(s, w1, 0, 0), e2 = encode(s, w2, 1, 0);
      const std::vector<cplx> y{e1.x[0] + cplx{0, 1} * e2.x[0]};
      CHECK(decode(s, y, h, a, dz, 1e15) == f);

      const std::vector<Residue<GaussInt>> r1{w1.components[0]}, r2{w2.components[0]};
      const auto q1 = qam_encode(r1, 2, 1.0), q2 = qam_encode(r2, 2, 1.0);
      const std::vector<cplx> yq{q1[0] + cplx{0, 1} * q2[0]};
      CHECK(qam_pnc_decode(yq, h, a, 2, 1.0)[0] == f.components[0]);
    }
}

TEST_CASE("9-QAM network coding decoder") {
  const std::vector<cplx> h{1.0, 1.0};
  const std::vector<GaussInt> a{GaussInt{1}, GaussInt{1}};
  for (const auto& x1 : field3())
    for (const auto& x2 : field3()) {
      const std::vector<Residue<GaussInt>> w1{Residue<GaussInt>(x1, GaussInt{3})}, w2{Residue<GaussInt>(x2, GaussInt{3})};
      const auto y1 = qam_encode(w1, 3, 2.0), y2 = qam_encode(w2, 3, 2.0);
      std::vector<cplx> y{y1[0] + y2[0]};
      CHECK(qam_pnc_decode(y, h, a, 3, 2.0)[0] == w1[0] + w2[0]);
      CHECK(qam_pnc_decode(y, h, a, 3, 2.0, 1e12)[0] == w1[0] + w2[0]);
      // a real perturbation past half the spacing moves the decision, below it does not
      std::vector<cplx> small{y[0] + cplx{0.9, 0}}, large{y[0] + cplx{1.1, 0}};
      CHECK(qam_pnc_decode(small, h, a, 3, 2.0)[0] == w1[0] + w2[0]);
      CHECK(qam_pnc_decode(large, h, a, 3, 2.0)[0] != w1[0] + w2[0]);
    }
  // the uncentered lift: offsets (m - 1)/2 (1 + i)
  const std::vector<Residue<GaussInt>> w{Residue<GaussInt>(GaussInt{0}, GaussInt{3})};
  CHECK(qam_encode(w, 3, 1.0)[0] == cplx{-1, -1});
}

TEST_CASE("Viterbi quantizer") {
  SUBCASE("exact codeword") {
    const auto s = small_trellis(1, 3);
    const auto enc = table_encoder(1);
    const std::vector<GaussInt> in{GaussInt{1, 1}, GaussInt{0, -1}, GaussInt{1}};
    const auto c = conv_encode(enc, in);
    const auto t = to_complex(c);
    const auto r = viterbi_codeword(make_trellis(enc), 3, 1, t);
    CHECK(r.metric == 0);
    CHECK(r.codeword == c);
    CHECK(viterbi_quantize(s, t) == c);
  }
  SUBCASE("matches exhaustive search") {
    for (std::size_t nu : {1u, 2u})
      for (std::size_t mu = 1; mu <= 3; ++mu) {
        const auto enc = table_encoder(nu);
        const auto tr = make_trellis(enc);
        const auto s = small_trellis(nu, mu);
        const int trials = mu == 3 ? 1000 : 100;
        for (int i = 0; i < trials; ++i) {
          const auto t = random_target(2 * (mu + nu), 4.0);
          const auto r = viterbi_codeword(tr, mu, nu, t);
          REQUIRE(r.metric == doctest::Approx(exhaustive_metric(enc, mu, t)).epsilon(1e-12));
          const auto lambda = viterbi_quantize(s, t);
          REQUIRE(s.labeling().in_fine(lambda));
          double dist = 0;
          for (std::size_t j = 0; j < t.size(); ++j) dist += std::norm(to_complex(lambda[j]) - t[j]);
          REQUIRE(dist == doctest::Approx(r.metric).epsilon(1e-12));
        }
      }
  }
  SUBCASE("periodic in the coarse lattice") {
    const auto s = small_trellis(1, 3);
    for (int i = 0; i < 100; ++i) {
      const auto t = random_target(s.n(), 2.0);
      Vec<GaussInt> shift(s.n());
      auto t2 = t;
      for (std::size_t j = 0; j < t.size(); ++j) {
        shift[j] = GaussInt{3} * test::random_element<GaussInt>(3);
        t2[j] += to_complex(shift[j]);
      }
      const auto l1 = viterbi_quantize(s, t), l2 = viterbi_quantize(s, t2);
      for (std::size_t j = 0; j < t.size(); ++j) CHECK(l2[j] == l1[j] + shift[j]);
      CHECK(s.labeling().label(l1) == s.labeling().label(l2));
    }
  }
  CHECK_THROWS_AS(viterbi_quantize(small_trellis(1, 3), random_target(7, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(viterbi_quantize(baseline(8), random_target(8, 1.0)), std::invalid_argument);
}

TEST_CASE("trellis decoding corrects perturbations inside half the minimum distance") {
  const auto s = small_trellis(1, 3);
  const double d = std::sqrt(6.0);
  const std::vector<cplx> h{1.0};
  const std::vector<GaussInt> a{GaussInt{1}};
  const std::vector<std::vector<cplx>> dz{std::vector<cplx>(s.n())};
  for (std::uint64_t fr = 0; fr < 300; ++fr) {
    const auto w = random_message(s, 8, 0, fr);
    const auto f = encode(s, w, 0, fr);
    auto e = random_target(s.n(), 1.0);
    double len = 0;
    for (const auto& v : e) len += std::norm(v);
    const double r = 0.49 * d * test::uniform_real(0.0, 1.0) / std::sqrt(len);
    std::vector<cplx> y(s.n());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = f.x[j] + r * e[j];
    REQUIRE(decode(s, y, h, a, dz, 1.0, cplx{1, 0}) == w);
  }
}

TEST_CASE("decoding errs exactly when the quantized effective noise leaves the coarse lattice") {
  const auto s = baseline(2, 21);
  const std::vector<cplx> h{1.0, 1.0};
  const std::vector<GaussInt> a{GaussInt{1}, GaussInt{1}};
  int errors = 0;
  for (std::uint64_t fr = 0; fr < 2000; ++fr) {
    const auto w1 = random_message(s, 4, 0, fr), w2 = random_message(s, 4, 1, fr);
    const auto f1 = encode(s, w1, 0, fr), f2 = encode(s, w2, 1, fr);
    const auto noise = random_target(2, 2.5);
    std::vector<cplx> y(2);
    for (std::size_t j = 0; j < 2; ++j) y[j] = f1.x[j] + f2.x[j] + noise[j];
    const std::vector<std::vector<cplx>> d{f1.dither, f2.dither};
    const bool wrong = decode(s, y, h, a, d, 1.0, cplx{1, 0}) != w1 + w2;
    Vec<GaussInt> qn(2);
    for (std::size_t j = 0; j < 2; ++j) qn[j] = round_to_ring(noise[j]);
    CHECK(wrong == !s.labeling().in_coarse(qn));
    errors += wrong;
  }
  CHECK(errors > 100);
  CHECK(errors < 2000);
}

TEST_CASE("labels of integer combinations combine linearly") {
  const auto s = small_trellis(2, 3, 1);
  for (std::uint64_t fr = 0; fr < 200; ++fr) {
    const auto w1 = random_message(s, 2, 0, fr), w2 = random_message(s, 2, 1, fr);
    const auto l1 = s.labeling().embed(w1), l2 = s.labeling().embed(w2);
    const auto a1 = test::random_element<GaussInt>(5), a2 = test::random_element<GaussInt>(5);
    Vec<GaussInt> comb(s.n());
    for (std::size_t j = 0; j < comb.size(); ++j) comb[j] = a1 * l1[j] + a2 * l2[j];
    CHECK(s.labeling().label(comb) == a1 * w1 + a2 * w2);
  }
}

TEST_CASE("dither does not change noiseless outcomes") {
  const std::vector<cplx> h{1.0, 1.0};
  const std::vector<GaussInt> a{GaussInt{1}, GaussInt{1}};
  for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{77}}) {
    const auto s = small_trellis(1, 3, seed);
    int errors = 0;
    for (std::uint64_t fr = 0; fr < 200; ++fr) {
      const auto w1 = random_message(s, 6, 0, fr), w2 = random_message(s, 6, 1, fr);
      const auto f1 = encode(s, w1, 0, fr), f2 = encode(s, w2, 1, fr);
      std::vector<cplx> y(s.n());
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = f1.x[j] + f2.x[j];
      const std::vector<std::vector<cplx>> d{f1.dither, f2.dither};
      errors += decode(s, y, h, a, d, 1e15) != w1 + w2;
    }
    CHECK(errors == 0);
  }
}

TEST_CASE("catalog schemes") {
  const auto b = make_scheme("baseline-pi3", 1);
  CHECK(b.n() == frame_symbols);
  CHECK(b.quantizer() == QuantizerKind::coordinate);
  CHECK(b.dithered());
  const auto q = make_scheme("qam9", 1);
  CHECK_FALSE(q.dithered());
  CHECK(q.power() == doctest::Approx(4.0 / 3.0));
  const auto c = make_scheme("conv-nu2", 1);
  CHECK(c.quantizer() == QuantizerKind::trellis);
  CHECK(c.labeling().k() == 98);
  CHECK(c.power() == doctest::Approx(1.5));
  CHECK_THROWS_AS(make_scheme("hamming-ext-64", 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme("nope", 1), std::out_of_range);
}

TEST_CASE("decoder rejects shape mismatches") {
  const auto s = baseline(2);
  const std::vector<cplx> h{1.0};
  const std::vector<GaussInt> a{GaussInt{1}};
  const std::vector<std::vector<cplx>> d{std::vector<cplx>(2)};
  CHECK_THROWS_AS(decode(s, std::vector<cplx>(3), h, a, d, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(decode(s, std::vector<cplx>(2), h, std::vector<GaussInt>{}, d, 1.0), std::invalid_argument);
}
