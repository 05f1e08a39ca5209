#include <cmath>

#include "doctest.h"
#include "lnc/constructions.hpp"
#include "lnc/field.hpp"
#include "support.hpp"

using namespace lnc;

namespace {

template <class T>
Matrix<T> random_generator(const T& pi, std::size_t k, std::size_t n) {
  while (true) {
    auto g = test::random_matrix<T>(k, n, 3);
    FieldEchelon<T> e(pi, n);
    bool ok = true;
    for (std::size_t r = 0; r < k; ++r) ok = ok && e.insert(g.row(r));
    if (ok) return g;
  }
}

}  // namespace

TEST_CASE("code validation") {
  CHECK_THROWS_AS(make_code(Integer{4}, Matrix<Integer>{{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_code(Integer{3}, Matrix<Integer>{{1, 1}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_code(GaussInt{5}, Matrix<GaussInt>{{1, 1}}), std::invalid_argument);
  const auto c = make_code(Integer{5}, Matrix<Integer>{{2, 1, 0}, {0, 0, 3}});
  CHECK(c.pivots == std::vector<std::size_t>{0, 2});
  const auto h = parity_check(c);
  REQUIRE(h.rows() == 1);
  for (std::size_t r = 0; r < c.k(); ++r) {
    i64 acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc += h(0, j).v * c.generator(r, j).v;
    CHECK(acc % 5 == 0);
  }
}

TEST_CASE("real Construction A message spaces") {
  const auto base = construct_a_real(trivial_code(Integer{3}, 2));
  CHECK(base.labeling.pis() == std::vector<GaussInt>{3, 3});
  CHECK(base.labeling.size() == 81);

  const auto c = make_code(Integer{5}, Matrix<Integer>{{1, 1}});
  const auto pair = construct_a_real(c);
  CHECK(pair.labeling.size() == 25);
  CHECK(pair.labeling.r_mes() == doctest::Approx(std::log2(25.0) / 2));
  CHECK(gain_report_construction_a(c).r_mes == doctest::Approx(std::log2(25.0) / 2));

  for (i64 p : {2, 3, 5, 7, 11, 13}) {
    const auto q = construct_a_real(trivial_code(Integer{p}, 1));
    CHECK(q.is_vector_space() == (p % 4 == 3));
    CHECK(q.is_vector_space() == gaussian_is_prime(GaussInt{p}));
  }
  CHECK_THROWS(construct_a_real(LinearCode<Integer>{Integer{4}, Matrix<Integer>{{1}}, {0}}));
}

TEST_CASE("complex Construction A message spaces") {
  const auto f9 = construct_a_complex(trivial_code(GaussInt{3}, 3));
  CHECK(f9.labeling.pis() == std::vector<GaussInt>{3, 3, 3});
  CHECK(f9.is_vector_space());

  const auto f2 = construct_a_complex(make_code(GaussInt{1, 1}, Matrix<GaussInt>{{1, 1, 0}}));
  REQUIRE(f2.labeling.k() == 1);
  CHECK(quotient_size(f2.labeling.pis()[0]) == 2);

  const auto empty = construct_a_complex(make_code(GaussInt{3}, Matrix<GaussInt>(0, 2)));
  CHECK(empty.labeling.k() == 0);
  CHECK(empty.labeling.size() == 1);
}

TEST_CASE("minimum Euclidean weight examples") {
  const auto a = min_euclidean_weight(make_code(Integer{5}, Matrix<Integer>{{1, 3}}));
  CHECK(a.w_min == 5);
  CHECK(a.count == 4);
  const auto b = min_euclidean_weight(make_code(Integer{3}, Matrix<Integer>{{1, 1}}));
  CHECK(b.w_min == 2);
  CHECK(b.count == 2);
  const auto h = extended_hamming_code(5);
  CHECK(h.n() == 32);
  CHECK(h.k() == 26);
  CHECK(min_euclidean_weight(h).w_min == 4);
  CHECK_THROWS_AS(min_euclidean_weight(make_code(Integer{2}, random_generator(Integer{2}, 30, 40))), std::length_error);
}

TEST_CASE("extended Hamming low-weight screening") {
  for (unsigned m : {3u, 4u, 5u}) {
    const auto h = extended_hamming_code(m);
    const auto counts = low_weight_counts(h, 4);
    const std::uint64_t n = h.n();
    CHECK(counts == std::vector<std::uint64_t>{0, 0, 0, n * (n - 1) * (n - 2) / 24});
    CHECK(min_euclidean_weight(h).count == counts[3]);
  }
  // [8,4] code, enumerated without the analytic shortcut
  auto h8 = extended_hamming_code(3);
  h8.family = CodeFamily::generic;
  const auto w = min_euclidean_weight(h8);
  CHECK(w.w_min == 4);
  CHECK(w.count == 14);
}

TEST_CASE("Construction A formulas against brute force") {
  int checked = 0;
  for (i64 p : {2, 3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto n = static_cast<std::size_t>(test::uniform(1, 3));
      const auto k = static_cast<std::size_t>(test::uniform(1, std::min<i64>(2, static_cast<i64>(n))));
      const auto code = make_code(Integer{p}, random_generator(Integer{p}, k, n));
      const auto f = gain_report_construction_a(code);
      const auto b = gain_report_bruteforce(construct_a_real(code), 2);
      CHECK(f.d_sq.lower == b.d_sq.lower);
      CHECK(f.kissing.lower == b.kissing.lower);
      CHECK(f.gamma_c == doctest::Approx(b.gamma_c));
      ++checked;
    }
  }
  for (GaussInt pi : {GaussInt{1, 1}, GaussInt{3}, GaussInt{2, 1}}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto n = static_cast<std::size_t>(test::uniform(1, 2));
      const auto k = static_cast<std::size_t>(test::uniform(1, static_cast<i64>(n)));
      const auto code = make_code(pi, random_generator(pi, k, n));
      const auto f = gain_report_construction_a(code);
      const auto b = gain_report_bruteforce(construct_a_complex(code), 1);
      CHECK(f.d_sq.lower == b.d_sq.lower);
      CHECK(f.kissing.lower == b.kissing.lower);
      CHECK(f.gamma_c == doctest::Approx(b.gamma_c));
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("Construction A gain examples") {
  CHECK(gain_report_construction_a(trivial_code(GaussInt{3}, 4)).gamma_c == doctest::Approx(1.0));
  CHECK(gain_report_construction_a(trivial_code(GaussInt{2, 1}, 3)).gamma_c == doctest::Approx(1.0));
  CHECK(gain_report_construction_a(make_code(Integer{3}, Matrix<Integer>{{1, 1}})).gamma_c == doctest::Approx(2.0 / 3.0));
  const auto two = gain_report_construction_a(make_code(Integer{2}, Matrix<Integer>{{1, 1, 1}}));
  CHECK(two.kissing.lower == 2 * 1 * 8);
}

TEST_CASE("chain basis and Construction D") {
  const auto sys = make_code(Integer{3}, Matrix<Integer>{{1, 0, 2, 1}, {0, 1, 1, 1}});
  const auto a = construct_a_real(sys);
  const auto d = construct_d({Integer{3}, {sys}});
  CHECK(a.quotient.g_fine == d.quotient.g_fine);
  CHECK(a.quotient.j == d.quotient.j);
  CHECK(a.labeling.pis() == d.labeling.pis());

  const auto ham = hamming_chain(3);
  const auto pair = construct_d(ham);
  std::vector<GaussInt> expect(4, GaussInt{2});
  expect.insert(expect.end(), 4, GaussInt{4});
  CHECK(pair.labeling.pis() == expect);

  CHECK_THROWS_AS(construct_d({Integer{2}, {make_code(Integer{2}, Matrix<Integer>{{1, 1, 0}}),
                                            make_code(Integer{2}, Matrix<Integer>{{1, 0, 0}, {0, 0, 1}})}}),
                  std::invalid_argument);

  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(2, 5));
    const auto k2 = static_cast<std::size_t>(test::uniform(1, static_cast<i64>(n)));
    const auto k1 = static_cast<std::size_t>(test::uniform(1, static_cast<i64>(k2)));
    const auto g2 = random_generator(Integer{2}, k2, n);
    Matrix<Integer> g1(k1, n);
    for (std::size_t r = 0; r < k1; ++r)
      for (std::size_t j = 0; j < n; ++j) g1(r, j) = g2(r, j);
    const NestedCodeChain chain{Integer{2}, {make_code(Integer{2}, g1), make_code(Integer{2}, g2)}};
    const auto basis = chain_basis(chain);
    REQUIRE(basis.ks == std::vector<std::size_t>{k1, k2});
    for (std::size_t level = 0; level < 2; ++level) {
      FieldEchelon<Integer> span(Integer{2}, n);
      for (std::size_t r = 0; r < basis.ks[level]; ++r) span.insert(basis.g.row(r));
      CHECK(span.rank() == chain.codes[level].k());
      for (std::size_t r = 0; r < chain.codes[level].k(); ++r) CHECK(span.in_span(chain.codes[level].generator.row(r)));
    }
    // triangular with unit diagonal after reordering rows
    std::vector<std::size_t> lead(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t j = 0;
      while (basis.g(r, j).v == 0) ++j;
      CHECK(basis.g(r, j).v == 1);
      lead[r] = j;
    }
    std::sort(lead.begin(), lead.end());
    for (std::size_t r = 0; r < n; ++r) CHECK(lead[r] == r);
  }
}

TEST_CASE("Construction D membership matches the digit decomposition") {
  for (int trial = 0; trial < 12; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(2, 4));
    const auto k2 = static_cast<std::size_t>(test::uniform(1, static_cast<i64>(n)));
    const auto k1 = static_cast<std::size_t>(test::uniform(1, static_cast<i64>(k2)));
    const auto g2 = random_generator(Integer{2}, k2, n);
    Matrix<Integer> g1(k1, n);
    for (std::size_t r = 0; r < k1; ++r)
      for (std::size_t j = 0; j < n; ++j) g1(r, j) = g2(r, j);
    const NestedCodeChain chain{Integer{2}, {make_code(Integer{2}, g1), make_code(Integer{2}, g2)}};
    const auto pair = construct_d(chain);
    const auto& g = pair.basis;

    // all sums sum_j c_j g~_j with c_j in {0..3} for j < k1 and c_j in {0, 2} for k1 <= j < k2
    std::vector<std::vector<i64>> residues;
    std::vector<int> c(k2, 0);
    while (true) {
      std::vector<i64> v(n, 0);
      for (std::size_t j = 0; j < k2; ++j)
        for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + c[j] * g(j, i).v) % 4;
      residues.push_back(v);
      std::size_t pos = 0;
      while (pos < k2) {
        const int step = pos < k1 ? 1 : 2;
        c[pos] += step;
        if (c[pos] < 4) break;
        c[pos] = 0;
        ++pos;
      }
      if (pos == k2) break;
    }
    std::vector<i64> x(n, -3);
    while (true) {
      Vec<GaussInt> lam(n);
      for (std::size_t i = 0; i < n; ++i) lam[i] = GaussInt{x[i]};
      bool decomposes = false;
      for (const auto& r : residues) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = ((x[i] - r[i]) % 4 + 4) % 4 == 0;
        decomposes = decomposes || ok;
      }
      CHECK(pair.labeling.in_fine(lam) == decomposes);
      std::size_t pos = 0;
      while (pos < n && x[pos] == 3) x[pos++] = -3;
      if (pos == n) break;
      ++x[pos];
    }
  }
}

TEST_CASE("Construction D gains") {
  const std::vector<std::pair<unsigned, double>> table{{5, 3.08}, {6, 3.44}, {7, 3.67}, {8, 3.81}};
  for (const auto& [m, target] : table) {
    const auto g = gain_report_construction_d(hamming_chain(m));
    CHECK(g.d_sq.exact());
    CHECK(g.d_sq.lower == 4);
    CHECK(std::abs(g.gamma_c - target) < 0.005);
  }
  // rate-5/6 code with d1 = 4 nested in the trivial code
  const std::vector<double> oe_k{54000, 64800};
  const std::vector<i64> oe_w{4, 1};
  const std::vector<std::uint64_t> oe_a{1, 64800};
  const auto oe = gain_report_construction_d(2, 64800, oe_k, oe_w, oe_a);
  CHECK(oe.gamma_c_db == doctest::Approx(5.02).epsilon(0.001));
  CHECK(oe.r_mes == doctest::Approx(2.0 * (1.0 + 5.0 / 6.0)));
  // turbo pair: rates 1/3 and 1/2, d1 = 28, d2 = 13
  const std::vector<double> tk{2000, 3000};
  const std::vector<i64> tw{28, 13};
  const std::vector<std::uint64_t> ta{1, 1};
  const auto turbo = gain_report_construction_d(2, 6000, tk, tw, ta);
  CHECK(turbo.method == "bound");
  CHECK(turbo.gamma_c == doctest::Approx(28.0 / std::pow(4.0, 7.0 / 6.0)));
  CHECK(turbo.gamma_c_db == doctest::Approx(7.45).epsilon(0.001));
  CHECK(turbo.r_mes == doctest::Approx(5.0 / 3.0));

  // bounds bracket the brute-force values
  const auto rep = make_code(Integer{2}, Matrix<Integer>{{1, 1, 1}});
  const NestedCodeChain c3{Integer{2}, {rep, trivial_code(Integer{2}, 3)}};
  const auto f3 = gain_report_construction_d(c3);
  const auto b3 = gain_report_bruteforce(construct_d(c3), 2);
  CHECK(f3.d_sq.exact());
  CHECK(b3.d_sq.lower == f3.d_sq.lower);
  CHECK(b3.kissing.lower >= f3.kissing.lower);
  CHECK(b3.kissing.lower <= f3.kissing.upper);
  CHECK(b3.gamma_c == doctest::Approx(f3.gamma_c));

  const NestedCodeChain c4{Integer{2},
                           {make_code(Integer{2}, Matrix<Integer>{{1, 1, 1, 1}}),
                            make_code(Integer{2}, Matrix<Integer>{{1, 1, 1, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}})}};
  const auto f4 = gain_report_construction_d(c4);
  const auto b4 = gain_report_bruteforce(construct_d(c4), 2);
  CHECK(f4.method == "bound");
  CHECK(b4.d_sq.lower >= f4.d_sq.lower);
  CHECK(b4.d_sq.lower <= f4.d_sq.upper);
  CHECK(b4.kissing.lower <= f4.kissing.upper);
}

TEST_CASE("Construction D beats Construction A given a heavy subcode") {
  const auto big = trivial_code(Integer{2}, 4);
  const auto sub = make_code(Integer{2}, Matrix<Integer>{{1, 1, 1, 1}});
  const auto ga = gain_report_construction_a(big);
  const auto gd = gain_report_construction_d({Integer{2}, {sub, big}});
  CHECK(gd.w_min[0] >= 4 * ga.w_min[0]);
  CHECK(gd.gamma_c > ga.gamma_c);

  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const i64 p = trial % 2 ? 2 : 3;
    const auto n = static_cast<std::size_t>(test::uniform(3, 6));
    const auto k = static_cast<std::size_t>(test::uniform(2, static_cast<i64>(n)));
    const auto g = random_generator(Integer{p}, k, n);
    const auto kp = static_cast<std::size_t>(test::uniform(1, static_cast<i64>(k) - 1));
    Matrix<Integer> gs(kp, n);
    for (std::size_t r = 0; r < kp; ++r)
      for (std::size_t j = 0; j < n; ++j) gs(r, j) = g(r, j);
    const auto c = make_code(Integer{p}, g), cs = make_code(Integer{p}, gs);
    const auto wa = min_euclidean_weight(c), ws = min_euclidean_weight(cs);
    if (ws.w_min < p * p * wa.w_min) continue;
    ++seen;
    CHECK(gain_report_construction_d({Integer{p}, {cs, c}}).gamma_c > gain_report_construction_a(c).gamma_c);
  }
  MESSAGE("dominance instances: " << seen);
}

TEST_CASE("convolutional codes") {
  for (std::size_t nu : {1u, 2u}) {
    const auto enc = table_encoder(nu);
    for (std::size_t mu = 1; mu <= 4; ++mu) {
      const auto t = trellis_min_weight(enc, mu);
      auto code = terminated_code(enc, mu);
      CHECK(code.n() == 2 * (mu + nu));
      CHECK(code.k() == mu);
      code.family = CodeFamily::generic;
      const auto e = min_euclidean_weight(code);
      CHECK(t.w_min == e.w_min);
      CHECK(t.count == e.count);
      CHECK(t.w_min <= static_cast<i64>(3 * (1 + nu)));
    }
    CHECK(trellis_min_weight(enc, 100 - nu).w_min == static_cast<i64>(3 * (1 + nu)));
    const auto g = gain_report_convolutional(enc, 100 - nu);
    CHECK(std::abs(g.gamma_c - static_cast<double>(1 + nu)) < 0.03 * static_cast<double>(1 + nu));
  }
  // encoding agrees with the generator
  const auto enc = table_encoder(2);
  const std::vector<GaussInt> u{GaussInt{1}, GaussInt{0, 1}, GaussInt{-1, 1}};
  const auto c = conv_encode(enc, u);
  FieldEchelon<GaussInt> span(GaussInt{3}, c.size());
  const auto code = terminated_code(enc, 3);
  for (std::size_t r = 0; r < 3; ++r) span.insert(code.generator.row(r));
  CHECK(span.in_span(c));
  CHECK(conv_encode(enc, std::vector<GaussInt>{GaussInt{1}, GaussInt{}, GaussInt{}})[0] == GaussInt{1});
}

TEST_CASE("catalog") {
  CHECK(catalog().size() == 8);
  CHECK(catalog_entry("conv-nu1").gamma_target == 2.0);
  CHECK_THROWS_AS(catalog_entry("nope"), std::out_of_range);
  CHECK(catalog_gain("baseline-pi3").gamma_c == doctest::Approx(1.0));
  CHECK(std::abs(catalog_gain("hamming-ext-128").gamma_c - 3.67) < 0.005);
  CHECK(std::abs(catalog_gain("conv-nu1").gamma_c - 2.0) < 0.06);
  CHECK(catalog_gain("qam9").r_mes == doctest::Approx(2 * std::log2(3.0)));
}
