#include "lnc/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "lnc/field.hpp"

namespace lnc {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// one minimal-norm representative per class, zero first
template <EuclideanRing T>
std::vector<T> class_reps(const T& pi) {
  std::vector<T> reps{T{}};
  for (const T& x : coset_leaders(pi)) {
    const T r = Residue<T>::reduce(x, canonical(pi));
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  return reps;
}

i64 lift_nonneg(Integer x, i64 p) { return ((x.v % p) + p) % p; }

double ipow(double b, double e) { return std::pow(b, e); }

}  // namespace

// ---- codes ----

template <EuclideanRing T>
LinearCode<T> make_code(const T& modulus, const Matrix<T>& generator, CodeFamily family) {
  FieldEchelon<T> e(modulus, generator.cols(), true);
  for (std::size_t r = 0; r < generator.rows(); ++r)
    if (!e.insert(generator.row(r))) throw std::invalid_argument("generator rows are linearly dependent");
  return {canonical(modulus), e.in_pivot_order(), e.pivots(), family};
}

template <EuclideanRing T>
LinearCode<T> trivial_code(const T& modulus, std::size_t n) {
  return make_code(modulus, Matrix<T>::identity(n));
}

template <EuclideanRing T>
Matrix<T> parity_check(const LinearCode<T>& code) {
  const std::size_t n = code.n(), k = code.k();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : code.pivots) is_pivot[p] = 1;
  Matrix<T> h(n - k, n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    h(row, c) = T{1};
    for (std::size_t r = 0; r < k; ++r) h(row, code.pivots[r]) = Residue<T>::reduce(-code.generator(r, c), code.modulus);
    ++row;
  }
  return h;
}

LinearCode<Integer> extended_hamming_code(unsigned m) {
  if (m < 2 || m > 16) throw std::invalid_argument("extended Hamming order out of range");
  const std::size_t n = std::size_t{1} << m;
  Matrix<Integer> h(m + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    h(0, j) = 1;
    for (unsigned b = 0; b < m; ++b) h(b + 1, j) = static_cast<i64>((j >> b) & 1u);
  }
  FieldEchelon<Integer> e(Integer{2}, n, true);
  for (std::size_t r = 0; r <= m; ++r) e.insert(h.row(r));
  const auto& rows = e.rows();
  const auto& piv = e.pivots();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : piv) is_pivot[p] = 1;
  Matrix<Integer> g(n - m - 1, n);
  std::size_t r = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    g(r, f) = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) g(r, piv[i]) = lift_nonneg(-rows[i][f].v, 2);
    ++r;
  }
  return make_code(Integer{2}, g, CodeFamily::extended_hamming);
}

std::vector<std::uint64_t> low_weight_counts(const LinearCode<Integer>& code, unsigned max_weight) {
  if (code.modulus != Integer{2}) throw std::invalid_argument("screening needs a binary code");
  const auto h = parity_check(code);
  if (h.rows() > 64) throw std::invalid_argument("too many parity checks for screening");
  const std::size_t n = code.n();
  std::vector<std::uint64_t> syn(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (lift_nonneg(h(i, j), 2)) syn[j] |= std::uint64_t{1} << i;
  // indices of each syndrome, ascending
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> where;
  for (std::size_t j = 0; j < n; ++j) where[syn[j]].push_back(j);
  auto count_after = [&](std::uint64_t s, std::size_t after) -> std::uint64_t {
    auto it = where.find(s);
    if (it == where.end()) return 0;
    const auto& v = it->second;
    return static_cast<std::uint64_t>(v.end() - std::upper_bound(v.begin(), v.end(), after));
  };
  std::vector<std::uint64_t> counts(max_weight + 1, 0);
  // choose the first w - 1 positions explicitly and look up the last one
  auto rec = [&](auto&& self, unsigned w, unsigned depth, std::size_t last, std::uint64_t acc) -> void {
    if (depth + 1 == w) {
      counts[w] += count_after(acc, last);
      return;
    }
    for (std::size_t j = last + 1; j < n; ++j) self(self, w, depth + 1, j, acc ^ syn[j]);
  };
  for (unsigned w = 1; w <= max_weight; ++w) {
    if (w == 1) {
      counts[1] = static_cast<std::uint64_t>(std::count(syn.begin(), syn.end(), 0));
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) rec(rec, w, 1, j, syn[j]);
  }
  counts.erase(counts.begin());
  return counts;
}

// ---- convolutional codes ----

ConvEncoder table_encoder(std::size_t nu) {
  ConvEncoder e;
  e.nu = nu;
  if (nu == 1) {
    e.taps[0] = {GaussInt{1}, GaussInt{1, 1}};
    e.taps[1] = {GaussInt{1, 1}, GaussInt{1}};
  } else if (nu == 2) {
    e.taps[0] = {GaussInt{1}, GaussInt{1}, GaussInt{1, 1}};
    e.taps[1] = {GaussInt{1, 1}, GaussInt{1, -1}, GaussInt{1}};
  } else {
    throw std::invalid_argument("no tabulated encoder for this memory");
  }
  return e;
}

std::size_t Trellis::symbol_index(const GaussInt& x) const {
  const GaussInt r = Residue<GaussInt>::reduce(x, GaussInt{3});
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == r) return i;
  throw std::logic_error("symbol outside the alphabet");
}

Trellis make_trellis(const ConvEncoder& enc) {
  for (const auto& t : enc.taps)
    if (t.size() != enc.nu + 1) throw std::invalid_argument("tap length must be nu + 1");
  Trellis tr;
  tr.symbols = class_reps(enc.modulus);
  tr.q = tr.symbols.size();
  tr.states = 1;
  for (std::size_t d = 0; d < enc.nu; ++d) tr.states *= tr.q;
  tr.next.resize(tr.states * tr.q);
  tr.out.resize(tr.states * tr.q);
  std::vector<std::size_t> mem(enc.nu + 1);
  for (std::size_t s = 0; s < tr.states; ++s) {
    // digit d - 1 of s holds the input d steps back
    std::size_t rest = s;
    for (std::size_t d = 1; d <= enc.nu; ++d) {
      mem[d] = rest % tr.q;
      rest /= tr.q;
    }
    for (std::size_t x = 0; x < tr.q; ++x) {
      mem[0] = x;
      for (std::size_t o = 0; o < 2; ++o) {
        GaussInt acc{};
        for (std::size_t d = 0; d <= enc.nu; ++d) acc += enc.taps[o][d] * tr.symbols[mem[d]];
        tr.out[s * tr.q + x][o] = static_cast<std::uint8_t>(tr.symbol_index(acc));
      }
      tr.next[s * tr.q + x] = static_cast<std::uint32_t>(enc.nu == 0 ? 0 : x + tr.q * (s % (tr.states / tr.q)));
    }
  }
  return tr;
}

LinearCode<GaussInt> terminated_code(const ConvEncoder& enc, std::size_t mu) {
  if (mu == 0) throw std::invalid_argument("mu must be positive");
  const std::size_t n = 2 * (mu + enc.nu);
  Matrix<GaussInt> g(mu, n);
  for (std::size_t t = 0; t < mu; ++t)
    for (std::size_t d = 0; d <= enc.nu; ++d)
      for (std::size_t o = 0; o < 2; ++o) g(t, 2 * (t + d) + o) = enc.taps[o][d];
  return make_code(enc.modulus, g, CodeFamily::convolutional);
}

std::vector<GaussInt> conv_encode(const ConvEncoder& enc, std::span<const GaussInt> inputs) {
  const std::size_t mu = inputs.size(), len = mu + enc.nu;
  std::vector<GaussInt> c(2 * len);
  for (std::size_t t = 0; t < len; ++t)
    for (std::size_t o = 0; o < 2; ++o) {
      GaussInt acc{};
      for (std::size_t d = 0; d <= enc.nu && d <= t; ++d)
        if (t - d < mu) acc += enc.taps[o][d] * inputs[t - d];
      c[2 * t + o] = Residue<GaussInt>::reduce(acc, enc.modulus);
    }
  return c;
}

// ---- weights ----

template <EuclideanRing T>
WeightResult min_euclidean_weight(const LinearCode<T>& code, std::uint64_t budget) {
  const std::size_t n = code.n(), k = code.k();
  if (k == 0) throw std::invalid_argument("code has no nonzero codewords");
  const auto reps = class_reps(code.modulus);
  const std::size_t q = reps.size();

  if (code.family == CodeFamily::extended_hamming) {
    const auto nn = static_cast<std::uint64_t>(n);
    return {4, nn * (nn - 1) * (nn - 2) / 24, "analytic"};
  }
  if (code.is_trivial()) {
    i64 w = std::numeric_limits<i64>::max();
    std::uint64_t c = 0;
    for (std::size_t i = 1; i < q; ++i) {
      const auto nw = static_cast<i64>(norm(reps[i]));
      if (nw < w) w = nw, c = 0;
      if (nw == w) ++c;
    }
    return {w, c * n, "analytic"};
  }

  double total = std::pow(static_cast<double>(q), static_cast<double>(k));
  if (total > static_cast<double>(budget)) throw std::length_error("codeword enumeration exceeds budget");

  std::vector<std::size_t> digit(k, 0);
  std::vector<T> cw(n);
  i64 best = std::numeric_limits<i64>::max();
  std::uint64_t count = 0;
  while (true) {
    // odometer step
    std::size_t pos = 0;
    while (pos < k && digit[pos] == q - 1) {
      const T delta = reps[0] - reps[q - 1];
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(code.generator(pos, j))) cw[j] = Residue<T>::reduce(cw[j] + delta * code.generator(pos, j), code.modulus);
      digit[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    const T delta = reps[digit[pos] + 1] - reps[digit[pos]];
    ++digit[pos];
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(code.generator(pos, j))) cw[j] = Residue<T>::reduce(cw[j] + delta * code.generator(pos, j), code.modulus);
    i64 w = 0;
    for (const T& x : cw) w += static_cast<i64>(norm(x));
    if (w == 0) continue;
    if (w < best) best = w, count = 0;
    if (w == best) ++count;
  }
  return {best, count, "enumeration"};
}

WeightResult trellis_min_weight(const ConvEncoder& enc, std::size_t mu) {
  const Trellis tr = make_trellis(enc);
  constexpr i64 inf = std::numeric_limits<i64>::max() / 4;
  struct Cell {
    i64 w = inf;
    std::uint64_t c = 0;
  };
  std::vector<i64> wt(tr.q);
  for (std::size_t i = 0; i < tr.q; ++i) wt[i] = static_cast<i64>(norm(tr.symbols[i]));
  // cells[started * states + s]
  std::vector<Cell> cur(2 * tr.states), nxt(2 * tr.states);
  cur[0] = {0, 1};
  auto relax = [](Cell& dst, i64 w, std::uint64_t c) {
    if (w < dst.w) dst = {w, c};
    else if (w == dst.w) dst.c = sat_add(dst.c, c);
  };
  for (std::size_t t = 0; t < mu + enc.nu; ++t) {
    std::fill(nxt.begin(), nxt.end(), Cell{});
    const std::size_t inputs = t < mu ? tr.q : 1;
    for (std::size_t started = 0; started < 2; ++started)
      for (std::size_t s = 0; s < tr.states; ++s) {
        const Cell& from = cur[started * tr.states + s];
        if (from.w >= inf) continue;
        for (std::size_t x = 0; x < inputs; ++x) {
          const auto idx = s * tr.q + x;
          const i64 w = from.w + wt[tr.out[idx][0]] + wt[tr.out[idx][1]];
          const std::size_t st = (started || x != 0) ? 1 : 0;
          relax(nxt[st * tr.states + tr.next[idx]], w, from.c);
        }
      }
    std::swap(cur, nxt);
  }
  const Cell& end = cur[tr.states];
  return {end.w, end.c, "trellis"};
}

// ---- nested pairs ----

bool NestedPair::is_vector_space() const {
  const auto& pis = labeling.pis();
  if (pis.empty()) return true;
  return std::all_of(pis.begin(), pis.end(), [&](const GaussInt& p) { return p == pis[0]; }) && is_prime(pis[0]);
}

namespace {

template <EuclideanRing T>
NestedPair construction_a(const LinearCode<T>& code, const GaussInt& pi, std::string name) {
  const std::size_t n = code.n(), k = code.k();
  LatticeQuotient<GaussInt> q;
  q.g_fine = Matrix<GaussInt>(n, n);
  q.j = Matrix<GaussInt>(n, n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if constexpr (std::is_same_v<T, Integer>)
        q.g_fine(r, c) = GaussInt{lift_nonneg(code.generator(r, c), code.modulus.v)};
      else
        q.g_fine(r, c) = code.generator(r, c);
    }
    q.j(r, r) = pi;
  }
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : code.pivots) is_pivot[p] = 1;
  std::size_t row = k;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    q.g_fine(row, c) = pi;
    q.j(row, row) = GaussInt{1};
    ++row;
  }
  auto l = build_labeling(q);
  return {std::move(name), std::move(q), std::move(l), {}};
}

}  // namespace

NestedPair construct_a_real(const LinearCode<Integer>& code) {
  if (!is_prime(code.modulus)) throw std::invalid_argument("Construction A needs a prime p");
  return construction_a(code, GaussInt{code.modulus.v}, "a");
}

NestedPair construct_a_complex(const LinearCode<GaussInt>& code) {
  if (!is_prime(code.modulus)) throw std::invalid_argument("complex Construction A needs a Gaussian prime");
  return construction_a(code, code.modulus, "a-complex");
}

ChainBasis chain_basis(const NestedCodeChain& chain) {
  if (chain.codes.empty()) throw std::invalid_argument("empty code chain");
  const i64 p = chain.p.v;
  const std::size_t n = chain.codes[0].n();
  for (std::size_t i = 0; i < chain.codes.size(); ++i) {
    const auto& c = chain.codes[i];
    if (c.modulus != chain.p || c.n() != n) throw std::invalid_argument("chain codes must share p and n");
    if (i > 0) {
      FieldEchelon<Integer> outer(chain.p, n, true);
      for (std::size_t r = 0; r < c.k(); ++r) outer.insert(c.generator.row(r));
      const auto& inner = chain.codes[i - 1];
      for (std::size_t r = 0; r < inner.k(); ++r)
        if (!outer.in_span(inner.generator.row(r))) throw std::invalid_argument("codes are not nested");
    }
  }
  // no back substitution: the first k_i rows must keep spanning C_i
  FieldEchelon<Integer> e(chain.p, n, false);
  ChainBasis out;
  for (const auto& c : chain.codes) {
    for (std::size_t r = 0; r < c.k(); ++r) e.insert(c.generator.row(r));
    if (e.rank() != c.k()) throw std::logic_error("chain dimensions inconsistent");
    out.ks.push_back(c.k());
  }
  // complete with unit vectors at the free columns; they are already reduced
  for (std::size_t c = 0; c < n; ++c) {
    const auto& piv = e.pivots();
    if (std::find(piv.begin(), piv.end(), c) != piv.end()) continue;
    std::vector<Integer> unit(n);
    unit[c] = 1;
    e.insert(unit);
  }
  if (e.rank() != n) throw std::runtime_error("chain basis triangularization failed");
  out.g = e.in_insertion_order();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.g(r, c) = lift_nonneg(out.g(r, c), p);
  return out;
}

NestedPair construct_d(const NestedCodeChain& chain) {
  const auto basis = chain_basis(chain);
  const std::size_t n = basis.g.cols(), s = basis.ks.size();
  const i64 p = chain.p.v;
  LatticeQuotient<GaussInt> q;
  q.g_fine = Matrix<GaussInt>(n, n);
  q.j = Matrix<GaussInt>(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    // level t: first index with r < k_t; rows past k_s sit at level s + 1
    std::size_t t = 0;
    while (t < s && r >= basis.ks[t]) ++t;
    i64 scale = 1, coarse = 1;
    for (std::size_t i = 0; i < t; ++i) scale = checked::mul(scale, p);
    for (std::size_t i = t; i < s; ++i) coarse = checked::mul(coarse, p);
    for (std::size_t c = 0; c < n; ++c) q.g_fine(r, c) = GaussInt{checked::mul(scale, basis.g(r, c).v)};
    q.j(r, r) = GaussInt{coarse};
  }
  auto l = build_labeling(q);
  return {"d", std::move(q), std::move(l), basis.g};
}

// ---- gains ----

double to_db(double x) { return 10.0 * std::log10(x); }

namespace {

GainReport finish(GainReport g, double vol_root) {
  g.gamma_c = g.d_sq.lower / vol_root;
  g.gamma_c_db = to_db(g.gamma_c);
  return g;
}

}  // namespace

GainReport gain_report_construction_a(const LinearCode<Integer>& code) {
  const auto w = min_euclidean_weight(code);
  const double p = static_cast<double>(code.modulus.v);
  const double kn = static_cast<double>(code.k()) / static_cast<double>(code.n());
  GainReport g;
  g.method = "formula";
  g.d_sq = {static_cast<double>(w.w_min), static_cast<double>(w.w_min)};
  double k = 2.0 * static_cast<double>(w.count);
  if (code.modulus.v == 2) k *= std::ldexp(1.0, static_cast<int>(w.w_min));
  g.kissing = {k, k};
  g.r_mes = kn * std::log2(p * p);
  g.w_min = {w.w_min};
  g.a_wmin = {w.count};
  return finish(g, ipow(p, 2.0 * (1.0 - kn)));
}

namespace {

GainReport complex_a_report(const WeightResult& w, double pi_norm, double kn) {
  GainReport g;
  g.method = "formula";
  g.d_sq = {static_cast<double>(w.w_min), static_cast<double>(w.w_min)};
  double k = static_cast<double>(w.count);
  if (pi_norm == 2.0) k *= std::pow(4.0, static_cast<double>(w.w_min));
  g.kissing = {k, k};
  g.r_mes = kn * std::log2(pi_norm);
  g.w_min = {w.w_min};
  g.a_wmin = {w.count};
  return finish(g, ipow(pi_norm, 1.0 - kn));
}

}  // namespace

GainReport gain_report_construction_a(const LinearCode<GaussInt>& code) {
  const auto w = min_euclidean_weight(code);
  return complex_a_report(w, static_cast<double>(norm(code.modulus)),
                          static_cast<double>(code.k()) / static_cast<double>(code.n()));
}

GainReport gain_report_convolutional(const ConvEncoder& enc, std::size_t mu) {
  const auto w = trellis_min_weight(enc, mu);
  const double kn = static_cast<double>(mu) / static_cast<double>(2 * (mu + enc.nu));
  return complex_a_report(w, static_cast<double>(norm(enc.modulus)), kn);
}

GainReport gain_report_construction_d(i64 p, double n, std::span<const double> ks, std::span<const i64> w,
                                      std::span<const std::uint64_t> a) {
  const std::size_t s = ks.size();
  if (s == 0 || w.size() != s || a.size() != s) throw std::invalid_argument("per-level data size mismatch");
  const double pd = static_cast<double>(p);
  double sum_k = 0;
  for (double k : ks) sum_k += k;

  // level i contributes p^{2(i-1)} w_i; that point lies in the fine lattice once p^i Z^n does,
  // which holds for i >= s, and for i >= s - 1 when C_s is the whole space
  const bool top_trivial = ks[s - 1] == n;
  double lower = std::numeric_limits<double>::infinity(), upper = lower;
  std::vector<double> level(s);
  for (std::size_t i = 0; i < s; ++i) {
    level[i] = std::pow(pd, 2.0 * static_cast<double>(i)) * static_cast<double>(w[i]);
    lower = std::min(lower, level[i]);
    if (i + 1 >= s || (top_trivial && i + 2 >= s)) upper = std::min(upper, level[i]);
  }
  GainReport g;
  g.d_sq = {lower, upper};
  g.method = g.d_sq.exact() ? "formula" : "bound";

  double kmax = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (g.d_sq.exact() && level[i] != lower) continue;
    double ki = static_cast<double>(a[i]);
    if (p == 2) ki *= std::ldexp(1.0, static_cast<int>(w[i]));
    kmax += 2.0 * ki;
  }
  g.kissing = {std::min(4.0, kmax), kmax};
  g.r_mes = sum_k / n * std::log2(pd * pd);
  g.w_min.assign(w.begin(), w.end());
  g.a_wmin.assign(a.begin(), a.end());
  return finish(g, std::pow(pd, 2.0 * (static_cast<double>(s) - sum_k / n)));
}

GainReport gain_report_construction_d(const NestedCodeChain& chain) {
  if (chain.codes.empty()) throw std::invalid_argument("empty code chain");
  std::vector<double> ks;
  std::vector<i64> w;
  std::vector<std::uint64_t> a;
  for (std::size_t i = 0; i < chain.codes.size(); ++i) {
    const auto& c = chain.codes[i];
    if (i > 0 && c.k() < chain.codes[i - 1].k()) throw std::invalid_argument("code dimensions must increase");
    const auto wr = min_euclidean_weight(c);
    ks.push_back(static_cast<double>(c.k()));
    w.push_back(wr.w_min);
    a.push_back(wr.count);
  }
  return gain_report_construction_d(chain.p.v, static_cast<double>(chain.codes[0].n()), ks, w, a);
}

GainReport gain_report_bruteforce(const NestedPair& pair, i64 radius_bound) {
  const auto d = min_intercoset_distance_bruteforce(pair.quotient, pair.labeling, radius_bound);
  GainReport g;
  g.method = "bruteforce";
  g.d_sq = {static_cast<double>(d.d_sq), static_cast<double>(d.d_sq)};
  g.kissing = {static_cast<double>(d.kissing), static_cast<double>(d.kissing)};
  g.r_mes = pair.labeling.r_mes();
  g.gamma_c = nominal_coding_gain_log(g.d_sq.lower, log2_fine_volume(pair.quotient), pair.quotient.dim());
  g.gamma_c_db = to_db(g.gamma_c);
  return g;
}

// ---- catalog ----

NestedCodeChain hamming_chain(unsigned m) {
  auto c1 = extended_hamming_code(m);
  auto c2 = trivial_code(Integer{2}, c1.n());
  return {Integer{2}, {std::move(c1), std::move(c2)}};
}

std::span<const CatalogEntry> catalog() {
  static const std::vector<CatalogEntry> entries{
      {"conv-nu1", "a-complex", "terminated rate-1/2 convolutional code over Z[i]/<3>, 9 states", 2.0},
      {"conv-nu2", "a-complex", "terminated rate-1/2 convolutional code over Z[i]/<3>, 81 states", 3.0},
      {"hamming-ext-32", "d", "[32,26] extended Hamming code nested in the trivial code, p = 2", 3.08},
      {"hamming-ext-64", "d", "[64,57] extended Hamming code nested in the trivial code, p = 2", 3.44},
      {"hamming-ext-128", "d", "[128,120] extended Hamming code nested in the trivial code, p = 2", 3.67},
      {"hamming-ext-256", "d", "[256,247] extended Hamming code nested in the trivial code, p = 2", 3.81},
      {"baseline-pi3", "baseline", "Z[i]^n / 3 Z[i]^n", 1.0},
      {"qam9", "qam", "9-QAM physical-layer network coding, m = 3", 1.0},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown scheme: " + std::string(name));
}

GainReport catalog_gain(std::string_view name) {
  const auto& e = catalog_entry(name);
  if (e.construction == "a-complex") {
    const std::size_t nu = e.name == "conv-nu1" ? 1 : 2;
    return gain_report_convolutional(table_encoder(nu), frame_symbols / 2 - nu);
  }
  if (e.construction == "d") {
    const unsigned m = static_cast<unsigned>(std::stoul(e.name.substr(e.name.rfind('-') + 1)));
    return gain_report_construction_d(hamming_chain(static_cast<unsigned>(std::log2(m))));
  }
  return gain_report_construction_a(trivial_code(GaussInt{3}, frame_symbols));
}

template LinearCode<Integer> make_code(const Integer&, const Matrix<Integer>&, CodeFamily);
template LinearCode<GaussInt> make_code(const GaussInt&, const Matrix<GaussInt>&, CodeFamily);
template LinearCode<Integer> trivial_code(const Integer&, std::size_t);
template LinearCode<GaussInt> trivial_code(const GaussInt&, std::size_t);
template Matrix<Integer> parity_check(const LinearCode<Integer>&);
template Matrix<GaussInt> parity_check(const LinearCode<GaussInt>&);
template WeightResult min_euclidean_weight(const LinearCode<Integer>&, std::uint64_t);
template WeightResult min_euclidean_weight(const LinearCode<GaussInt>&, std::uint64_t);

}  // namespace lnc
