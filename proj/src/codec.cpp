#include "lnc/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lnc/rng.hpp"

namespace lnc {

namespace {

std::vector<GaussInt> alphabet(const GaussInt& pi) {
  std::vector<GaussInt> reps{GaussInt{}};
  for (const GaussInt& x : coset_leaders(pi)) {
    const GaussInt r = Residue<GaussInt>::reduce(x, canonical(pi));
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  return reps;
}

// c with fine lattice c * Z[i]^n, if any
std::optional<GaussInt> fine_scale(const LatticeQuotient<GaussInt>& q) {
  LatticeQuotient<GaussInt> probe{q.g_fine, Matrix<GaussInt>::identity(q.dim()), q.scale, std::nullopt};
  return coarse_scale(probe);
}

cplx mod_c(cplx x, cplx c) { return x - c * to_complex(round_to_ring(x / c)); }

}  // namespace

LncScheme::LncScheme(std::string name, NestedPair pair, std::optional<std::uint64_t> seed)
    : name_(std::move(name)), pair_(std::move(pair)), dither_seed_(seed) {
  if (pair_.quotient.unitary) throw std::invalid_argument("rotated shaping is not supported by the codec");
  const auto c = coarse_scale(pair_.quotient);
  if (!c) throw std::invalid_argument("coarse lattice must be a scaled copy of Z[i]^n");
  coarse_ = *c;
  power_ = gamma() * gamma() / 6.0;
}

LncScheme LncScheme::coordinate(std::string name, NestedPair pair, std::optional<std::uint64_t> dither_seed) {
  LncScheme s(std::move(name), std::move(pair), dither_seed);
  const auto f = fine_scale(s.pair_.quotient);
  if (!f) throw std::invalid_argument("coordinate quantizer needs a fine lattice f * Z[i]^n");
  s.fine_ = *f;
  s.kind_ = QuantizerKind::coordinate;
  if (!dither_seed) {
    // mean energy of the centered constellation; every coordinate is the same 1-d quotient
    const cplx cc = to_complex(s.coarse_), ff = to_complex(s.fine_);
    const auto reps = alphabet(div_exact(s.coarse_, s.fine_));
    double e = 0;
    for (const auto& r : reps) e += std::norm(mod_c(ff * to_complex(r), cc));
    s.power_ = e / static_cast<double>(reps.size()) * s.pair_.quotient.scale * s.pair_.quotient.scale;
  }
  return s;
}

LncScheme LncScheme::trellis(std::string name, NestedPair pair, TrellisQuantizer tq,
                             std::optional<std::uint64_t> dither_seed) {
  LncScheme s(std::move(name), std::move(pair), dither_seed);
  if (tq.encoder.modulus != GaussInt{3}) throw std::invalid_argument("trellis quantizer works over Z[i]/<3>");
  if (s.n() != 2 * (tq.mu + tq.encoder.nu)) throw std::invalid_argument("trellis length does not match the lattice");
  if (s.coarse_ != GaussInt{3}) throw std::invalid_argument("trellis quantizer needs the coarse lattice 3 Z[i]^n");
  s.trellis_ = make_trellis(tq.encoder);
  s.tq_ = std::move(tq);
  s.kind_ = QuantizerKind::trellis;
  return s;
}

double LncScheme::gamma() const { return std::sqrt(static_cast<double>(norm(coarse_))) * pair_.quotient.scale; }

std::vector<cplx> LncScheme::dither(std::uint64_t transmitter, std::uint64_t frame) const {
  std::vector<cplx> d(n());
  if (!dither_seed_) return d;
  KeyedRng rng(*dither_seed_, {0x64697468ull, transmitter, frame});
  const cplx c = to_complex(coarse_) * pair_.quotient.scale;
  for (auto& v : d) {
    const double re = 0.5 - rng.uniform();
    const double im = 0.5 - rng.uniform();
    v = c * cplx{re, im};
  }
  return d;
}

std::vector<cplx> LncScheme::mod_coarse(std::span<const cplx> x) const {
  if (x.size() != n()) throw std::invalid_argument("vector length mismatch");
  const double s = pair_.quotient.scale;
  const cplx c = to_complex(coarse_);
  std::vector<cplx> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_c(x[i] / s, c) * s;
  return out;
}

Vec<GaussInt> LncScheme::quantize(std::span<const cplx> target) const {
  if (target.size() != n()) throw std::invalid_argument("target length mismatch");
  if (kind_ == QuantizerKind::trellis) return viterbi_quantize(*this, target);
  const double s = pair_.quotient.scale;
  const cplx f = to_complex(fine_);
  Vec<GaussInt> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = fine_ * round_to_ring(target[i] / s / f);
  return out;
}

LncScheme make_scheme(std::string_view name, std::optional<std::uint64_t> dither_seed) {
  const auto& entry = catalog_entry(name);
  if (entry.construction == "baseline" || entry.construction == "qam") {
    auto pair = construct_a_complex(trivial_code(GaussInt{3}, frame_symbols));
    if (entry.construction == "qam") dither_seed = std::nullopt;
    return LncScheme::coordinate(entry.name, std::move(pair), dither_seed);
  }
  if (entry.name == "conv-nu1" || entry.name == "conv-nu2") {
    TrellisQuantizer tq{table_encoder(entry.name == "conv-nu1" ? 1 : 2), 0};
    tq.mu = frame_symbols / 2 - tq.encoder.nu;
    auto pair = construct_a_complex(terminated_code(tq.encoder, tq.mu));
    return LncScheme::trellis(entry.name, std::move(pair), std::move(tq), dither_seed);
  }
  throw std::invalid_argument("scheme '" + entry.name + "' has no decoder; it supports gain analysis only");
}

Message<GaussInt> random_message(const LncScheme& scheme, std::uint64_t seed, std::uint64_t transmitter,
                                 std::uint64_t frame) {
  KeyedRng rng(seed, {0x6d7367ull, transmitter, frame});
  Message<GaussInt> w;
  const auto& pis = scheme.labeling().pis();
  w.components.reserve(pis.size());
  GaussInt last{};
  std::vector<GaussInt> reps;
  for (const GaussInt& pi : pis) {
    if (reps.empty() || pi != last) {
      reps = alphabet(pi);
      last = pi;
    }
    w.components.emplace_back(reps[rng.below(reps.size())], pi);
  }
  return w;
}

Frame encode(const LncScheme& scheme, const Message<GaussInt>& w, std::uint64_t transmitter, std::uint64_t frame) {
  if (w.size() != scheme.labeling().k()) throw std::invalid_argument("message shape mismatch");
  Frame f;
  f.w = w;
  f.dither = scheme.dither(transmitter, frame);
  const auto lambda = scheme.labeling().embed(w);
  const double s = scheme.quotient().scale;
  std::vector<cplx> v(scheme.n());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.dither[i] + s * to_complex(lambda[i]);
  f.x = scheme.mod_coarse(v);
  return f;
}

cplx mmse_alpha(std::span<const cplx> h, std::span<const GaussInt> a, double snr) {
  if (h.size() != a.size()) throw std::invalid_argument("h and a must have equal length");
  if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
  cplx ah{};
  double hh = 0;
  for (std::size_t l = 0; l < h.size(); ++l) {
    ah += to_complex(a[l]) * std::conj(h[l]);
    hh += std::norm(h[l]);
  }
  if (hh == 0) throw std::invalid_argument("h must be nonzero");
  return ah * snr / (hh * snr + 1.0);
}

Message<GaussInt> decode(const LncScheme& scheme, std::span<const cplx> y, std::span<const cplx> h,
                         std::span<const GaussInt> a, std::span<const std::vector<cplx>> dithers, double snr,
                         std::optional<cplx> alpha) {
  const std::size_t n = scheme.n();
  if (y.size() != n) throw std::invalid_argument("received length mismatch");
  if (h.size() != a.size() || dithers.size() != a.size()) throw std::invalid_argument("one h, a and dither per transmitter");
  for (const auto& d : dithers)
    if (d.size() != n) throw std::invalid_argument("dither length mismatch");
  const cplx al = alpha ? *alpha : mmse_alpha(h, a, snr);
  std::vector<cplx> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx v = al * y[i];
    for (std::size_t l = 0; l < a.size(); ++l) v -= to_complex(a[l]) * dithers[l][i];
    t[i] = v;
  }
  return scheme.labeling().label(scheme.quantize(t));
}

ViterbiResult viterbi_codeword(const Trellis& tr, std::size_t mu, std::size_t nu, std::span<const cplx> target) {
  const std::size_t len = mu + nu;
  if (target.size() != 2 * len) throw std::invalid_argument("target length must be 2(mu + nu)");
  const std::size_t q = tr.q, S = tr.states;
  const cplx three{3, 0};
  constexpr double inf = std::numeric_limits<double>::infinity();

  std::vector<double> cost(S, inf), next_cost(S);
  cost[0] = 0;
  // survivor: predecessor state and input per (time, state)
  std::vector<std::uint32_t> pred(len * S);
  std::vector<std::uint8_t> input(len * S);
  std::vector<double> bm(2 * q);

  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t o = 0; o < 2; ++o)
      for (std::size_t x = 0; x < q; ++x) bm[o * q + x] = std::norm(mod_c(to_complex(tr.symbols[x]) - target[2 * t + o], three));
    std::fill(next_cost.begin(), next_cost.end(), inf);
    const std::size_t inputs = t < mu ? q : 1;
    // predecessors visited in increasing index with strict improvement, so the lowest wins ties
    for (std::size_t s = 0; s < S; ++s) {
      if (cost[s] == inf) continue;
      for (std::size_t x = 0; x < inputs; ++x) {
        const std::size_t e = s * q + x;
        const double c = cost[s] + bm[tr.out[e][0]] + bm[q + tr.out[e][1]];
        const std::size_t ns = tr.next[e];
        if (c < next_cost[ns]) {
          next_cost[ns] = c;
          pred[t * S + ns] = static_cast<std::uint32_t>(s);
          input[t * S + ns] = static_cast<std::uint8_t>(x);
        }
      }
    }
    cost.swap(next_cost);
  }

  ViterbiResult r;
  r.metric = cost[0];
  r.codeword.resize(2 * len);
  std::size_t s = 0;
  for (std::size_t t = len; t-- > 0;) {
    const std::size_t p = pred[t * S + s];
    const std::size_t e = p * q + input[t * S + s];
    r.codeword[2 * t] = tr.symbols[tr.out[e][0]];
    r.codeword[2 * t + 1] = tr.symbols[tr.out[e][1]];
    s = p;
  }
  return r;
}

Vec<GaussInt> viterbi_quantize(const LncScheme& scheme, std::span<const cplx> target) {
  if (scheme.quantizer() != QuantizerKind::trellis) throw std::invalid_argument("scheme has no trellis quantizer");
  const auto& tq = *scheme.trellis_quantizer();
  const double s = scheme.quotient().scale;
  std::vector<cplx> t(target.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = target[i] / s;
  const auto r = viterbi_codeword(scheme.trellis_machine(), tq.mu, tq.encoder.nu, t);
  Vec<GaussInt> lambda(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    // lambda = c - 3 * round((c - t) / 3), the coset point of c closest to t
    const cplx diff = to_complex(r.codeword[i]) - t[i];
    lambda[i] = r.codeword[i] - GaussInt{3} * round_to_ring(diff / 3.0);
  }
  return lambda;
}

std::vector<Residue<GaussInt>> qam_pnc_decode(std::span<const cplx> y, std::span<const cplx> h,
                                              std::span<const GaussInt> a, i64 m, double gamma,
                                              std::optional<double> snr) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (h.size() != a.size() || h.empty()) throw std::invalid_argument("h and a must have equal nonzero length");
  cplx alpha;
  if (snr) {
    alpha = mmse_alpha(h, a, *snr);
  } else {
    cplx ah{};
    double hh = 0;
    for (std::size_t l = 0; l < h.size(); ++l) {
      ah += to_complex(a[l]) * std::conj(h[l]);
      hh += std::norm(h[l]);
    }
    alpha = ah / hh;
  }
  const double half = static_cast<double>(m - 1) / 2.0;
  cplx offset{};
  for (const auto& al : a) offset += to_complex(al) * cplx{half, half};
  const GaussInt mod{m};
  std::vector<Residue<GaussInt>> out;
  out.reserve(y.size());
  for (const cplx& v : y) out.emplace_back(round_to_ring(alpha * v / gamma + offset), mod);
  return out;
}

std::vector<cplx> qam_encode(std::span<const Residue<GaussInt>> w, i64 m, double gamma) {
  const double half = static_cast<double>(m - 1) / 2.0;
  std::vector<cplx> x(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const GaussInt v = w[i].value();
    const auto lift = [m](i64 c) { return static_cast<double>(((c % m) + m) % m); };
    x[i] = gamma * (cplx{lift(v.re), lift(v.im)} - cplx{half, half});
  }
  return x;
}

}  // namespace lnc
