#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lnc/constructions.hpp"

namespace lnc {

enum class QuantizerKind { coordinate, trellis };

struct TrellisQuantizer {
  ConvEncoder encoder;
  std::size_t mu = 0;
};

struct Frame {
  std::vector<cplx> x;
  Message<GaussInt> w;
  std::vector<cplx> dither;
};

/// A concrete lattice codec over Z[i]: nested pair, hypercube shaping on the coarse lattice
/// c * Z[i]^n, an optional keyed dither and a nearest-neighbour quantizer for the fine lattice.
class LncScheme {
 public:
  /// Coordinate quantizer; the fine lattice must be f * Z[i]^n.
  static LncScheme coordinate(std::string name, NestedPair pair, std::optional<std::uint64_t> dither_seed);
  /// Modified Viterbi quantizer; the pair must be complex Construction A of the terminated code.
  static LncScheme trellis(std::string name, NestedPair pair, TrellisQuantizer tq,
                           std::optional<std::uint64_t> dither_seed);

  const std::string& name() const { return name_; }
  std::size_t n() const { return pair_.quotient.dim(); }
  const LatticeQuotient<GaussInt>& quotient() const { return pair_.quotient; }
  const LinearLabeling<GaussInt>& labeling() const { return pair_.labeling; }
  QuantizerKind quantizer() const { return kind_; }
  const std::optional<TrellisQuantizer>& trellis_quantizer() const { return tq_; }
  const Trellis& trellis_machine() const { return trellis_; }
  /// Coarse generator c with coarse lattice c * Z[i]^n (before geometric scaling).
  const GaussInt& coarse_generator() const { return coarse_; }
  /// Side of the shaping hypercube, |c| * scale.
  double gamma() const;
  /// Average power per complex symbol, gamma^2 / 6 with dither. Undithered schemes report the
  /// mean energy of the embedded constellation.
  double power() const { return power_; }
  bool dithered() const { return dither_seed_.has_value(); }
  std::optional<std::uint64_t> dither_seed() const { return dither_seed_; }
  void set_dither_seed(std::optional<std::uint64_t> seed) { dither_seed_ = seed; }

  /// Dither of one transmitter in one frame, uniform over the shaping region; zeros without dither.
  std::vector<cplx> dither(std::uint64_t transmitter, std::uint64_t frame) const;
  /// x mod the coarse lattice, into the centered half-open region.
  std::vector<cplx> mod_coarse(std::span<const cplx> x) const;
  /// Nearest fine-lattice point, in exact ambient coordinates (unscaled).
  Vec<GaussInt> quantize(std::span<const cplx> target) const;

 private:
  LncScheme(std::string name, NestedPair pair, std::optional<std::uint64_t> seed);

  std::string name_;
  NestedPair pair_;
  QuantizerKind kind_ = QuantizerKind::coordinate;
  std::optional<TrellisQuantizer> tq_;
  Trellis trellis_;
  GaussInt coarse_;
  GaussInt fine_;  // coordinate quantizer step
  double power_ = 0;
  std::optional<std::uint64_t> dither_seed_;
};

/// Catalog schemes with a decoder: baseline-pi3, conv-nu1, conv-nu2, qam9 (undithered baseline).
LncScheme make_scheme(std::string_view name, std::optional<std::uint64_t> dither_seed);

/// Uniform random message of the scheme's message space.
Message<GaussInt> random_message(const LncScheme& scheme, std::uint64_t seed, std::uint64_t transmitter,
                                 std::uint64_t frame);

Frame encode(const LncScheme& scheme, const Message<GaussInt>& w, std::uint64_t transmitter, std::uint64_t frame);

/// a h^H SNR / (||h||^2 SNR + 1).
cplx mmse_alpha(std::span<const cplx> h, std::span<const GaussInt> a, double snr);

/// phi(Q(alpha y - sum a_l d_l)); alpha defaults to mmse_alpha.
Message<GaussInt> decode(const LncScheme& scheme, std::span<const cplx> y, std::span<const cplx> h,
                         std::span<const GaussInt> a, std::span<const std::vector<cplx>> dithers, double snr,
                         std::optional<cplx> alpha = std::nullopt);

/// Nearest point of the terminated-code lattice sigma~(C) + 3 Z[i]^n to target.
Vec<GaussInt> viterbi_quantize(const LncScheme& scheme, std::span<const cplx> target);

/// Viterbi over a bare trellis, returning the codeword symbols and the mod-3 metric.
struct ViterbiResult {
  std::vector<GaussInt> codeword;  // minimal-norm representatives, length 2(mu + nu)
  double metric = 0;
};
ViterbiResult viterbi_codeword(const Trellis& trellis, std::size_t mu, std::size_t nu, std::span<const cplx> target);

/// m^2-QAM physical-layer network coding decoder. Scales y by alpha (mmse when snr is given,
/// the projection a h^H / ||h||^2 otherwise), removes the constellation offsets and rounds
/// each coordinate mod m.
std::vector<Residue<GaussInt>> qam_pnc_decode(std::span<const cplx> y, std::span<const cplx> h,
                                              std::span<const GaussInt> a, i64 m, double gamma,
                                              std::optional<double> snr = std::nullopt);

/// m^2-QAM encoder gamma * (sigma~(w) - d) with d = ((m - 1) / 2)(1 + i).
std::vector<cplx> qam_encode(std::span<const Residue<GaussInt>> w, i64 m, double gamma);

}  // namespace lnc
