#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lnc/lattices.hpp"

namespace lnc {

enum class CodeFamily { generic, extended_hamming, convolutional };

/// Linear [n, k] code over the field T/<pi>. The generator is kept in reduced echelon form,
/// which is systematic up to the coordinate order given by pivots.
template <EuclideanRing T>
struct LinearCode {
  T modulus;
  Matrix<T> generator;
  std::vector<std::size_t> pivots;
  CodeFamily family = CodeFamily::generic;

  std::size_t n() const { return generator.cols(); }
  std::size_t k() const { return generator.rows(); }
  bool is_trivial() const { return k() == n(); }
};

/// Validates and row-reduces a generator; rejects non-prime moduli and dependent rows.
template <EuclideanRing T>
LinearCode<T> make_code(const T& modulus, const Matrix<T>& generator, CodeFamily family = CodeFamily::generic);

/// The [n, n] code.
template <EuclideanRing T>
LinearCode<T> trivial_code(const T& modulus, std::size_t n);

/// Parity-check matrix H with c in C iff H * c^T = 0.
template <EuclideanRing T>
Matrix<T> parity_check(const LinearCode<T>& code);

/// Binary extended Hamming code of length 2^m.
LinearCode<Integer> extended_hamming_code(unsigned m);

/// Counts binary codewords of each Hamming weight 1..max_weight by screening weight-w words
/// against the parity checks. Requires n - k <= 64.
std::vector<std::uint64_t> low_weight_counts(const LinearCode<Integer>& code, unsigned max_weight);

// ---- convolutional codes over Z[i]/<3> ----

/// Rate-1/2 feed-forward encoder; taps[o][d] is the coefficient of D^d in output o.
struct ConvEncoder {
  std::size_t nu = 1;
  std::array<std::vector<GaussInt>, 2> taps;
  GaussInt modulus{3};
};

/// Table entries for nu = 1 and nu = 2.
ConvEncoder table_encoder(std::size_t nu);

/// State machine shared by the weight search and the quantizer.
struct Trellis {
  std::size_t q = 0;                        // field size
  std::size_t states = 0;                   // q^nu
  std::vector<GaussInt> symbols;            // minimal-norm representatives, indexed
  std::vector<std::uint32_t> next;          // [state * q + input]
  std::vector<std::array<std::uint8_t, 2>> out;  // output symbol indices [state * q + input]

  std::size_t symbol_index(const GaussInt& x) const;
};

Trellis make_trellis(const ConvEncoder& enc);

/// Terminated code: inputs of degree < mu followed by nu zero tail symbols, outputs interleaved,
/// giving a [2(mu + nu), mu] block code.
LinearCode<GaussInt> terminated_code(const ConvEncoder& enc, std::size_t mu);

/// Codeword of the terminated code for the given inputs.
std::vector<GaussInt> conv_encode(const ConvEncoder& enc, std::span<const GaussInt> inputs);

// ---- weights ----

struct WeightResult {
  i64 w_min = 0;
  std::uint64_t count = 0;
  std::string method;  // "enumeration" | "analytic" | "trellis"
};

/// Minimum Euclidean weight over nonzero codewords, using minimal-norm lifts, and the number of
/// codewords attaining it. Unstructured codes must satisfy |alphabet|^k <= budget.
template <EuclideanRing T>
WeightResult min_euclidean_weight(const LinearCode<T>& code, std::uint64_t budget = 1ull << 22);

WeightResult trellis_min_weight(const ConvEncoder& enc, std::size_t mu);

// ---- nested pairs ----

struct NestedPair {
  std::string construction;  // "a" | "a-complex" | "d"
  LatticeQuotient<GaussInt> quotient;
  LinearLabeling<GaussInt> labeling;
  Matrix<Integer> basis;  // Construction D: lifted triangular basis g~_1..g~_n; empty otherwise

  /// True when W is a vector space over a single finite field.
  bool is_vector_space() const;
};

/// Real Construction A from a code over Z/<p>, lifted to Z[i].
NestedPair construct_a_real(const LinearCode<Integer>& code);

/// Complex Construction A from a code over Z[i]/<pi>.
NestedPair construct_a_complex(const LinearCode<GaussInt>& code);

struct NestedCodeChain {
  Integer p;
  std::vector<LinearCode<Integer>> codes;  // C_1 subset ... subset C_s
};

struct ChainBasis {
  Matrix<Integer> g;             // rows g_1..g_n over Z/<p>, values in {0..p-1}
  std::vector<std::size_t> ks;   // k_1 <= ... <= k_s
};

/// Basis of (Z/<p>)^n whose first k_i rows span C_i and that is triangular with unit
/// diagonal after a row permutation.
ChainBasis chain_basis(const NestedCodeChain& chain);

NestedPair construct_d(const NestedCodeChain& chain);

// ---- gains ----

struct Range {
  double lower = 0;
  double upper = 0;
  bool exact() const { return lower == upper; }
};

struct GainReport {
  std::string method;  // "formula" | "bound" | "bruteforce"
  Range d_sq;
  Range kissing;
  double gamma_c = 0;  // exact value, or the lower bound when d_sq is a range
  double gamma_c_db = 0;
  double r_mes = 0;
  std::vector<i64> w_min;               // per code (one entry for Construction A)
  std::vector<std::uint64_t> a_wmin;    // codewords attaining w_min, per code
};

double to_db(double x);

GainReport gain_report_construction_a(const LinearCode<Integer>& code);
GainReport gain_report_construction_a(const LinearCode<GaussInt>& code);
/// Terminated convolutional code under complex Construction A, weights from the trellis.
GainReport gain_report_convolutional(const ConvEncoder& enc, std::size_t mu);

/// Construction D from per-level data: dimensions k_i (possibly rate * n), weights w_i and
/// counts A_i. The lower bound on d^2 is attained whenever the minimal level's shortest lift
/// provably lies in the fine lattice, in which case d^2 is reported exactly.
GainReport gain_report_construction_d(i64 p, double n, std::span<const double> ks, std::span<const i64> w,
                                      std::span<const std::uint64_t> a);
GainReport gain_report_construction_d(const NestedCodeChain& chain);

/// Brute-force (d^2, K) of a nested pair; gamma_c from the fine-lattice volume.
GainReport gain_report_bruteforce(const NestedPair& pair, i64 radius_bound);

// ---- catalog ----

/// Complex symbols per frame for the catalog schemes.
inline constexpr std::size_t frame_symbols = 200;

struct CatalogEntry {
  std::string name;
  std::string construction;  // "a-complex" | "d" | "baseline" | "qam"
  std::string description;
  double gamma_target = 0;
};

std::span<const CatalogEntry> catalog();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);
GainReport catalog_gain(std::string_view name);

/// Extended Hamming [2^m] code nested in the trivial code.
NestedCodeChain hamming_chain(unsigned m);

extern template LinearCode<Integer> make_code(const Integer&, const Matrix<Integer>&, CodeFamily);
extern template LinearCode<GaussInt> make_code(const GaussInt&, const Matrix<GaussInt>&, CodeFamily);
extern template LinearCode<Integer> trivial_code(const Integer&, std::size_t);
extern template LinearCode<GaussInt> trivial_code(const GaussInt&, std::size_t);
extern template Matrix<Integer> parity_check(const LinearCode<Integer>&);
extern template Matrix<GaussInt> parity_check(const LinearCode<GaussInt>&);
extern template WeightResult min_euclidean_weight(const LinearCode<Integer>&, std::uint64_t);
extern template WeightResult min_euclidean_weight(const LinearCode<GaussInt>&, std::uint64_t);

}  // namespace lnc
