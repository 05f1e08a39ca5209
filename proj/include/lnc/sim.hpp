#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lnc/codec.hpp"
#include "lnc/coeffs.hpp"
#include "lnc/errors.hpp"

namespace lnc {

enum class FadingKind { fixed, rayleigh };
enum class PolicyKind { fixed, adaptive, dominant };

struct CoefficientPolicy {
  PolicyKind kind = PolicyKind::adaptive;
  std::vector<GaussInt> a;  // fixed
  CoefficientConstraint constraint = CoefficientConstraint::nonzero_mod_pi;
  std::size_t m = 2;  // dominant
};

struct SimConfig {
  int scenario = 1;
  std::string scheme;  // catalog name with a decoder, or "ng-outage"
  std::vector<double> snr_db;
  std::uint64_t frames = 1000;
  std::uint64_t seed = 1;
  std::size_t num_tx = 2;
  FadingKind fading = FadingKind::fixed;
  std::vector<cplx> h;  // fixed fading
  CoefficientPolicy policy;
  bool noiseless = false;  // z = 0 and the zero-forcing limit of alpha
};

struct SimRecord {
  std::string scheme;
  int scenario = 0;
  std::size_t combination_index = 1;
  double snr_db = 0;
  std::uint64_t frames = 0;
  std::uint64_t frame_errors = 0;
  double fer = 0;
  double ube = 0;  // mean union-bound estimate; NaN where it does not apply
  std::uint64_t seed = 0;
};

/// Channel of the fixed-gain scenario.
std::vector<cplx> scenario1_channel();

/// Paper defaults for a scenario and scheme: fading model and coefficient policy.
SimConfig default_config(int scenario, const std::string& scheme);

/// Throws ConfigError.
void validate(const SimConfig& config);

/// Message rate of a simulated scheme, bits per complex dimension.
double scheme_rate(const std::string& scheme);

/// One SNR point; one record per combination. cell keys the random streams.
std::vector<SimRecord> run_cell(const SimConfig& config, double snr_db, std::uint64_t cell);
/// Same computation frame by frame on one thread; the reference for run_cell.
std::vector<SimRecord> run_cell_serial(const SimConfig& config, double snr_db, std::uint64_t cell);

/// run_cell over the grid, rows in grid order.
std::vector<SimRecord> sweep(const SimConfig& config);

inline constexpr const char* csv_header = "scheme,scenario,combination_index,snr_db,frames,frame_errors,fer,ube,seed";
void write_csv(std::ostream& os, const std::vector<SimRecord>& records);

/// Lowest SNR (dB) at which the FER curve falls to target, interpolating log10 FER linearly
/// between grid points; nullopt when the curve never reaches it.
std::optional<double> crossing_snr(const std::vector<SimRecord>& curve, double target);

}  // namespace lnc
