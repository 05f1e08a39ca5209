#include "lnc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "lnc/analysis.hpp"
#include "lnc/rng.hpp"

namespace lnc {

namespace {

constexpr std::uint64_t tag_channel = 0x6368616eull;
constexpr std::uint64_t tag_noise = 0x6e6f6973ull;
const GaussInt field_modulus{3};

bool is_ng(const std::string& s) { return s == "ng-outage"; }
bool is_qam(const std::string& s) { return s == "qam9"; }

const std::vector<std::string>& simulated_schemes() {
  static const std::vector<std::string> names{"ng-outage", "baseline-pi3", "qam9", "conv-nu1", "conv-nu2"};
  return names;
}

// everything about a config that does not depend on the SNR
struct Prepared {
  std::optional<LncScheme> scheme;
  double power = 1.5;  // ng-outage has no constellation; any P works since only SNR enters
  double d_sq = 0;
  double kissing = 0;
};

Prepared prepare(const SimConfig& c) {
  Prepared p;
  if (is_ng(c.scheme)) return p;
  p.scheme.emplace(make_scheme(c.scheme, c.seed));
  p.power = p.scheme->power();
  const auto g = catalog_gain(c.scheme);
  const double s = p.scheme->quotient().scale;
  p.d_sq = g.d_sq.lower * s * s;
  p.kissing = g.kissing.upper;
  return p;
}

std::vector<std::vector<GaussInt>> select(const SimConfig& c, std::span<const cplx> h, double snr) {
  if (c.policy.kind == PolicyKind::fixed) return {c.policy.a};
  const auto ctx = GramContext::from_channel(h, snr);
  std::vector<std::vector<GaussInt>> out;
  if (c.policy.kind == PolicyKind::adaptive) {
    out.push_back(best_single_coefficient(ctx, field_modulus, c.policy.constraint).a);
  } else {
    for (auto& v : dominant_solution(ctx, c.policy.m, field_modulus)) out.push_back(std::move(v.a));
  }
  return out;
}

struct CellState {
  double snr = 0;
  double n0 = 0;
  std::optional<std::vector<std::vector<GaussInt>>> fixed_choice;  // when h is fixed
};

struct FrameOutcome {
  std::vector<std::uint8_t> error;
  std::vector<double> ube;
};

std::vector<cplx> draw_channel(const SimConfig& c, std::uint64_t cell, std::uint64_t frame) {
  if (c.fading == FadingKind::fixed) return c.h;
  KeyedRng rng(c.seed, {tag_channel, cell, frame});
  std::vector<cplx> h(c.num_tx);
  for (auto& x : h) x = rng.complex_gaussian(1.0);
  return h;
}

FrameOutcome run_frame(const SimConfig& c, const Prepared& p, const CellState& cs, std::uint64_t cell,
                       std::uint64_t frame) {
  const auto h = draw_channel(c, cell, frame);
  const auto choice = cs.fixed_choice ? *cs.fixed_choice : select(c, h, cs.snr);
  FrameOutcome out;
  out.error.resize(choice.size());
  out.ube.assign(choice.size(), std::numeric_limits<double>::quiet_NaN());

  if (is_ng(c.scheme)) {
    const auto ctx = GramContext::from_channel(h, cs.snr);
    for (std::size_t i = 0; i < choice.size(); ++i)
      out.error[i] = std::log2(3.0) >= computation_rate(ctx, choice[i]);
    return out;
  }

  const auto& s = *p.scheme;
  const std::uint64_t frame_id = (cell << 32) | frame;
  const std::size_t n = s.n();
  std::vector<Message<GaussInt>> w;
  std::vector<std::vector<cplx>> dithers;
  std::vector<cplx> y(n);
  for (std::size_t l = 0; l < c.num_tx; ++l) {
    w.push_back(random_message(s, c.seed, l, frame_id));
    std::vector<cplx> x;
    if (is_qam(c.scheme)) {
      x = qam_encode(w.back().components, 3, 1.0);
      dithers.emplace_back(n);
    } else {
      auto f = encode(s, w.back(), l, frame_id);
      x = std::move(f.x);
      dithers.push_back(std::move(f.dither));
    }
    for (std::size_t j = 0; j < n; ++j) y[j] += h[l] * x[j];
  }
  if (!c.noiseless) {
    KeyedRng rng(c.seed, {tag_noise, cell, frame});
    for (auto& v : y) v += rng.complex_gaussian(cs.n0);
  }

  for (std::size_t i = 0; i < choice.size(); ++i) {
    const auto& a = choice[i];
    auto expected = a[0] * w[0];
    for (std::size_t l = 1; l < c.num_tx; ++l) expected = expected + a[l] * w[l];

    std::optional<cplx> alpha;
    if (c.noiseless) {
      cplx ah{};
      double hh = 0;
      for (std::size_t l = 0; l < c.num_tx; ++l) {
        ah += to_complex(a[l]) * std::conj(h[l]);
        hh += std::norm(h[l]);
      }
      alpha = ah / hh;
    }
    if (is_qam(c.scheme)) {
      const auto got = qam_pnc_decode(y, h, a, 3, 1.0, c.noiseless ? std::nullopt : std::optional<double>(cs.snr));
      out.error[i] = got != expected.components;
    } else {
      out.error[i] = decode(s, y, h, a, dithers, cs.snr, alpha) != expected;
    }
    out.ube[i] = c.noiseless ? 0.0 : union_bound_estimate({p.d_sq, p.kissing, h, a, cs.snr, cs.n0, std::nullopt});
  }
  return out;
}

CellState make_cell(const SimConfig& c, const Prepared& p, double snr_db) {
  CellState cs;
  cs.snr = std::pow(10.0, snr_db / 10.0);
  cs.n0 = p.power / cs.snr;
  if (c.fading == FadingKind::fixed) cs.fixed_choice = select(c, c.h, cs.snr);
  return cs;
}

std::vector<SimRecord> collect(const SimConfig& c, double snr_db, const std::vector<FrameOutcome>& frames) {
  const std::size_t combos = frames.empty() ? (c.policy.kind == PolicyKind::dominant ? c.policy.m : 1)
                                            : frames.front().error.size();
  std::vector<SimRecord> out;
  for (std::size_t i = 0; i < combos; ++i) {
    SimRecord r{c.scheme, c.scenario, i + 1, snr_db, c.frames, 0, 0, 0, c.seed};
    double ube = 0;
    // serial sums in frame order keep the floating-point result independent of threading
    for (const auto& f : frames) {
      r.frame_errors += f.error[i];
      ube += f.ube[i];
    }
    r.fer = c.frames ? static_cast<double>(r.frame_errors) / static_cast<double>(c.frames) : 0.0;
    r.ube = c.frames ? ube / static_cast<double>(c.frames) : std::numeric_limits<double>::quiet_NaN();
    out.push_back(r);
  }
  return out;
}

std::vector<SimRecord> run_prepared(const SimConfig& c, const Prepared& p, double snr_db, std::uint64_t cell,
                                    bool parallel) {
  const auto cs = make_cell(c, p, snr_db);
  std::vector<FrameOutcome> frames(c.frames);
  const auto count = static_cast<std::int64_t>(c.frames);
  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t f = 0; f < count; ++f) {
      try {
        frames[static_cast<std::size_t>(f)] = run_frame(c, p, cs, cell, static_cast<std::uint64_t>(f));
      } catch (...) {
#pragma omp critical(lnc_sim_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t f = 0; f < count; ++f)
      frames[static_cast<std::size_t>(f)] = run_frame(c, p, cs, cell, static_cast<std::uint64_t>(f));
  }
  return collect(c, snr_db, frames);
}

}  // namespace

std::vector<cplx> scenario1_channel() { return {{-1.17, 2.15}, {1.25, -1.63}}; }

SimConfig default_config(int scenario, const std::string& scheme) {
  SimConfig c;
  c.scenario = scenario;
  c.scheme = scheme;
  if (scenario == 1) {
    c.fading = FadingKind::fixed;
    c.h = scenario1_channel();
  } else {
    c.fading = FadingKind::rayleigh;
  }
  if (scenario == 3) {
    c.policy.kind = PolicyKind::dominant;
    c.policy.m = 2;
  } else if (is_qam(scheme)) {
    c.policy.kind = PolicyKind::fixed;
    c.policy.a = {GaussInt{1}, GaussInt{1}};
  } else if (scheme == "baseline-pi3") {
    // the comparison with 9-QAM requires both users in the combination
    c.policy.constraint = CoefficientConstraint::all_entries_nonzero;
  }
  return c;
}

void validate(const SimConfig& c) {
  if (c.scenario < 1 || c.scenario > 3) throw ConfigError("scenario must be 1, 2 or 3");
  const auto& names = simulated_schemes();
  if (std::find(names.begin(), names.end(), c.scheme) == names.end())
    throw ConfigError("unknown or non-simulatable scheme '" + c.scheme + "'");
  if (c.num_tx != 2) throw ConfigError("the harness simulates two transmitters");
  if (c.fading == FadingKind::fixed && c.h.size() != c.num_tx) throw ConfigError("fixed fading needs one gain per transmitter");
  for (double s : c.snr_db)
    if (!std::isfinite(s)) throw ConfigError("SNR values must be finite");
  switch (c.policy.kind) {
    case PolicyKind::fixed:
      if (c.policy.a.size() != c.num_tx) throw ConfigError("fixed coefficients need one entry per transmitter");
      if (std::all_of(c.policy.a.begin(), c.policy.a.end(), [](const GaussInt& x) { return is_zero(x); }))
        throw ConfigError("fixed coefficients must be nonzero");
      break;
    case PolicyKind::adaptive: break;
    case PolicyKind::dominant:
      if (c.policy.m < 1 || c.policy.m > c.num_tx) throw ConfigError("dominant policy needs 1 <= m <= L");
      break;
  }
  if (is_qam(c.scheme)) {
    if (c.policy.kind != PolicyKind::fixed) throw ConfigError("qam9 decodes a fixed combination");
    for (const auto& x : c.policy.a)
      if (!is_unit(x)) throw ConfigError("qam9 coefficients must be units");
  }
}

double scheme_rate(const std::string& scheme) {
  if (is_ng(scheme)) return std::log2(3.0);
  return catalog_gain(scheme).r_mes;
}

std::vector<SimRecord> run_cell(const SimConfig& config, double snr_db, std::uint64_t cell) {
  validate(config);
  return run_prepared(config, prepare(config), snr_db, cell, true);
}

std::vector<SimRecord> run_cell_serial(const SimConfig& config, double snr_db, std::uint64_t cell) {
  validate(config);
  return run_prepared(config, prepare(config), snr_db, cell, false);
}

std::vector<SimRecord> sweep(const SimConfig& config) {
  validate(config);
  std::vector<SimRecord> out;
  if (config.snr_db.empty()) return out;
  const auto p = prepare(config);
  for (std::size_t i = 0; i < config.snr_db.size(); ++i)
    for (auto& r : run_prepared(config, p, config.snr_db[i], i, true)) out.push_back(std::move(r));
  return out;
}

void write_csv(std::ostream& os, const std::vector<SimRecord>& records) {
  os << csv_header << '\n';
  for (const auto& r : records) {
    std::ostringstream line;
    line << std::setprecision(12) << r.scheme << ',' << r.scenario << ',' << r.combination_index << ',' << r.snr_db
         << ',' << r.frames << ',' << r.frame_errors << ',' << r.fer << ',';
    if (std::isnan(r.ube))
      line << "nan";
    else
      line << r.ube;
    line << ',' << r.seed << '\n';
    os << line.str();
  }
}

std::optional<double> crossing_snr(const std::vector<SimRecord>& curve, double target) {
  const auto lg = [](const SimRecord& r) {
    const double floor = 0.5 / static_cast<double>(std::max<std::uint64_t>(r.frames, 1));
    return std::log10(std::max(r.fer, floor));
  };
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].fer > target) continue;
    if (i == 0) return curve[0].snr_db;
    const double y0 = lg(curve[i - 1]), y1 = lg(curve[i]), t = std::log10(target);
    const double frac = y0 == y1 ? 0.0 : (y0 - t) / (y0 - y1);
    return curve[i - 1].snr_db + frac * (curve[i].snr_db - curve[i - 1].snr_db);
  }
  return std::nullopt;
}

}  // namespace lnc
