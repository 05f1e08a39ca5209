#include <cmath>
#include <sstream>

#include "doctest.h"
#include "lnc/sim.hpp"

using namespace lnc;

namespace {

SimConfig noiseless_config(const std::string& scheme, std::vector<GaussInt> a) {
  SimConfig c = default_config(1, scheme);
  c.h.clear();
  for (const auto& x : a) c.h.push_back(to_complex(x));
  c.policy.kind = PolicyKind::fixed;
  c.policy.a = std::move(a);
  c.noiseless = true;
  c.frames = 40;
  return c;
}

SimRecord record(double snr, double fer, std::uint64_t frames = 1000) {
  SimRecord r;
  r.snr_db = snr;
  r.frames = frames;
  r.fer = fer;
  r.frame_errors = static_cast<std::uint64_t>(std::llround(fer * static_cast<double>(frames)));
  return r;
}

std::string csv(const std::vector<SimRecord>& rs) {
  std::ostringstream os;
  write_csv(os, rs);
  return os.str();
}

}  // namespace

TEST_CASE("noiseless channel equal to the coefficients decodes every frame") {
  for (const char* name : {"baseline-pi3", "conv-nu1"}) {
    const auto c = noiseless_config(name, {GaussInt{1}, GaussInt{1, 1}});
    const auto r = run_cell(c, 0.0, 0);
    REQUIRE(r.size() == 1);
    CHECK(r[0].frame_errors == 0);
    CHECK(r[0].ube == 0.0);
  }
  const auto q = noiseless_config("qam9", {GaussInt{1}, GaussInt{0, 1}});
  CHECK(run_cell(q, 0.0, 0)[0].frame_errors == 0);
}

TEST_CASE("FER tracks SNR on the fixed channel") {
  auto c = default_config(1, "baseline-pi3");
  c.frames = 200;
  CHECK(run_cell(c, -5.0, 0)[0].fer > 0.9);
  CHECK(run_cell(c, 35.0, 0)[0].fer == 0.0);
  auto ng = default_config(1, "ng-outage");
  ng.frames = 10;
  CHECK(run_cell(ng, -5.0, 0)[0].fer == 1.0);
  CHECK(run_cell(ng, 35.0, 0)[0].fer == 0.0);
  CHECK(std::isnan(run_cell(ng, 35.0, 0)[0].ube));
}

TEST_CASE("parallel and serial cells agree exactly") {
  for (int scenario : {1, 2, 3}) {
    auto c = default_config(scenario, "baseline-pi3");
    c.frames = 64;
    c.seed = 11;
    const auto p = run_cell(c, 12.0, 3);
    const auto s = run_cell_serial(c, 12.0, 3);
    REQUIRE(p.size() == (scenario == 3 ? 2u : 1u));
    REQUIRE(p.size() == s.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].frame_errors == s[i].frame_errors);
      CHECK(p[i].ube == s[i].ube);
      CHECK(p[i].combination_index == i + 1);
    }
  }
}

TEST_CASE("sweep output is deterministic and shaped by the grid") {
  auto c = default_config(3, "ng-outage");
  c.frames = 30;
  c.snr_db = {0, 5, 10};
  const auto a = sweep(c);
  CHECK(a.size() == 6);
  CHECK(csv(a) == csv(sweep(c)));
  c.seed = 2;
  CHECK(csv(a) != csv(sweep(c)));

  auto q = default_config(2, "qam9");
  q.frames = 20;
  q.snr_db = {10, 20, 30};
  CHECK(sweep(q).size() == 3);

  q.snr_db.clear();
  CHECK(sweep(q).empty());
  CHECK(csv({}) == std::string(csv_header) + "\n");

  const auto text = csv(a);
  CHECK(text.rfind(csv_header, 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

TEST_CASE("configuration errors") {
  auto c = default_config(1, "baseline-pi3");
  CHECK_NOTHROW(validate(c));
  auto bad = c;
  bad.scheme = "no-such-scheme";
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.scheme = "hamming-ext-32";
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.scenario = 4;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.h.pop_back();
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.policy = {PolicyKind::fixed, {GaussInt{0}, GaussInt{0}}};
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.policy = {PolicyKind::dominant, {}, CoefficientConstraint::nonzero_mod_pi, 3};
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = default_config(2, "qam9");
  bad.policy.a = {GaussInt{1}, GaussInt{2}};
  CHECK_THROWS_AS(validate(bad), ConfigError);
  CHECK_THROWS_AS(validate(default_config(3, "qam9")), ConfigError);
  bad = c;
  bad.snr_db = {1.0, std::nan("")};
  CHECK_THROWS_AS(sweep(bad), ConfigError);
}

TEST_CASE("scheme rates") {
  const double l3 = std::log2(3.0);
  CHECK(scheme_rate("ng-outage") == doctest::Approx(l3));
  CHECK(scheme_rate("baseline-pi3") == doctest::Approx(2 * l3));
  CHECK(scheme_rate("qam9") == doctest::Approx(2 * l3));
  CHECK(scheme_rate("conv-nu1") == doctest::Approx(0.99 * l3));
  CHECK(scheme_rate("conv-nu2") == doctest::Approx(0.98 * l3));
}

TEST_CASE("crossing SNR") {
  CHECK(!crossing_snr({}, 0.01));
  CHECK(!crossing_snr({record(0, 0.5), record(2, 0.1)}, 0.01));
  CHECK(*crossing_snr({record(0, 0.005), record(2, 0.001)}, 0.01) == 0.0);
  // log-linear: 1e-1 at 0 dB and 1e-3 at 4 dB cross 1e-2 at 2 dB
  CHECK(*crossing_snr({record(0, 0.1), record(4, 0.001)}, 0.01) == doctest::Approx(2.0));
  // a zero count is floored at half an error
  CHECK(*crossing_snr({record(0, 0.1, 100), record(1, 0.0, 100)}, 0.01) ==
        doctest::Approx(std::log10(0.1 / 0.01) / std::log10(0.1 / 0.005)));
}

TEST_CASE("FER does not increase with SNR beyond sampling noise") {
  // 95% Wilson score interval for a binomial proportion
  const auto wilson = [](const SimRecord& r) {
    const double n = static_cast<double>(r.frames), p = r.fer, z = 1.96;
    const double centre = (p + z * z / (2 * n)) / (1 + z * z / n);
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / (1 + z * z / n);
    return std::pair{centre - half, centre + half};
  };
  for (const char* scheme : {"conv-nu1", "baseline-pi3"}) {
    auto c = default_config(1, scheme);
    c.frames = 2000;
    c.snr_db = {0, 1, 2, 3, 4};
    const auto rs = sweep(c);
    REQUIRE(rs.size() == 5);
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
      INFO(scheme << " at " << rs[i].snr_db << " dB");
      CHECK(wilson(rs[i + 1]).first <= wilson(rs[i]).second);
    }
  }
}
