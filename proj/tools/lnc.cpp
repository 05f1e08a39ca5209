// Command-line front end: simulation sweeps and small JSON utilities.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lnc/analysis.hpp"
#include "lnc/json_io.hpp"
#include "lnc/sim.hpp"

namespace {

using lnc::ConfigError;
using lnc::json_io::json;

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = text.find(':', start);
    const auto token = text.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw ConfigError("bad SNR grid '" + text + "': expected LO:STEP:HI or a single value");
    }
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) throw ConfigError("bad SNR grid '" + text + "': expected LO:STEP:HI");
  const double lo = parts[0], step = parts[1], hi = parts[2];
  if (!(step > 0) || hi < lo) throw ConfigError("SNR grid needs STEP > 0 and HI >= LO");
  std::vector<double> grid;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

template <class T>
json recover_json(const json& in, std::size_t m) {
  const json& list = in.is_array() ? in : in.at("packets");
  std::vector<lnc::ModulePacket<T>> packets;
  for (const auto& p : list) packets.push_back(lnc::json_io::packet_from_json<T>(p));
  if (packets.empty()) throw ConfigError("no packets");
  if (m == 0) m = packets.front().header_len;
  const auto r = lnc::recover<T>(packets, m);
  json rows = json::array();
  for (const auto& p : r.rows) rows.push_back(lnc::json_io::packet_to_json(p));
  json out{{"ok", r.ok}, {"rows", rows}};
  if (!r.ok) out["reason"] = r.reason;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice network coding toolkit"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo FER sweep, CSV output");
  int scenario = 1;
  std::string scheme, grid_spec, out_path;
  std::uint64_t frames = 1000, seed = 1;
  bool noiseless = false;
  sim->add_option("--scenario", scenario, "1, 2 or 3")->required();
  sim->add_option("--scheme", scheme, "baseline-pi3, qam9, conv-nu1, conv-nu2 or ng-outage")->required();
  sim->add_option("--snr-db", grid_spec, "LO:STEP:HI")->required();
  sim->add_option("--frames", frames, "frames per SNR point");
  sim->add_option("--seed", seed, "base seed");
  sim->add_option("--out", out_path, "CSV file (default stdout)");
  sim->add_flag("--noiseless", noiseless, "drop the noise term");

  auto* gain = app.add_subcommand("gain", "GainReport of a catalog scheme as JSON");
  std::string gain_scheme;
  gain->add_option("--scheme", gain_scheme)->required();

  auto* rate = app.add_subcommand("rate", "computation rate and MMSE alpha");
  rate->set_help_flag("--help", "Print this help message and exit");  // frees --h
  std::string h_text, a_text;
  double snr_db = 0;
  rate->add_option("--h", h_text, "JSON list of [re, im]")->required();
  rate->add_option("--a", a_text, "JSON list of [re, im] integers")->required();
  rate->add_option("--snr-db", snr_db)->required();

  auto* snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix");
  std::string snf_path;
  snf->add_option("--input", snf_path)->required();

  auto* sel = app.add_subcommand("select-coeffs", "dominant coefficient vectors");
  sel->set_help_flag("--help", "Print this help message and exit");
  std::string sel_h, pi_text = "3";
  double sel_snr_db = 0;
  std::size_t sel_m = 1;
  sel->add_option("--h", sel_h, "JSON list of [re, im]")->required();
  sel->add_option("--snr-db", sel_snr_db)->required();
  sel->add_option("--m", sel_m, "number of vectors");
  sel->add_option("--pi", pi_text, "prime modulus as JSON, e.g. 3 or [1,1]");

  auto* rec = app.add_subcommand("recover", "generalized Gauss-Jordan on packet headers");
  std::string packets_path;
  std::size_t rec_m = 0;
  rec->add_option("--packets", packets_path, "JSON file with {ring, packets} or a packet list")->required();
  rec->add_option("--m", rec_m, "number of sources (default header_len)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sim) {
      auto config = lnc::default_config(scenario, scheme);
      config.snr_db = parse_grid(grid_spec);
      config.frames = frames;
      config.seed = seed;
      config.noiseless = noiseless;
      const auto records = lnc::sweep(config);
      if (out_path.empty()) {
        lnc::write_csv(std::cout, records);
      } else {
        std::ofstream os(out_path);
        if (!os) throw ConfigError("cannot write " + out_path);
        lnc::write_csv(os, records);
      }
    } else if (*gain) {
      std::cout << lnc::json_io::gain_to_json(lnc::catalog_gain(gain_scheme)).dump(2) << '\n';
    } else if (*rate) {
      const auto h = lnc::json_io::complex_vector_from_json(lnc::json_io::parse(h_text));
      const auto a = lnc::json_io::gauss_vector_from_json(lnc::json_io::parse(a_text));
      if (h.size() != a.size()) throw ConfigError("h and a must have equal length");
      const double s = std::pow(10.0, snr_db / 10.0);
      const auto ctx = lnc::GramContext::from_channel(h, s);
      std::cout << json{{"rate", lnc::computation_rate(ctx, a)},
                        {"alpha", lnc::json_io::complex_to_json(lnc::mmse_alpha(h, a, s))},
                        {"a_m_a", lnc::a_m_a(h, a, s)}}
                       .dump(2)
                << '\n';
    } else if (*snf) {
      const auto in = lnc::json_io::parse_file(snf_path);
      const json out = lnc::json_io::ring_of(in) == "Z"
                           ? lnc::json_io::snf_to_json(lnc::smith_normal_form(lnc::json_io::matrix_from_json<lnc::Integer>(in)))
                           : lnc::json_io::snf_to_json(lnc::smith_normal_form(lnc::json_io::matrix_from_json<lnc::GaussInt>(in)));
      std::cout << out.dump(2) << '\n';
    } else if (*sel) {
      const auto h = lnc::json_io::complex_vector_from_json(lnc::json_io::parse(sel_h));
      const auto pi = lnc::json_io::gauss_from_json(lnc::json_io::parse(pi_text));
      const auto ctx = lnc::GramContext::from_channel(h, std::pow(10.0, sel_snr_db / 10.0));
      json out = json::array();
      for (const auto& v : lnc::dominant_solution(ctx, sel_m, pi)) {
        json a = json::array();
        for (const auto& x : v.a) a.push_back(lnc::json_io::to_json(x));
        out.push_back({{"a", a}, {"norm_sq", v.norm_sq}, {"rate", lnc::computation_rate(ctx, v.a)}});
      }
      std::cout << out.dump(2) << '\n';
    } else if (*rec) {
      const auto in = lnc::json_io::parse_file(packets_path);
      const json out = lnc::json_io::ring_of(in) == "Z" ? recover_json<lnc::Integer>(in, rec_m)
                                                        : recover_json<lnc::GaussInt>(in, rec_m);
      std::cout << out.dump(2) << '\n';
    }
  } catch (const std::invalid_argument& e) {  // ConfigError and argument validation
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {  // unknown catalog names
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
