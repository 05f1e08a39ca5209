#include "lnc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lnc::json_io {

namespace {

i64 whole(const json& j) {
  if (j.is_number_integer()) return j.get<i64>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v == static_cast<double>(static_cast<i64>(v))) return static_cast<i64>(v);
  }
  throw ConfigError("expected an integer, got " + j.dump());
}

double real(const json& j) {
  if (!j.is_number()) throw ConfigError("expected a number, got " + j.dump());
  return j.get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count(const json& j, const char* key) {
  const i64 v = whole(field(j, key));
  if (v < 0) throw ConfigError(std::string("field '") + key + "' must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Integer integer_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() == 1) return whole(j[0]);
    if (j.size() == 2 && whole(j[1]) == 0) return whole(j[0]);
    throw ConfigError("expected an integer, got " + j.dump());
  }
  return whole(j);
}

GaussInt gauss_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() == 1) return {whole(j[0]), 0};
    if (j.size() == 2) return {whole(j[0]), whole(j[1])};
    throw ConfigError("expected [re, im], got " + j.dump());
  }
  return {whole(j), 0};
}

json to_json(Integer x) { return x.v; }
json to_json(GaussInt x) { return json::array({x.re, x.im}); }

std::string ring_of(const json& j, const std::string& fallback) {
  if (!j.is_object() || !j.contains("ring")) return fallback;
  const auto& r = j.at("ring");
  if (!r.is_string() || (r != "Z" && r != "Zi")) throw ConfigError("ring must be \"Z\" or \"Zi\"");
  return r.get<std::string>();
}

template <class T>
Matrix<T> matrix_from_json(const json& j) {
  const std::size_t rows = count(j, "rows"), cols = count(j, "cols");
  const auto& e = field(j, "entries");
  if (!e.is_array()) throw ConfigError("entries must be a list");
  const std::vector<json> flat(e.begin(), e.end());
  if (flat.size() != rows * cols)
    throw ConfigError("entries hold " + std::to_string(flat.size()) + " values, expected " + std::to_string(rows * cols));
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json<T>(flat[i * cols + k]);
  return m;
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(to_json(m(i, k)));
  return {{"ring", std::is_same_v<T, Integer> ? "Z" : "Zi"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <class T>
json snf_to_json(const SnfResult<T>& r) {
  json d = json::array();
  for (const auto& x : r.d) d.push_back(to_json(x));
  return {{"d", d}, {"p", matrix_to_json(r.p)}, {"q", matrix_to_json(r.q)}};
}

std::vector<cplx> complex_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a nonempty list of complex numbers");
  std::vector<cplx> out;
  for (const auto& x : j) {
    if (x.is_array() && x.size() == 2)
      out.emplace_back(real(x[0]), real(x[1]));
    else if (x.is_number())
      out.emplace_back(real(x), 0.0);
    else
      throw ConfigError("expected a number or [re, im], got " + x.dump());
  }
  return out;
}

std::vector<GaussInt> gauss_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a nonempty list of Gaussian integers");
  std::vector<GaussInt> out;
  for (const auto& x : j) out.push_back(gauss_from_json(x));
  return out;
}

json complex_to_json(cplx x) { return json::array({x.real(), x.imag()}); }

template <class T>
ModulePacket<T> packet_from_json(const json& j) {
  const auto& mod = field(j, "moduli");
  const auto& comp = field(j, "components");
  if (!mod.is_array() || !comp.is_array() || mod.size() != comp.size())
    throw ConfigError("moduli and components must be lists of equal length");
  ModulePacket<T> p;
  p.header_len = count(j, "header_len");
  if (p.header_len > comp.size()) throw ConfigError("header_len exceeds the packet length");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const T m = element_from_json<T>(mod[i]);
    if (is_zero(m)) throw ConfigError("moduli must be nonzero");
    p.components.emplace_back(element_from_json<T>(comp[i]), m);
  }
  return p;
}

template <class T>
json packet_to_json(const ModulePacket<T>& p) {
  json mod = json::array(), comp = json::array();
  for (const auto& c : p.components) {
    mod.push_back(to_json(c.modulus()));
    comp.push_back(to_json(c.value()));
  }
  return {{"moduli", mod}, {"header_len", p.header_len}, {"components", comp}};
}

json gain_to_json(const GainReport& g) {
  const auto range = [](const Range& r) { return json{{"lower", r.lower}, {"upper", r.upper}}; };
  return {{"method", g.method},       {"d_sq", range(g.d_sq)},   {"kissing", range(g.kissing)},
          {"gamma_c", g.gamma_c},     {"gamma_c_db", g.gamma_c_db}, {"r_mes", g.r_mes},
          {"w_min", g.w_min},         {"a_wmin", g.a_wmin}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

template Matrix<Integer> matrix_from_json(const json&);
template Matrix<GaussInt> matrix_from_json(const json&);
template json matrix_to_json(const Matrix<Integer>&);
template json matrix_to_json(const Matrix<GaussInt>&);
template json snf_to_json(const SnfResult<Integer>&);
template json snf_to_json(const SnfResult<GaussInt>&);
template ModulePacket<Integer> packet_from_json(const json&);
template ModulePacket<GaussInt> packet_from_json(const json&);
template json packet_to_json(const ModulePacket<Integer>&);
template json packet_to_json(const ModulePacket<GaussInt>&);

}  // namespace lnc::json_io
