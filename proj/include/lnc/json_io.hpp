#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lnc/constructions.hpp"
#include "lnc/errors.hpp"
#include "lnc/matrix.hpp"
#include "lnc/netcode.hpp"
#include "lnc/smith.hpp"

namespace lnc::json_io {

using nlohmann::json;

// Ring elements: Z as a number or [re], Z[i] as [re, im] (a bare number means im = 0).
// Malformed input throws ConfigError.

Integer integer_from_json(const json& j);
GaussInt gauss_from_json(const json& j);
json to_json(Integer x);
json to_json(GaussInt x);

template <class T>
T element_from_json(const json& j);
template <>
inline Integer element_from_json<Integer>(const json& j) { return integer_from_json(j); }
template <>
inline GaussInt element_from_json<GaussInt>(const json& j) { return gauss_from_json(j); }

/// "Z" or "Zi"; anything else throws ConfigError.
std::string ring_of(const json& j, const std::string& fallback = "Z");

/// {"ring", "rows", "cols", "entries"} with entries flat in row-major order.
template <class T>
Matrix<T> matrix_from_json(const json& j);
template <class T>
json matrix_to_json(const Matrix<T>& m);

template <class T>
json snf_to_json(const SnfResult<T>& r);

std::vector<cplx> complex_vector_from_json(const json& j);
std::vector<GaussInt> gauss_vector_from_json(const json& j);
json complex_to_json(cplx x);

/// {"moduli", "header_len", "components"}.
template <class T>
ModulePacket<T> packet_from_json(const json& j);
template <class T>
json packet_to_json(const ModulePacket<T>& p);

json gain_to_json(const GainReport& g);

/// Parses text, mapping syntax errors to ConfigError.
json parse(const std::string& text);
json parse_file(const std::string& path);

}  // namespace lnc::json_io
