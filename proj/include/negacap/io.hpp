#pragma once

#include <string>

#include "json.hpp"
#include "negacap/channel.hpp"
#include "negacap/entcap.hpp"
#include "negacap/gaussian.hpp"

namespace negacap::io {

using json = nlohmann::json;

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const Channel& ch);
// Accepts either a "choi" matrix or a "kraus" list; out_dims default to in_dims.
Channel channel_from_json(const json& j);

json to_json(const CovarianceMatrix& c);
CovarianceMatrix covariance_from_json(const json& j);

json to_json(const SymmetricParams& p);
SymmetricParams params_from_json(const json& j);

// {"rho": <matrix>} or {"psi": <column matrix>}; returns a density matrix.
ComplexMatrix state_from_json(const json& j);

json to_json(const ECBounds& b);
json to_json(const SaturationReport& s);

json parse_json(const std::string& text);
json read_json_file(const std::string& path);

// 17 significant digits, '.' decimal separator.
std::string format_double(double x);

}  // namespace negacap::io
