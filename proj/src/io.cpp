#include "negacap/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace negacap::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad field '") + key + "': " + e.what());
  }
}

BipartiteDims dims_from(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::ParseError, "dims must be [d_A, d_B]");
  try {
    const auto a = j[0].get<std::size_t>(), b = j[1].get<std::size_t>();
    if (a == 0 || b == 0) fail(ErrorKind::ParseError, "dims must be positive");
    return {a, b};
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("dims: ") + e.what());
  }
}

json dims_to(BipartiteDims d) { return json::array({d.d_A, d.d_B}); }

}  // namespace

json to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (const auto& z : m.entries()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = field<std::size_t>(j, "rows");
  const auto cols = field<std::size_t>(j, "cols");
  const auto re = field<std::vector<double>>(j, "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = field<std::vector<double>>(j, "im");
  if (rows == 0 || cols == 0) fail(ErrorKind::ParseError, "matrix dimensions must be positive");
  if (re.size() != rows * cols || im.size() != rows * cols)
    fail(ErrorKind::ParseError, "matrix entry arrays do not match rows*cols");
  std::vector<cplx> e(re.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = {re[k], im[k]};
  return ComplexMatrix(rows, cols, std::move(e));
}

json to_json(const Channel& ch) {
  return {{"in_dims", dims_to(ch.in_dims)}, {"out_dims", dims_to(ch.out_dims)}, {"choi", to_json(ch.choi)}};
}

Channel channel_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "channel must be a JSON object");
  if (!j.contains("in_dims")) fail(ErrorKind::ParseError, "missing field 'in_dims'");
  const BipartiteDims in = dims_from(j["in_dims"]);
  const BipartiteDims out = j.contains("out_dims") ? dims_from(j["out_dims"]) : in;
  if (j.contains("choi")) {
    ComplexMatrix c = matrix_from_json(j["choi"]);
    if (!c.square() || c.rows() != in.total() * out.total())
      fail(ErrorKind::ParseError, "Choi matrix size does not match dims");
    return make_channel(std::move(c), in, out);
  }
  if (j.contains("kraus")) {
    if (!j["kraus"].is_array()) fail(ErrorKind::ParseError, "'kraus' must be an array");
    KrausForm kf;
    for (const auto& t : j["kraus"]) {
      KrausTerm term;
      term.c = t.contains("c") ? field<double>(t, "c") : 1.0;
      term.V = matrix_from_json(t.contains("V") ? t["V"] : json());
      if (term.V.rows() != out.total() || term.V.cols() != in.total())
        fail(ErrorKind::ParseError, "Kraus operator size does not match dims");
      kf.push_back(std::move(term));
    }
    return choi_from_kraus(kf, in, out);
  }
  fail(ErrorKind::ParseError, "channel needs 'choi' or 'kraus'");
}

json to_json(const CovarianceMatrix& c) {
  json rows = json::array();
  for (std::size_t i = 0; i < c.sigma.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < c.sigma.cols(); ++j) r.push_back(c(i, j));
    rows.push_back(r);
  }
  return {{"n_modes", c.n_modes}, {"hbar", c.hbar}, {"sigma", rows}};
}

CovarianceMatrix covariance_from_json(const json& j) {
  const auto n = field<std::size_t>(j, "n_modes");
  const double hbar = j.contains("hbar") ? field<double>(j, "hbar") : 1.0;
  const auto rows = field<std::vector<std::vector<double>>>(j, "sigma");
  if (rows.size() != 2 * n) fail(ErrorKind::ParseError, "sigma must be 2n x 2n");
  for (const auto& r : rows)
    if (r.size() != 2 * n) fail(ErrorKind::ParseError, "sigma must be 2n x 2n");
  return make_covariance(rows, hbar);
}

json to_json(const SymmetricParams& p) {
  return {{"N", p.N}, {"nu_D", p.nu_D}, {"gamma", p.gamma}, {"r", p.r}, {"hbar", p.hbar}};
}

SymmetricParams params_from_json(const json& j) {
  SymmetricParams p;
  p.N = field<int>(j, "N");
  p.nu_D = field<double>(j, "nu_D");
  p.gamma = field<double>(j, "gamma");
  p.r = field<double>(j, "r");
  p.hbar = j.contains("hbar") ? field<double>(j, "hbar") : 1.0;
  return p;
}

ComplexMatrix state_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "state must be a JSON object");
  if (j.contains("rho")) {
    ComplexMatrix rho = matrix_from_json(j["rho"]);
    if (!rho.square()) fail(ErrorKind::ParseError, "rho must be square");
    return rho;
  }
  if (j.contains("psi")) {
    const ComplexMatrix psi = matrix_from_json(j["psi"]);
    if (psi.cols() != 1) fail(ErrorKind::ParseError, "psi must be a column");
    return outer(psi, psi);
  }
  fail(ErrorKind::ParseError, "state needs 'rho' or 'psi'");
}

json to_json(const ECBounds& b) {
  return {{"lower_N", b.lower_N},         {"upper_N_coefficient", b.upper_N_coefficient},
          {"upper_N_max", b.upper_N_max}, {"lower_L", b.lower_L},
          {"upper_L", b.upper_L},         {"log_base", b.log_base}};
}

json to_json(const SaturationReport& s) {
  return {{"prop_identity", s.prop_identity},
          {"largest_eigenspace", s.largest_eigenspace},
          {"orthogonality", s.orthogonality},
          {"achieves_upper", s.achieves_upper},
          {"max_overlap", s.max_overlap}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace negacap::io
