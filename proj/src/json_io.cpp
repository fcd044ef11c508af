#include "mopuc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace mopuc::io {

namespace {

std::size_t as_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw InvariantError(std::string("field '") + key + "' must be a non-negative integer");
  return j[key].get<std::size_t>();
}

cplx pair_value(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw InvariantError("complex entries are written as [re, im]");
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

json to_json(const Matrix& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw InvariantError("matrix must be an object with rows, cols, data");
  const std::size_t rows = as_size(j, "rows"), cols = as_size(j, "cols");
  if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows * cols)
    throw InvariantError("matrix data must hold rows*cols entries");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = pair_value(j["data"][i]);
  return m;
}

Vector vector_from_json(const json& j) {
  if (j.is_object()) {
    const Matrix m = matrix_from_json(j);
    if (m.cols() != 1) throw InvariantError("state must be a single column");
    return m.col(0);
  }
  if (!j.is_array()) throw InvariantError("state must be a matrix or a list of [re, im]");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = pair_value(j[i]);
  return v;
}

json to_json(const SchurParameterSequence& p) {
  json alphas = json::array();
  for (const auto& a : p.alphas()) alphas.push_back(to_json(a));
  return {{"d", p.dim()}, {"alphas", alphas}, {"terminal", p.terminated() ? to_json(*p.terminal()) : json(nullptr)}};
}

SchurParameterSequence params_from_json(const json& j) {
  if (!j.is_object()) throw InvariantError("parameter file must be an object");
  const std::size_t d = as_size(j, "d");
  if (!j.contains("alphas") || !j["alphas"].is_array()) throw InvariantError("parameter file needs an alphas list");
  std::vector<Matrix> alphas;
  for (const auto& a : j["alphas"]) alphas.push_back(matrix_from_json(a));
  std::optional<Matrix> term;
  if (j.contains("terminal") && !j["terminal"].is_null()) term = matrix_from_json(j["terminal"]);
  return SchurParameterSequence(d, std::move(alphas), std::move(term));
}

json to_json(const MatrixSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"d", s.dim()}, {"order", s.order()}, {"coeffs", coeffs}};
}

MatrixSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InvariantError("series must be an object with a coeffs list");
  std::vector<Matrix> c;
  for (const auto& m : j["coeffs"]) c.push_back(matrix_from_json(m));
  return MatrixSeries(std::move(c));
}

json to_json(const VerificationReport& r) {
  json j{{"theorem", r.theorem},
         {"family", r.family},
         {"d", r.d},
         {"j", r.j ? json(*r.j) : json(nullptr)},
         {"k", r.k ? json(*r.k) : json(nullptr)},
         {"order", r.order},
         {"seed", r.seed ? json(*r.seed) : json(nullptr)},
         {"residual", r.residual},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"exact", r.exact},
         {"formula_route", r.formula_route},
         {"operator_route", r.operator_route},
         {"notes", r.notes}};
  if (r.oracle_residual) j["oracle_residual"] = *r.oracle_residual;
  return j;
}

json to_json(const IndexSubspace& v) { return v.indices(); }

json to_json(const SubspacePartition& p) {
  return {{"L", to_json(p.left)}, {"C", to_json(p.center)}, {"R", to_json(p.right)}};
}

json to_json(const OverlapFactorization& f) {
  return {{"schema_version", schema_version},
          {"partition", to_json(f.partition)},
          {"u_lc", to_json(f.u_lc)},
          {"u_cr", to_json(f.u_cr)}};
}

json to_json(const OverlapVerdict& v) {
  return {{"schema_version", schema_version},
          {"overlapping", v.overlapping},
          {"leak_norm", v.leak_norm},
          {"leak_tolerance", v.leak_tolerance},
          {"coupling_rank", v.coupling_rank},
          {"center_dim", v.center_dim},
          {"reason", v.reason}};
}

IndexSubspace parse_index_list(const std::string& s, std::size_t ambient) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::logic_error&) {
      throw InvariantError("bad index '" + tok + "'");
    }
    if (used != tok.size() || tok[0] == '-') throw InvariantError("bad index '" + tok + "'");
    out.push_back(v);
  }
  return IndexSubspace(std::move(out), ambient);
}

SubspacePartition parse_partition(const std::vector<std::string>& tokens, std::size_t ambient) {
  std::optional<IndexSubspace> l, c, r;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InvariantError("partition token '" + t + "' must look like L=0,1");
    const std::string key = t.substr(0, eq);
    auto sub = parse_index_list(t.substr(eq + 1), ambient);
    if (key == "L") l = std::move(sub);
    else if (key == "C") c = std::move(sub);
    else if (key == "R") r = std::move(sub);
    else throw InvariantError("partition part must be L, C or R");
  }
  if (!c) throw InvariantError("partition needs a C part");
  // A missing side takes the remaining indices; if both are missing, L is empty.
  if (!l && !r) l = IndexSubspace({}, ambient);
  if (!r) r = l->united(*c).complement();
  if (!l) l = r->united(*c).complement();
  return SubspacePartition(*l, *c, *r);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvariantError("cannot parse '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mopuc::io
