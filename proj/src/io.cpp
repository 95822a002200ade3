#include "homleib/io.hpp"

#include <fstream>

namespace homleib {

namespace {

Scalar json_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(Int(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), where, e.what());  // re-anchor at the field
    }
  }
  throw ParseError(ParseError::Kind::NonRational, where,
                   "expected a rational string \"p/q\" or an integer, got " + j.dump());
}

int json_index(const json& j, int dim, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(ParseError::Kind::Malformed, where, "expected a basis index, got " + j.dump());
  const long long k = j.get<long long>();
  if (k < 0 || k >= dim)
    throw ParseError(ParseError::Kind::IndexOutOfRange, where,
                     "basis index " + std::to_string(k) + " outside [0, " + std::to_string(dim) + ")");
  return static_cast<int>(k);
}

}  // namespace

Vec parse_vec(const json& j, int expect_len, const std::string& where) {
  if (!j.is_array())
    throw ParseError(ParseError::Kind::Malformed, where, "expected an array of rationals");
  Vec v;
  for (const auto& e : j) v.push_back(json_rational(e, where));
  if (expect_len >= 0 && static_cast<int>(v.size()) != expect_len)
    throw ParseError(ParseError::Kind::Malformed, where,
                     "expected " + std::to_string(expect_len) + " entries, got " +
                         std::to_string(v.size()));
  return v;
}

ParsedAlgebra parse_algebra(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(ParseError::Kind::Malformed, where, "expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(ParseError::Kind::Malformed, where, "missing integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim <= 0) throw ParseError(ParseError::Kind::Malformed, where, "\"dim\" must be positive");

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != dim)
      throw ParseError(ParseError::Kind::Malformed, where, "\"basis\" must list dim labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string())
        throw ParseError(ParseError::Kind::Malformed, where, "basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  HomAlgebra a = make_algebra(j.value("name", std::string("algebra")), dim, labels);

  if (j.contains("bracket")) {
    if (!j["bracket"].is_object())
      throw ParseError(ParseError::Kind::Malformed, where, "\"bracket\" must be an object");
    for (const auto& [key, entries] : j["bracket"].items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos)
        throw ParseError(ParseError::Kind::Malformed, where,
                         "bracket key '" + key + "' is not of the form \"i,j\"");
      int bi, bj;
      try {
        bi = std::stoi(key.substr(0, comma));
        bj = std::stoi(key.substr(comma + 1));
      } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::Malformed, where,
                         "bracket key '" + key + "' is not of the form \"i,j\"");
      }
      if (bi < 0 || bi >= dim || bj < 0 || bj >= dim)
        throw ParseError(ParseError::Kind::IndexOutOfRange, where,
                         "bracket key '" + key + "' outside [0, " + std::to_string(dim) + ")^2");
      if (!entries.is_array())
        throw ParseError(ParseError::Kind::Malformed, where,
                         "bracket['" + key + "'] must be an array of [index, coeff] pairs");
      Vec value = zero_vec(dim);
      for (const auto& pair : entries) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError(ParseError::Kind::Malformed, where,
                           "bracket['" + key + "'] entries must be [index, coeff] pairs");
        const int k = json_index(pair[0], dim, where + " bracket['" + key + "']");
        value[k] += json_rational(pair[1], where + " bracket['" + key + "']");
      }
      a.table[bi][bj] = std::move(value);
    }
  }

  if (j.contains("phi")) {
    const auto& p = j["phi"];
    if (!p.is_array() || static_cast<int>(p.size()) != dim)
      throw ParseError(ParseError::Kind::Malformed, where, "\"phi\" must be a dim x dim matrix");
    std::vector<Vec> rows;
    for (const auto& row : p) rows.push_back(parse_vec(row, dim, where + " phi"));
    a.phi = Matrix::from_rows(rows, dim);
  }

  ParsedAlgebra out;
  if (j.contains("H")) {
    const auto& h = j["H"];
    if (!h.is_array()) throw ParseError(ParseError::Kind::Malformed, where, "\"H\" must be an array");
    for (const auto& e : h) {
      if (e.is_number_integer())
        out.h_basis.push_back(unit_vec(dim, json_index(e, dim, where + " H")));
      else
        out.h_basis.push_back(parse_vec(e, dim, where + " H"));
    }
    out.has_h = true;
  }
  out.algebra = std::move(a);
  return out;
}

ParsedAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::Malformed, path, "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::Malformed, path, e.what());
  }
  return parse_algebra(j, path);
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Scalar& x : v) out.push_back(rational_str(x));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

json subspace_to_json(const Subspace& s) {
  json out = json::array();
  for (const Vec& v : s.basis_vectors()) out.push_back(vec_to_json(v));
  return out;
}

json algebra_to_json(const HomAlgebra& a, const std::vector<Vec>& h_basis) {
  json j;
  j["name"] = a.name;
  j["dim"] = a.dim;
  j["basis"] = a.labels;
  json bracket = json::object();
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const Vec& v = a.table[i][k];
      if (vec_is_zero(v)) continue;
      json entries = json::array();
      for (int t = 0; t < a.dim; ++t)
        if (v[t] != 0) entries.push_back(json::array({t, rational_str(v[t])}));
      bracket[std::to_string(i) + "," + std::to_string(k)] = std::move(entries);
    }
  j["bracket"] = std::move(bracket);
  if (!a.phi.is_identity()) j["phi"] = matrix_to_json(a.phi);
  if (!h_basis.empty()) {
    json h = json::array();
    for (const Vec& v : h_basis) h.push_back(vec_to_json(v));
    j["H"] = std::move(h);
  }
  return j;
}

Matrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::Malformed, path, "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::Malformed, path, e.what());
  }
  const json& m = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  if (!m.is_array() || m.empty())
    throw ParseError(ParseError::Kind::Malformed, path, "expected a nonempty 2D array");
  std::vector<Vec> rows;
  const int cols = static_cast<int>(m[0].is_array() ? m[0].size() : 0);
  for (const auto& row : m) rows.push_back(parse_vec(row, cols, path));
  return Matrix::from_rows(rows, cols);
}

}  // namespace homleib
