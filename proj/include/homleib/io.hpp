#pragma once

#include <nlohmann/json.hpp>

#include "homleib/algebra.hpp"

namespace homleib {

using json = nlohmann::ordered_json;

// An algebra file plus the (optional) choice of H basis it carries.
struct ParsedAlgebra {
  HomAlgebra algebra;
  std::vector<Vec> h_basis;  // empty when the file has no "H"
  bool has_h = false;
};

// File format (all rationals are strings "p" or "p/q"; integers accepted):
//   {
//     "name": "sl2",
//     "dim": 3,
//     "basis": ["h","e","f"],                  // optional, defaults e0..e{n-1}
//     "bracket": { "0,1": [[1,"2"]], ... },    // sparse; "i,j" -> [[k, coeff], ...]
//     "phi": [["1","0","0"], ...],             // optional, defaults identity
//     "H": [0]                                 // indices or explicit vectors
//   }
// Throws ParseError (Malformed / IndexOutOfRange / NonRational).
ParsedAlgebra parse_algebra(const json& j, const std::string& where);
ParsedAlgebra parse_algebra_file(const std::string& path);

json algebra_to_json(const HomAlgebra& a, const std::vector<Vec>& h_basis);

// Rational matrix file: bare 2D array of rational strings, or an object with
// a "matrix" member holding one.
Matrix parse_matrix_file(const std::string& path);

// Shared JSON renderings used by reports.
json vec_to_json(const Vec& v);
json matrix_to_json(const Matrix& m);
json subspace_to_json(const Subspace& s);
Vec parse_vec(const json& j, int expect_len, const std::string& where);

}  // namespace homleib
