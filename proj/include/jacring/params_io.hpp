#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacring/arrangement.hpp"
#include "jacring/errors.hpp"
#include "jacring/fp.hpp"
#include "jacring/rational.hpp"

namespace jacring {

// On-disk parameter block:
// {
//   "n": 2, "k": 3, "r": 2,
//   "field": "Q"                  (or {"Fp": 1000003})
//   "a": [["2", "3"], ["5", "7"]]  (row-major, n rows, k-1 entries each;
//                                   entries are integers or "p/q" strings)
// }
struct ParamsFile {
  int n = 0, k = 0, r = 0;
  bool rational_field = true;
  std::uint64_t prime = 0;
  std::vector<std::vector<std::string>> entries;
};

inline ParamsFile parse_params_json(const nlohmann::json& doc) {
  ParamsFile pf;
  try {
    pf.n = doc.at("n").get<int>();
    pf.k = doc.at("k").get<int>();
    pf.r = doc.at("r").get<int>();
    const auto& field = doc.at("field");
    if (field.is_string()) {
      if (field.get<std::string>() != "Q")
        throw StructuralError("unknown field name in parameter file");
      pf.rational_field = true;
    } else if (field.is_object() && field.contains("Fp")) {
      pf.rational_field = false;
      pf.prime = field.at("Fp").get<std::uint64_t>();
    } else {
      throw StructuralError("field must be \"Q\" or {\"Fp\": prime}");
    }
    for (const auto& row : doc.at("a")) {
      std::vector<std::string> out_row;
      for (const auto& cell : row) {
        if (cell.is_string())
          out_row.push_back(cell.get<std::string>());
        else if (cell.is_number_integer())
          out_row.push_back(std::to_string(cell.get<long long>()));
        else
          throw StructuralError("parameter entries must be integers or rational strings");
      }
      pf.entries.push_back(std::move(out_row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed parameter file: ") + e.what());
  }
  return pf;
}

inline ParamsFile load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open parameter file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("parameter file is not valid JSON: ") + e.what());
  }
  return parse_params_json(doc);
}

inline ParamMatrix<Rat> rational_params(const ParamsFile& pf) {
  if (!pf.rational_field) throw PreconditionError("parameter file declares a prime field");
  ParamMatrix<Rat> P;
  P.n = pf.n;
  P.k = pf.k;
  P.r = pf.r;
  for (const auto& row : pf.entries) {
    std::vector<Rat> out;
    for (const auto& cell : row) out.push_back(parse_rational(cell));
    P.a.push_back(std::move(out));
  }
  validate_params(P);
  return P;
}

inline ParamMatrix<Fp> prime_field_params(const ParamsFile& pf, std::uint64_t prime_override = 0) {
  const std::uint64_t p = pf.rational_field ? prime_override : pf.prime;
  if (p == 0)
    throw PreconditionError("prime field requested but no prime available");
  ParamMatrix<Fp> P;
  P.n = pf.n;
  P.k = pf.k;
  P.r = pf.r;
  for (const auto& row : pf.entries) {
    std::vector<Fp> out;
    for (const auto& cell : row) out.push_back(reduce_mod(parse_rational(cell), p));
    P.a.push_back(std::move(out));
  }
  validate_params(P);
  return P;
}

template <class K>
nlohmann::ordered_json params_to_json(const ParamMatrix<K>& P) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int j = 1; j <= P.n; ++j) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int i = 1; i <= P.k - 1; ++i) row.push_back(to_string(P.at(j, i)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jacring
