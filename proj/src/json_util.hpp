#pragma once

#include <comod/mat.hpp>
#include <json.hpp>

namespace comod {

inline nlohmann::json emit_scalar(const Field& F, const Scalar& s) {
  if (F.is_gf())
    return nlohmann::json(F.norm(s).numerator().convert_to<long long>());
  return nlohmann::json(F.str(s));
}

inline nlohmann::json emit_matrix(const Field& F, const Mat& A) {
  nlohmann::json rows = nlohmann::json::array();
  if (A.rows == 0 || A.cols == 0) return rows;
  for (int i = 0; i < A.rows; i++) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < A.cols; j++) row.push_back(emit_scalar(F, A.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace comod
