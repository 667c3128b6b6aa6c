// Copyright 2026 The slhkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slhkit/serialize.hpp"

#include <fstream>
#include <sstream>

namespace slh::io {

Json to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("expected a complex number [re, im], got " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  const auto rows = static_cast<Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
  const auto cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError("matrix rows have different lengths");
    for (Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a vector (array of complex numbers)");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json(j[i]);
  return v;
}

namespace {

Matrix field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("model is missing field '") + name + "'");
  return matrix_from_json(j.at(name));
}

/// Empty JSON arrays lose their shape; restore the one implied by the other blocks.
void fit_empty(Matrix& m, Index rows, Index cols) {
  if (m.size() == 0 && rows * cols == 0) m.resize(rows, cols);
}

}  // namespace

const char* model_type(const SystemModel& m) {
  switch (m.index()) {
    case 0: return "classical";
    case 1: return "slh";
    case 2: return "coeff";
    default: return "lie";
  }
}

Json model_to_json(const SystemModel& m) {
  Json j;
  j["type"] = model_type(m);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, classical::Model>) {
          j["K"] = to_json(x.K);
          j["M"] = to_json(x.M);
          j["L"] = to_json(x.L);
          j["N"] = to_json(x.N);
        } else if constexpr (std::is_same_v<T, qsde::SLHTriple>) {
          j["S"] = to_json(x.S);
          j["L"] = to_json(x.L);
          j["H"] = to_json(x.H);
        } else if constexpr (std::is_same_v<T, qsde::CoeffMatrix>) {
          j["K"] = to_json(Matrix(x.K()));
          j["M"] = to_json(Matrix(x.M()));
          j["L"] = to_json(Matrix(x.L()));
          j["N"] = to_json(x.N());
        } else {
          j["kappa"] = to_json(x.kappa);
          j["mu"] = to_json(x.mu);
          j["lambda"] = to_json(x.lambda);
          j["nu"] = to_json(x.nu);
        }
      },
      m);
  return j;
}

SystemModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw ParseError("model must be an object with a string 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "classical") {
    classical::Model v{field(j, "K"), field(j, "M"), field(j, "L"), field(j, "N")};
    const Index nx = std::max(v.K.rows(), std::max(v.M.rows(), v.L.cols()));
    const Index nu = std::max(v.M.cols(), v.N.cols());
    const Index ny = std::max(v.L.rows(), v.N.rows());
    fit_empty(v.K, nx, nx);
    fit_empty(v.M, nx, nu);
    fit_empty(v.L, ny, nx);
    fit_empty(v.N, ny, nu);
    v.validate();
    return v;
  }
  if (type == "slh") {
    qsde::SLHTriple s{field(j, "S"), field(j, "L"), field(j, "H")};
    s.validate();
    return s;
  }
  if (type == "coeff")
    return qsde::CoeffMatrix::from_blocks(field(j, "K"), field(j, "M"), field(j, "L"), field(j, "N"));
  if (type == "lie") {
    qsde::LieAlgElem h{field(j, "kappa"), field(j, "mu"), field(j, "lambda"), field(j, "nu")};
    (void)h.dims();
    return h;
  }
  throw ParseError("unknown model type '" + type + "'");
}

Json step_function_to_json(const fock::StepFunction& f) {
  Json values = Json::array();
  for (Index c = 0; c < f.values.cols(); ++c) values.push_back(vector_to_json(f.values.col(c)));
  return Json{{"breaks", f.breaks}, {"values", values}};
}

fock::StepFunction step_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breaks") || !j.contains("values"))
    throw ParseError("test function needs 'breaks' and 'values'");
  fock::StepFunction f;
  f.breaks = j["breaks"].get<std::vector<double>>();
  const Json& vals = j["values"];
  if (!vals.is_array() || vals.empty()) throw ParseError("test function 'values' must be a non-empty array");
  const Index n_k = static_cast<Index>(vals[0].size());
  f.values.resize(n_k, static_cast<Index>(vals.size()));
  for (std::size_t c = 0; c < vals.size(); ++c) {
    const Vector col = vector_from_json(vals[c]);
    if (col.size() != n_k) throw ParseError("test function values have different lengths");
    f.values.col(static_cast<Index>(c)) = col;
  }
  f.validate();
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace slh::io
