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

#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "slhkit/classical_lin.hpp"
#include "slhkit/fock_sim.hpp"
#include "slhkit/qsde_algebra.hpp"

namespace slh::io {

using Json = nlohmann::json;

/// Any system that can appear in a network file.
using SystemModel = std::variant<classical::Model, qsde::SLHTriple, qsde::CoeffMatrix, qsde::LieAlgElem>;

/// Complex numbers are [re, im]; a bare number is accepted on input.
Json to_json(Scalar z);
Scalar scalar_from_json(const Json& j);

/// Row-major nested arrays of complex numbers.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Flat array of complex numbers.
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"type": "classical" | "slh" | "coeff" | "lie", ...blocks}.
Json model_to_json(const SystemModel& m);
SystemModel model_from_json(const Json& j);

const char* model_type(const SystemModel& m);

/// {"breaks": [...], "values": [[c, ...], ...]} with one K-vector per interval.
Json step_function_to_json(const fock::StepFunction& f);
fock::StepFunction step_function_from_json(const Json& j);

/// Canonical text form: two-space indentation, trailing newline.
std::string dump(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace slh::io
