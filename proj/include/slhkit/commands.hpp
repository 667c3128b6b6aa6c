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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slhkit/expression.hpp"
#include "slhkit/serialize.hpp"

namespace slh::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     ///< threshold or validation failure
  kParseError = 2,  ///< malformed input, unreadable file, bad flags
};

/// A parsed network file.
struct Network {
  std::map<std::string, io::SystemModel> systems;
  std::optional<expr::Expr> expression;
  io::Json experiment;
  io::Json thresholds;
  io::Json response;
};

/// Validates names referenced by the expression; throws ParseError.
Network load_network(const io::Json& doc);

/// Runs one command line (program name excluded). Data goes to `out` unless
/// --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g, with "nan" for NaN.
std::string format_double(double x);

}  // namespace slh::cli
