// Copyright 2026 The ctsynth Authors
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

// Command-line front end and its JSON encodings.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ctsynth/ring.hpp"

namespace ctsynth::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kNonHalting = 3 };

/// [a, b], each coefficient a JSON integer when it fits in 64 bits and a
/// decimal string otherwise.
nlohmann::json to_json(const ZRoot2& x);
ZRoot2 zroot2_from_json(const nlohmann::json& j);

/// {"x": [[a, b] x 4], "k": k}
nlohmann::json to_json(const ExactUnitary& u);
/// Validates the determinant identity (std::invalid_argument otherwise).
ExactUnitary exact_unitary_from_json(const nlohmann::json& j);

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctsynth::cli
