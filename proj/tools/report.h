// Copyright 2026 The cwpot Authors
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

// Report rendering shared by every subcommand. A report is built once as an
// ordered JSON tree and rendered either as JSON or as text, so both outputs
// carry the same numbers in the same order.

#ifndef CWPOT_TOOLS_REPORT_H_
#define CWPOT_TOOLS_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwpot/game.h"
#include "json.hpp"

namespace cwpot::cli {

using Json = nlohmann::ordered_json;

// Doubles are written with 17 significant digits.
std::string format_number(double x);

std::string render_json(const Json& report);

// One "key: value" line per leaf; nested objects use dotted keys. Arrays of
// integers stored under a profile key are shown 1-based as (x_1,...,x_n).
std::string render_text(const Json& report);

// FNV-1a, 64 bit, as 16 hex digits.
std::string digest(std::string_view bytes);

Json to_json(const RowVector& v);
Json to_json(const Vector& v);
Json to_json(const StrategyProfile& p);
Json to_json(const std::vector<StrategyProfile>& ps);

}  // namespace cwpot::cli

#endif  // CWPOT_TOOLS_REPORT_H_
