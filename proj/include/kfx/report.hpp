// Copyright 2026 The kfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "kfx/closed_forms.hpp"
#include "kfx/search.hpp"

namespace kfx {

using Json = nlohmann::ordered_json;

// Machine-readable forms. Rationals are always "p/q" strings; an optional
// decimal rendering is added alongside, never in place of, the exact value.
Json to_json(const ExtremalReport& report, std::optional<int> decimal_digits = std::nullopt);
Json to_json(const LemmaReport& report);
Json to_json(const FormulaValue& value, std::optional<int> decimal_digits = std::nullopt);

// Stable text form used for every JSON payload (2-space indent, trailing newline).
std::string dump_json(const Json& json);

// One row per enumerated class: code,cycle_length,max_degree,kf
void write_records_csv(std::ostream& out, const std::vector<ClassRecord>& records);

}  // namespace kfx
