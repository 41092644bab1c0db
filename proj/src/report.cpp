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

#include "kfx/report.hpp"

namespace kfx {

namespace {

Json rational_or_null(const std::optional<BigRational>& value) {
  if (!value) return nullptr;
  return value->to_fraction();
}

template <class T>
Json optional_or_null(const std::optional<T>& value) {
  if (!value) return nullptr;
  return *value;
}

}  // namespace

Json to_json(const ExtremalReport& r, std::optional<int> decimal_digits) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["l_filter"] = optional_or_null(r.l_filter);
  j["objective"] = objective_name(r.objective);
  j["degree_mode"] = degree_mode_name(r.degree_mode);
  j["mode"] = r.mode;
  j["graph_count"] = r.graph_count;
  j["extremal_value"] = rational_or_null(r.extremal_value);
  if (decimal_digits && r.extremal_value) j["extremal_value_decimal"] = r.extremal_value->to_decimal(*decimal_digits);
  Json codes = Json::array();
  for (const auto& c : r.argext_codes) codes.push_back(c.str());
  j["argext_codes"] = std::move(codes);
  j["formula_name"] = r.formula_name.empty() ? Json(nullptr) : Json(r.formula_name);
  j["formula_value"] = rational_or_null(r.formula_value);
  if (decimal_digits && r.formula_value) j["formula_value_decimal"] = r.formula_value->to_decimal(*decimal_digits);
  j["formula_x"] = optional_or_null(r.formula_x);
  j["expected_code"] = r.expected_code ? Json(r.expected_code->str()) : Json(nullptr);
  j["branch"] = r.branch.empty() ? Json(nullptr) : Json(r.branch);
  j["verdict"] = verdict_name(r.verdict);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const LemmaReport& report) {
  Json j;
  j["n_max"] = report.options.n_max;
  j["tree_n_max"] = report.options.tree_n_max;
  j["passed"] = report.passed();
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json item;
    item["name"] = r.name;
    item["statement"] = r.statement;
    item["asserted"] = r.asserted;
    item["instances"] = r.instances;
    item["violations"] = r.violations;
    item["first_violation"] = r.first_violation.empty() ? Json(nullptr) : Json(r.first_violation);
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  return j;
}

Json to_json(const FormulaValue& v, std::optional<int> decimal_digits) {
  Json j;
  j["name"] = v.name;
  j["variant"] = variant_name(v.variant);
  Json params = Json::object();
  if (v.params.n) params["n"] = *v.params.n;
  if (v.params.l) params["l"] = *v.params.l;
  if (v.params.delta) params["delta"] = *v.params.delta;
  if (v.params.x) params["x"] = *v.params.x;
  j["params"] = std::move(params);
  j["value"] = v.value.to_fraction();
  if (decimal_digits) j["decimal"] = v.value.to_decimal(*decimal_digits);
  return j;
}

std::string dump_json(const Json& json) { return json.dump(2) + "\n"; }

void write_records_csv(std::ostream& out, const std::vector<ClassRecord>& records) {
  out << "code,cycle_length,max_degree,kf\n";
  for (const auto& r : records) {
    out << r.code.str() << ',' << r.cycle_length << ',' << r.max_degree << ',' << r.kf.to_fraction() << '\n';
  }
}

}  // namespace kfx
