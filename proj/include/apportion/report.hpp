/*
   Copyright 2026 The Apportion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef APPORTION_REPORT_HPP_
#define APPORTION_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "apportion/core.hpp"
#include "apportion/dataset.hpp"
#include "apportion/degressive.hpp"
#include "apportion/divisor.hpp"
#include "apportion/schemes.hpp"

namespace apportion {

enum class Method { Divisor, Sequential, Both };
enum class Format { Table, Csv, Json };

Method parse_method(std::string_view text);
Format parse_format(std::string_view text);

struct SchemeA {
    Rational cap_fraction{1, 4};
    SchemeABase variant{SchemeABase::MinimumMinusOne};
};
struct SchemeB {};
using Scheme = std::variant<SchemeA, SchemeB>;

struct AccessionConfig {
    std::vector<MemberState> acceding;
    std::vector<std::string> remove;
    std::optional<Target> variant_target;  // defaults to the baseline target
};

struct ScenarioConfig {
    PopulationDataset dataset;
    ApportionmentParams params;  // params.house_size is ignored for a fixed divisor
    Target target{FixedHouse{751}};
    TiePolicy tie_policy;
    std::optional<Scheme> scheme;
    Method method{Method::Both};
    bool check_dp{true};
    std::optional<AccessionConfig> accession;
};

struct Report {
    std::string source_label;
    std::string snapshot_date;
    ApportionmentParams params;  // effective, after any scheme
    Target target{FixedHouse{751}};
    Method method{Method::Both};
    TiePolicy tie_policy;
    std::optional<std::int64_t> scheme_minimum;
    std::string scheme_label;
    Allocation allocation;
    std::optional<DpReport> dp;
    std::optional<ScenarioDelta> delta;
    std::map<std::string, std::int64_t> status_quo;
};

/// Runs the configured scenario. With Method::Both the divisor solver and
/// the sequential method must agree seat for seat or std::logic_error is
/// thrown. Solver errors propagate unchanged.
Report run_scenario(const ScenarioConfig& config);

std::string render(const Report& report, Format format);

nlohmann::json rational_json(const Rational& r);
nlohmann::json report_json(const Report& report);
nlohmann::json tie_json(const TieReport& tie);

}  // namespace apportion

#endif  // APPORTION_REPORT_HPP_
