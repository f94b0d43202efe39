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

#ifndef APPORTION_SCHEMES_HPP_
#define APPORTION_SCHEMES_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/divisor.hpp"

namespace apportion {

/// Scheme A: the seats handed out through the minimum may not exceed
/// cap_fraction of the house.
struct SchemeAConfig {
    Rational cap_fraction{1, 4};
    std::int64_t house_size{751};
};

enum class SchemeABase {
    MinimumMinusOne,   // b = m - 1, used with upward rounding
    SmallestFraction,  // least b (on a grid) giving the smallest state exactly m seats
};

/// Largest m with n * m <= cap_fraction * house_size. Throws when m < 1.
std::int64_t scheme_a_minimum(std::int64_t n, const SchemeAConfig& config);

/// Base for a Scheme A minimum. SmallestFraction re-solves the full instance
/// with upward rounding for each candidate base on a grid of `granularity`.
Rational scheme_a_base(std::span<const MemberState> states, std::int64_t minimum, SchemeABase variant,
                       const ApportionmentParams& params, const Rational& granularity = Rational{1, 1000});

/// Scheme B: b = 135 / n.
Rational scheme_b_base(std::int64_t n);

struct SeatChange {
    std::string state;
    std::optional<std::int64_t> before;  // absent for joining states
    std::optional<std::int64_t> after;   // absent for leaving states

    [[nodiscard]] std::int64_t delta() const { return after.value_or(0) - before.value_or(0); }
};

struct ScenarioDelta {
    Allocation baseline;
    Allocation variant;
    std::vector<SeatChange> changes;  // one per state in either allocation, variant order first
    std::vector<std::string> joined;
    std::vector<std::string> removed;
};

struct ScenarioOptions {
    std::vector<std::string> remove;   // names dropped from the variant
    std::optional<Target> baseline_target;  // defaults to FixedHouse{params.house_size}
    std::optional<Target> variant_target;
    TiePolicy tie_policy;
};

/// Solves the baseline and the variant (baseline + acceding - removed) and
/// reports per-state seat changes.
ScenarioDelta accession_scenario(std::span<const MemberState> baseline_states,
                                 std::span<const MemberState> acceding_states, const ApportionmentParams& params,
                                 const ScenarioOptions& options = {});

}  // namespace apportion

#endif  // APPORTION_SCHEMES_HPP_
