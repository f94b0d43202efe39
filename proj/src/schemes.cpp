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

#include "apportion/schemes.hpp"

#include <algorithm>
#include <limits>

namespace apportion {

std::int64_t scheme_a_minimum(std::int64_t n, const SchemeAConfig& config) {
    if (n < 1) throw std::invalid_argument("at least one state required");
    if (!config.cap_fraction.is_positive() || config.cap_fraction > Rational{1}) {
        throw std::invalid_argument("cap fraction must lie in (0, 1]");
    }
    std::int64_t m = (config.cap_fraction * config.house_size / n).floor();
    if (m < 1) throw std::domain_error("scheme A cap leaves less than one seat per state");
    return m;
}

Rational scheme_a_base(std::span<const MemberState> states, std::int64_t minimum, SchemeABase variant,
                       const ApportionmentParams& params, const Rational& granularity) {
    if (minimum < 1) throw std::invalid_argument("minimum must be at least one seat");
    if (variant == SchemeABase::MinimumMinusOne) return Rational{minimum - 1};

    validate_states(states);
    if (states.empty()) throw std::invalid_argument("at least one state required");
    if (!granularity.is_positive()) throw std::invalid_argument("granularity must be positive");
    const auto smallest = static_cast<std::size_t>(
        std::min_element(states.begin(), states.end(),
                         [](const auto& a, const auto& b) { return a.population < b.population; }) -
        states.begin());

    auto smallest_seats = [&](const Rational& base) -> std::int64_t {
        ApportionmentParams p = params;
        p.base = base;
        p.rounding = RoundingRule::Up;
        try {
            return solve(states, p, TiePolicy::lexicographic()).entries[smallest].seats;
        } catch (const InfeasibleError& e) {
            // House too small for this base's floor: every state already
            // exceeds what the house can hold.
            if (params.house_size < e.range().lo) return std::numeric_limits<std::int64_t>::max();
            throw;
        }
    };

    // Seats of the smallest state are non-decreasing in the base; find the
    // first grid point where they reach the minimum.
    std::int64_t lo = 0;
    std::int64_t hi = (Rational{minimum - 1} / granularity).floor();
    if (smallest_seats(granularity * hi) < minimum) {
        throw std::domain_error("no base up to " + std::to_string(minimum - 1) + " gives the smallest state " +
                                std::to_string(minimum) + " seats");
    }
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (smallest_seats(granularity * mid) >= minimum) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Rational base = granularity * lo;
    if (smallest_seats(base) != minimum) {
        throw std::domain_error("smallest state skips " + std::to_string(minimum) + " seats at granularity " +
                                granularity.str());
    }
    return base;
}

Rational scheme_b_base(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("at least one state required");
    return Rational{135, n};
}

ScenarioDelta accession_scenario(std::span<const MemberState> baseline_states,
                                 std::span<const MemberState> acceding_states, const ApportionmentParams& params,
                                 const ScenarioOptions& options) {
    auto has = [](std::span<const MemberState> states, std::string_view name) {
        return std::any_of(states.begin(), states.end(), [&](const auto& s) { return s.name == name; });
    };
    for (const auto& s : acceding_states) {
        if (has(baseline_states, s.name)) throw std::invalid_argument(s.name + " is already a member");
    }
    auto dropped = [&](std::string_view name) {
        return std::find(options.remove.begin(), options.remove.end(), name) != options.remove.end();
    };
    std::vector<MemberState> variant_states;
    for (const auto& s : baseline_states) {
        if (!dropped(s.name)) variant_states.push_back(s);
    }
    for (const auto& s : acceding_states) {
        if (!dropped(s.name)) variant_states.push_back(s);
    }

    Target baseline_target = options.baseline_target.value_or(FixedHouse{params.house_size});
    Target variant_target = options.variant_target.value_or(FixedHouse{params.house_size});

    ScenarioDelta out;
    out.baseline = allocate(baseline_states, params, baseline_target, options.tie_policy);
    out.variant = allocate(variant_states, params, variant_target, options.tie_policy);

    for (const auto& e : out.variant.entries) {
        SeatChange change{e.name, std::nullopt, e.seats};
        if (const auto* before = out.baseline.find(e.name)) {
            change.before = before->seats;
        } else {
            out.joined.push_back(e.name);
        }
        out.changes.push_back(std::move(change));
    }
    for (const auto& e : out.baseline.entries) {
        if (!out.variant.find(e.name)) {
            out.changes.push_back({e.name, e.seats, std::nullopt});
            out.removed.push_back(e.name);
        }
    }
    return out;
}

}  // namespace apportion
