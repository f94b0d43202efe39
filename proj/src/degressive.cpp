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

#include "apportion/degressive.hpp"

#include <algorithm>
#include <numeric>

namespace apportion {

namespace {

    // Indices ordered by population descending, then name for determinism.
    template <typename Entry>
    std::vector<std::size_t> by_population(std::span<const Entry> entries) {
        std::vector<std::size_t> order(entries.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (entries[a].population != entries[b].population) return entries[a].population > entries[b].population;
            return entries[a].name < entries[b].name;
        });
        return order;
    }

    // Visits (larger, smaller) pairs with strictly different populations, in
    // report order.
    template <typename Entry, typename Visit>
    void for_each_pair(std::span<const Entry> entries, Visit&& visit) {
        auto order = by_population(entries);
        for (std::size_t a = 0; a < order.size(); ++a) {
            for (std::size_t b = a + 1; b < order.size(); ++b) {
                const Entry& larger = entries[order[a]];
                const Entry& smaller = entries[order[b]];
                if (larger.population == smaller.population) continue;
                visit(larger, smaller);
            }
        }
    }

}  // namespace

std::vector<StatePair> check_condition1(std::span<const SeatedState> entries) {
    std::vector<StatePair> out;
    for_each_pair(entries, [&](const SeatedState& larger, const SeatedState& smaller) {
        if (smaller.seats > larger.seats) out.push_back({smaller.name, larger.name});
    });
    return out;
}

std::vector<StatePair> check_pre_rounding(std::span<const SharedState> entries) {
    std::vector<StatePair> out;
    for_each_pair(entries, [&](const SharedState& larger, const SharedState& smaller) {
        if (!smaller.share.is_positive() || !larger.share.is_positive()) {
            throw std::invalid_argument("pre-rounding check needs positive shares");
        }
        if (Rational{smaller.population} / smaller.share >= Rational{larger.population} / larger.share) {
            out.push_back({smaller.name, larger.name});
        }
    });
    return out;
}

std::vector<std::string> check_post_rounding(std::span<const SeatedState> entries) {
    std::vector<std::string> out;
    for_each_pair(entries, [&](const SeatedState& larger, const SeatedState& smaller) {
        if (smaller.seats < 1 || larger.seats < 1) throw std::invalid_argument("post-rounding check needs seats >= 1");
        // smaller/seats_s > larger/seats_l, cross-multiplied
        bool inverted = static_cast<wide_int>(smaller.population) * larger.seats >
                        static_cast<wide_int>(larger.population) * smaller.seats;
        if (inverted && (out.empty() || out.back() != larger.name)) out.push_back(larger.name);
    });
    return out;
}

DpReport dp_report(const Allocation& allocation) {
    std::vector<SeatedState> seated;
    std::vector<SharedState> shared;
    for (const auto& e : allocation.entries) {
        seated.push_back({e.name, e.population, e.seats});
        shared.push_back({e.name, e.population, e.share});
    }
    DpReport report;
    report.condition1_violations = check_condition1(seated);
    report.pre_rounding_violations = check_pre_rounding(shared);
    bool all_seated = std::all_of(seated.begin(), seated.end(), [](const auto& s) { return s.seats >= 1; });
    if (all_seated) report.post_rounding_violations = check_post_rounding(seated);
    report.satisfies_revised_dp = report.condition1_violations.empty() && report.pre_rounding_violations.empty();
    return report;
}

}  // namespace apportion
