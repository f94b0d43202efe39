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

#include "apportion/sequential.hpp"

#include <algorithm>
#include <queue>

namespace apportion {

namespace {

    struct Candidate {
        Rational quotient;
        std::size_t index{0};
        const std::string* name{nullptr};
    };

    // max-heap on quotient, then smallest name first
    struct LowerPriority {
        bool operator()(const Candidate& a, const Candidate& b) const {
            if (a.quotient != b.quotient) return a.quotient < b.quotient;
            return *a.name > *b.name;
        }
    };

}  // namespace

SequentialResult sequential_allocate(std::span<const MemberState> states, const ApportionmentParams& params,
                                     const TiePolicy& policy) {
    validate_states(states);
    params.validate();
    if (states.empty()) throw std::invalid_argument("at least one state required");
    const auto n = static_cast<std::int64_t>(states.size());
    HouseRange range = feasible_house_range(n, params);
    if (!range.contains(params.house_size)) {
        throw InfeasibleError("house size " + std::to_string(params.house_size) + " outside feasible range [" +
                                  std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]",
                              range);
    }

    SequentialResult result;
    QuotientTrace& trace = result.trace;
    trace.floor_seats = std::min(minimum_seats(params.base, params.rounding), params.max_cap);

    std::vector<std::int64_t> seats(states.size(), trace.floor_seats);
    auto quotient = [&](std::size_t i) {
        return Rational{states[i].population} / signpost(seats[i], params.base, params.rounding);
    };

    std::priority_queue<Candidate, std::vector<Candidate>, LowerPriority> queue;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (seats[i] >= params.max_cap) {
            trace.removals.push_back({states[i].name, 0});
        } else {
            queue.push({quotient(i), i, &states[i].name});
        }
    }

    const std::int64_t remaining = params.house_size - range.lo;
    for (std::int64_t step = 1; step <= remaining; ++step) {
        Candidate best = queue.top();
        queue.pop();
        ++seats[best.index];
        trace.steps.push_back({step, *best.name, best.quotient, seats[best.index]});
        if (seats[best.index] >= params.max_cap) {
            trace.removals.push_back({*best.name, step});
        } else {
            queue.push({quotient(best.index), best.index, best.name});
        }
    }
    while (!queue.empty()) {
        trace.frontier.push_back({*queue.top().name, queue.top().quotient});
        queue.pop();
    }

    Allocation& out = result.allocation;
    Rational divisor{1};
    if (auto tie = detect_tie(trace, params.house_size)) {
        std::vector<std::string> winners = resolve_tie(*tie, policy);
        divisor = tie->boundary_divisor;
        // Undo every award made at the boundary quotient, then hand the
        // contested seats to the policy's winners.
        for (const auto& s : trace.steps) {
            if (s.quotient == tie->boundary_divisor) {
                auto it = std::find_if(states.begin(), states.end(), [&](const auto& m) { return m.name == s.state; });
                --seats[static_cast<std::size_t>(it - states.begin())];
            }
        }
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (std::find(winners.begin(), winners.end(), states[i].name) != winners.end()) ++seats[i];
        }
        out.divisor_interval = DivisorInterval::tie(divisor);
        out.resolved_tie = std::move(tie);
    } else {
        out.divisor_interval = DivisorInterval::between(
            trace.frontier.empty() ? Rational{0} : trace.frontier.front().quotient,
            trace.steps.empty() ? std::nullopt : std::optional<Rational>{trace.steps.back().quotient});
        divisor = out.divisor_interval.reference();
    }
    out.divisor = divisor;
    for (std::size_t i = 0; i < states.size(); ++i) {
        out.entries.push_back(make_entry(states[i], params, divisor, seats[i]));
        out.total_seats += seats[i];
    }
    return result;
}

std::optional<TieReport> detect_tie(const QuotientTrace& trace, std::int64_t /*house_size*/) {
    if (trace.steps.empty() || trace.frontier.empty()) return std::nullopt;
    const Rational& last = trace.steps.back().quotient;
    if (trace.frontier.front().quotient != last) return std::nullopt;

    TieReport report;
    report.boundary_divisor = last;
    for (const auto& s : trace.steps) {
        if (s.quotient == last) {
            report.tied_states.push_back(s.state);
            ++report.seats_contested;
        }
    }
    for (const auto& f : trace.frontier) {
        if (f.quotient == last) report.tied_states.push_back(f.state);
    }
    std::sort(report.tied_states.begin(), report.tied_states.end());
    return report;
}

}  // namespace apportion
