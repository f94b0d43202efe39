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

#include "apportion/divisor.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>

namespace apportion {

TiePolicy TiePolicy::parse(std::string_view text) {
    if (text == "fail") return fail();
    if (text == "lexicographic" || text == "lex") return lexicographic();
    if (text.starts_with("seed=")) {
        std::string_view digits = text.substr(5);
        std::uint64_t seed{0};
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size()) return seeded(seed);
    }
    throw std::invalid_argument("unknown tie policy '" + std::string{text} + "'");
}

std::string TiePolicy::str() const {
    switch (kind) {
        case Kind::Fail: return "fail";
        case Kind::Lexicographic: return "lexicographic";
        case Kind::Seeded: return "seed=" + std::to_string(seed);
    }
    return "fail";
}

std::vector<std::string> resolve_tie(const TieReport& report, const TiePolicy& policy) {
    if (policy.kind == TiePolicy::Kind::Fail) throw TieError(report);
    std::vector<std::string> order = report.tied_states;
    std::sort(order.begin(), order.end());
    if (policy.kind == TiePolicy::Kind::Seeded) {
        // Lot casting; Fisher-Yates driven by an explicit engine so results are
        // reproducible across standard library implementations.
        std::mt19937_64 engine{policy.seed};
        for (std::size_t i = order.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(engine() % i);
            std::swap(order[i - 1], order[j]);
        }
    }
    order.resize(static_cast<std::size_t>(std::min<std::int64_t>(report.seats_contested,
                                                                  static_cast<std::int64_t>(order.size()))));
    return order;
}

SeatNumber seat_number(std::int64_t population, const ApportionmentParams& params, const Rational& d) {
    if (!d.is_positive()) throw std::invalid_argument("divisor must be positive");
    Rational uncapped = params.base + Rational{population} / d;
    SeatNumber out;
    out.capped = uncapped >= Rational{params.max_cap};
    out.seats = std::min(round_share(std::min(uncapped, Rational{params.max_cap}), params.rounding).seats,
                         params.max_cap);
    // The count changes at d exactly when population/d equals signpost(a) for
    // an admissible a, i.e. when population/d + base - offset is such an a.
    Rational position = uncapped - rounding_offset(params.rounding);
    out.on_boundary = position.is_integer() && position.num() >= minimum_seats(params.base, params.rounding) &&
                      position.num() <= params.max_cap - 1;
    return out;
}

DivisorTotal total_at_divisor(std::span<const MemberState> states, const ApportionmentParams& params,
                              const Rational& d) {
    DivisorTotal out;
    for (const auto& s : states) {
        SeatNumber sn = seat_number(s.population, params, d);
        out.total += sn.seats;
        if (sn.on_boundary) out.boundary_states.push_back(s.name);
    }
    return out;
}

AllocationEntry make_entry(const MemberState& state, const ApportionmentParams& params, const Rational& d,
                           std::int64_t seats) {
    AllocationEntry e;
    e.name = state.name;
    e.population = state.population;
    e.seats = seats;
    e.share = seat_share(state.population, params.base, d, params.max_cap);
    e.ratio_before = Rational{state.population} / e.share;
    if (seats > 0) e.ratio_after = Rational{state.population, seats};
    e.capped = params.base + Rational{state.population} / d >= Rational{params.max_cap};
    return e;
}

Allocation evaluate_at_divisor(std::span<const MemberState> states, const ApportionmentParams& params,
                               const Rational& d) {
    validate_states(states);
    params.validate();
    Allocation out;
    out.divisor = d;
    out.divisor_interval = DivisorInterval::point(d);
    std::vector<std::string> boundary;
    for (const auto& s : states) {
        SeatNumber sn = seat_number(s.population, params, d);
        if (sn.on_boundary) boundary.push_back(s.name);
        out.entries.push_back(make_entry(s, params, d, sn.seats));
        out.total_seats += sn.seats;
    }
    if (!boundary.empty()) {
        std::sort(boundary.begin(), boundary.end());
        auto contested = static_cast<std::int64_t>(boundary.size());
        throw TieError(TieReport{std::move(boundary), d, contested});
    }
    return out;
}

namespace {

    /// The critical divisors of an instance, viewed as n decreasing sequences
    /// population_i / signpost(a) for a in [floor, max_cap - 1]. A state holds
    /// more than a seats exactly when d lies below its a-th critical value.
    class CriticalSchedule {
      public:
        CriticalSchedule(std::span<const MemberState> states, const ApportionmentParams& params)
            : states_{states}, params_{params}, offset_{rounding_offset(params.rounding)} {
            floor_ = std::min(minimum_seats(params.base, params.rounding), params.max_cap);
            span_ = params.max_cap - floor_;
        }

        [[nodiscard]] std::int64_t floor_seats() const { return floor_; }
        [[nodiscard]] std::int64_t size() const { return span_ * static_cast<std::int64_t>(states_.size()); }

        [[nodiscard]] Rational value(std::size_t i, std::int64_t j) const {
            return Rational{states_[i].population} / signpost(floor_ + j, params_.base, params_.rounding);
        }

        // #{a : critical value > v}
        [[nodiscard]] std::int64_t above(std::size_t i, const Rational& v) const {
            return std::clamp(position(i, v).ceil() - floor_, std::int64_t{0}, span_);
        }

        // #{a : critical value >= v}
        [[nodiscard]] std::int64_t at_or_above(std::size_t i, const Rational& v) const {
            return std::clamp(position(i, v).floor() - floor_ + 1, std::int64_t{0}, span_);
        }

        [[nodiscard]] std::int64_t above(const Rational& v) const {
            std::int64_t total = 0;
            for (std::size_t i = 0; i < states_.size(); ++i) total += above(i, v);
            return total;
        }

        [[nodiscard]] std::int64_t at_or_above(const Rational& v) const {
            std::int64_t total = 0;
            for (std::size_t i = 0; i < states_.size(); ++i) total += at_or_above(i, v);
            return total;
        }

        /// k-th largest critical value (1-based, with multiplicity).
        [[nodiscard]] Rational kth_largest(std::int64_t k) const {
            for (std::size_t i = 0; i < states_.size(); ++i) {
                // the j-th value of one sequence has j larger values before it
                const std::int64_t limit = std::min(span_, k);
                std::int64_t lo = 0;
                std::int64_t hi = limit;
                while (lo < hi) {
                    std::int64_t mid = lo + (hi - lo) / 2;
                    if (at_or_above(value(i, mid)) >= k) {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                if (lo == limit) continue;
                Rational candidate = value(i, lo);
                if (above(candidate) < k) return candidate;
            }
            throw std::logic_error("critical value rank out of range");
        }

      private:
        // population/v + base - offset: a has critical value > v iff a < this
        [[nodiscard]] Rational position(std::size_t i, const Rational& v) const {
            return Rational{states_[i].population} / v + params_.base - offset_;
        }

        std::span<const MemberState> states_;
        const ApportionmentParams& params_;
        Rational offset_;
        std::int64_t floor_{0};
        std::int64_t span_{0};
    };

    struct Located {
        std::int64_t rank{0};  // seats above the floor that must be granted
        Rational lo;
        std::optional<Rational> hi;
        std::optional<TieReport> tie;
    };

    Located locate(std::span<const MemberState> states, const ApportionmentParams& params,
                   const CriticalSchedule& schedule) {
        validate_states(states);
        params.validate();
        if (states.empty()) throw std::invalid_argument("at least one state required");
        HouseRange range = feasible_house_range(static_cast<std::int64_t>(states.size()), params);
        if (!range.contains(params.house_size)) {
            throw InfeasibleError("house size " + std::to_string(params.house_size) + " outside feasible range [" +
                                      std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]",
                                  range);
        }
        Located out;
        out.rank = params.house_size - range.lo;
        if (out.rank > 0) out.hi = schedule.kth_largest(out.rank);
        out.lo = out.rank < schedule.size() ? schedule.kth_largest(out.rank + 1) : Rational{0};
        if (out.hi && *out.hi == out.lo) {
            TieReport report;
            report.boundary_divisor = out.lo;
            report.seats_contested = out.rank - schedule.above(out.lo);
            for (std::size_t i = 0; i < states.size(); ++i) {
                if (schedule.at_or_above(i, out.lo) > schedule.above(i, out.lo)) {
                    report.tied_states.push_back(states[i].name);
                }
            }
            std::sort(report.tied_states.begin(), report.tied_states.end());
            out.tie = std::move(report);
        }
        return out;
    }

}  // namespace

DivisorInterval divisor_interval(std::span<const MemberState> states, const ApportionmentParams& params) {
    CriticalSchedule schedule{states, params};
    Located found = locate(states, params, schedule);
    if (found.tie) return DivisorInterval::tie(found.tie->boundary_divisor);
    return DivisorInterval::between(found.lo, found.hi);
}

Allocation solve(std::span<const MemberState> states, const ApportionmentParams& params, const TiePolicy& policy) {
    CriticalSchedule schedule{states, params};
    Located found = locate(states, params, schedule);

    if (found.tie) {
        std::vector<std::string> winners = resolve_tie(*found.tie, policy);
        const Rational& v = found.tie->boundary_divisor;
        Allocation out;
        out.divisor = v;
        out.divisor_interval = DivisorInterval::tie(v);
        for (std::size_t i = 0; i < states.size(); ++i) {
            std::int64_t seats = schedule.floor_seats() + schedule.above(i, v);
            if (std::find(winners.begin(), winners.end(), states[i].name) != winners.end()) ++seats;
            out.entries.push_back(make_entry(states[i], params, v, seats));
            out.total_seats += seats;
        }
        out.resolved_tie = found.tie;
        return out;
    }

    DivisorInterval interval = DivisorInterval::between(found.lo, found.hi);
    Allocation out = evaluate_at_divisor(states, params, interval.reference());
    out.divisor_interval = interval;
    if (out.total_seats != params.house_size) throw std::logic_error("divisor interval does not realize house size");
    return out;
}

Allocation brute_force_oracle(std::span<const MemberState> states, const ApportionmentParams& params) {
    validate_states(states);
    params.validate();
    if (states.empty()) throw std::invalid_argument("at least one state required");
    const std::int64_t n = static_cast<std::int64_t>(states.size());
    const std::int64_t house = params.house_size;

    // Smallest seat count for a vanishing population, found by rounding b + tiny.
    std::int64_t floor = std::min(round_share(params.base + Rational{1, 1'000'000'000}, params.rounding).seats,
                                  params.max_cap);
    if (house < n * floor || house > n * params.max_cap) {
        throw InfeasibleError("house size outside feasible range", HouseRange{n * floor, n * params.max_cap});
    }

    // Every divisor at which some state's seat count can change.
    Rational offset = rounding_offset(params.rounding);
    std::vector<Rational> critical;
    std::int64_t top = std::min(params.max_cap, house);
    for (const auto& s : states) {
        for (std::int64_t k = floor; k < top; ++k) {
            Rational gap = Rational{k} + offset - params.base;
            if (gap.is_positive()) critical.push_back(Rational{s.population} / gap);
        }
    }
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

    auto total = [&](const Rational& d) {
        std::int64_t t = 0;
        for (const auto& s : states) {
            Rational share = std::min(params.base + Rational{s.population} / d, Rational{params.max_cap});
            t += std::min(round_share(share, params.rounding).seats, params.max_cap);
        }
        return t;
    };
    auto build = [&](const Rational& d, DivisorInterval interval) {
        Allocation out;
        out.divisor = d;
        out.divisor_interval = std::move(interval);
        for (const auto& s : states) {
            Rational share = std::min(params.base + Rational{s.population} / d, Rational{params.max_cap});
            std::int64_t seats = std::min(round_share(share, params.rounding).seats, params.max_cap);
            out.entries.push_back(make_entry(s, params, d, seats));
            out.total_seats += seats;
        }
        return out;
    };

    if (critical.empty()) {
        if (total(Rational{1}) == house) return build(Rational{1}, DivisorInterval::between(Rational{0}, std::nullopt));
        throw std::logic_error("oracle: constant total differs from house size");
    }

    // Gaps, from the largest divisors downwards; T is constant inside each.
    std::vector<std::int64_t> gap_totals(critical.size() + 1);
    gap_totals[critical.size()] = total(critical.back() * 2);
    for (std::size_t g = critical.size() - 1; g + 1 > 0; --g) {
        Rational probe = g == 0 ? critical.front() / 2 : (critical[g - 1] + critical[g]) / 2;
        gap_totals[g] = total(probe);
    }
    // gap g lies between critical[g-1] and critical[g]
    for (std::size_t g = 0; g <= critical.size(); ++g) {
        if (gap_totals[g] != house) continue;
        Rational lo = g == 0 ? Rational{0} : critical[g - 1];
        std::optional<Rational> hi = g == critical.size() ? std::nullopt : std::optional<Rational>{critical[g]};
        DivisorInterval interval = DivisorInterval::between(lo, hi);
        return build(interval.reference(), interval);
    }
    // T jumps over the house size at one critical value.
    for (std::size_t g = critical.size(); g > 0; --g) {
        if (gap_totals[g] < house && gap_totals[g - 1] > house) {
            const Rational& v = critical[g - 1];
            TieReport report;
            report.boundary_divisor = v;
            report.seats_contested = house - gap_totals[g];
            for (const auto& s : states) {
                for (std::int64_t k = floor; k < top; ++k) {
                    Rational gap = Rational{k} + offset - params.base;
                    if (gap.is_positive() && Rational{s.population} / gap == v) report.tied_states.push_back(s.name);
                }
            }
            std::sort(report.tied_states.begin(), report.tied_states.end());
            throw TieError(std::move(report));
        }
    }
    throw std::logic_error("oracle: house size not bracketed");
}

Allocation allocate(std::span<const MemberState> states, const ApportionmentParams& params, const Target& target,
                    const TiePolicy& policy) {
    if (const auto* fixed = std::get_if<FixedDivisor>(&target)) return evaluate_at_divisor(states, params, fixed->value);
    ApportionmentParams p = params;
    p.house_size = std::get<FixedHouse>(target).seats;
    return solve(states, p, policy);
}

}  // namespace apportion
