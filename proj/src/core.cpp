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

#include "apportion/core.hpp"

#include <algorithm>
#include <set>

namespace apportion {

std::string to_string(RoundingRule rule) {
    switch (rule) {
        case RoundingRule::Up: return "up";
        case RoundingRule::Standard: return "standard";
        case RoundingRule::Down: return "down";
    }
    return "up";
}

RoundingRule parse_rounding(std::string_view text) {
    if (text == "up" || text == "U" || text == "UP") return RoundingRule::Up;
    if (text == "standard" || text == "S" || text == "STANDARD") return RoundingRule::Standard;
    if (text == "down" || text == "D" || text == "DOWN") return RoundingRule::Down;
    throw std::invalid_argument("unknown rounding rule '" + std::string{text} + "'");
}

void ApportionmentParams::validate() const {
    if (base.is_negative()) throw std::invalid_argument("base must be non-negative");
    if (max_cap < 1) throw std::invalid_argument("maximum must be at least one seat");
    if (base >= Rational{max_cap}) throw std::invalid_argument("base must be below the maximum");
    if (house_size < 1) throw std::invalid_argument("house size must be at least one seat");
}

DivisorInterval DivisorInterval::between(Rational lo, std::optional<Rational> hi) {
    if (lo.is_negative()) throw std::invalid_argument("divisor interval below zero");
    if (hi && *hi < lo) throw std::invalid_argument("divisor interval with lo > hi");
    DivisorInterval out;
    out.lo_ = lo;
    out.hi_ = std::move(hi);
    return out;
}

DivisorInterval DivisorInterval::point(Rational d) {
    DivisorInterval out;
    out.lo_ = d;
    out.hi_ = d;
    out.point_ = true;
    return out;
}

DivisorInterval DivisorInterval::tie(Rational boundary) {
    DivisorInterval out;
    out.lo_ = boundary;
    out.hi_ = boundary;
    out.tie_ = true;
    return out;
}

bool DivisorInterval::contains(const Rational& d) const {
    if (tie_) return false;
    if (point_) return d == lo_;
    return d > lo_ && (!hi_ || d < *hi_);
}

namespace {

    // Simplest rational strictly between lo >= 0 and hi (absent: +inf), by
    // continued fractions. Never larger in size than the endpoints.
    Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
        std::int64_t whole = lo.floor();
        if (!hi || Rational{whole + 1} < *hi) return Rational{whole + 1};
        Rational lo_frac = lo - whole;
        Rational hi_frac = *hi - whole;
        std::optional<Rational> inverse_hi;
        if (lo_frac.is_positive()) inverse_hi = Rational{1} / lo_frac;
        return Rational{whole} + Rational{1} / simplest_between(Rational{1} / hi_frac, inverse_hi);
    }

    // The multiple of the largest power of ten lying strictly inside (lo, hi),
    // nearest the midpoint; the simplest rational when no integer fits.
    Rational roundest_between(const Rational& lo, const Rational& hi) {
        const wide_int ln = lo.num(), ld = lo.den(), hn = hi.num(), hd = hi.den();
        wide_int scale = 1;
        while (scale * 10 * hd <= hn) scale *= 10;
        for (; scale >= 1; scale /= 10) {
            wide_int k_min = ln / (ld * scale) + 1;
            wide_int k_max = (hn + hd * scale - 1) / (hd * scale) - 1;
            if (k_min > k_max) continue;
            // round((lo + hi) / (2 * scale)), half up
            wide_int twice_mid_num = ln * hd + hn * ld;
            wide_int k = (twice_mid_num + ld * hd * scale) / (2 * ld * hd * scale);
            k = std::clamp(k, k_min, k_max);
            return Rational::from_wide(k * scale, 1);
        }
        return simplest_between(lo, hi);
    }

}  // namespace

Rational DivisorInterval::reference() const {
    if (tie_ || point_) return lo_;
    if (!hi_) return lo_.is_zero() ? Rational{1} : roundest_between(lo_, lo_ * 2);
    return roundest_between(lo_, *hi_);
}

std::vector<std::int64_t> Allocation::seat_vector() const {
    std::vector<std::int64_t> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.seats);
    return out;
}

const AllocationEntry* Allocation::find(std::string_view name) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
}

TieError::TieError(TieReport report)
    : ApportionError([&] {
          std::string msg = "tie at divisor " + report.boundary_divisor.str() + ": " +
                            std::to_string(report.seats_contested) + " seat(s) contested by";
          for (const auto& name : report.tied_states) msg += " " + name;
          return msg;
      }()),
      report_{std::move(report)} {}

Rational seat_share(std::int64_t population, const Rational& base, const Rational& divisor, std::int64_t max_cap) {
    if (!divisor.is_positive()) throw std::invalid_argument("divisor must be positive");
    Rational share = base + Rational{population} / divisor;
    return std::min(share, Rational{max_cap});
}

RoundedShare round_share(const Rational& x, RoundingRule rule) {
    switch (rule) {
        case RoundingRule::Up: return {x.ceil(), !x.is_integer()};
        case RoundingRule::Down: return {x.floor(), !x.is_integer()};
        case RoundingRule::Standard: {
            Rational shifted = x + Rational{1, 2};
            return {shifted.floor(), !shifted.is_integer()};
        }
    }
    return {};
}

Rational rounding_offset(RoundingRule rule) {
    switch (rule) {
        case RoundingRule::Up: return Rational{0};
        case RoundingRule::Standard: return Rational{1, 2};
        case RoundingRule::Down: return Rational{1};
    }
    return {};
}

Rational signpost(std::int64_t seats_held, const Rational& base, RoundingRule rule) {
    return Rational{seats_held} + rounding_offset(rule) - base;
}

std::int64_t minimum_seats(const Rational& base, RoundingRule rule) {
    // smallest a >= 0 with signpost(a) > 0
    return std::max<std::int64_t>(0, (base - rounding_offset(rule)).floor() + 1);
}

EquivalenceClass equivalent_specs(const Rational& base, RoundingRule rule) {
    if (base.is_negative()) throw std::invalid_argument("base must be non-negative");
    Rational up_base = base - rounding_offset(rule);
    EquivalenceClass out;
    for (RoundingRule member : {RoundingRule::Up, RoundingRule::Standard, RoundingRule::Down}) {
        Rational b = up_base + rounding_offset(member);
        if (b.is_negative()) {
            out.notes.push_back("omitted " + to_string(member) + " representative with negative base " + b.str());
            continue;
        }
        out.members.push_back({b, member});
    }
    return out;
}

HouseRange feasible_house_range(std::int64_t n, const ApportionmentParams& params) {
    if (n < 1) throw std::invalid_argument("at least one state required");
    std::int64_t per_state = std::min(minimum_seats(params.base, params.rounding), params.max_cap);
    return {n * per_state, n * params.max_cap};
}

std::vector<RatioPair> ratios(const Allocation& allocation) {
    std::vector<RatioPair> out;
    out.reserve(allocation.entries.size());
    for (const auto& e : allocation.entries) {
        if (e.seats < 1) throw std::invalid_argument("ratio undefined for " + e.name + " with zero seats");
        if (!e.share.is_positive()) throw std::invalid_argument("ratio undefined for " + e.name + " with zero share");
        out.push_back({Rational{e.population} / e.share, Rational{e.population, e.seats}});
    }
    return out;
}

void validate_states(std::span<const MemberState> states) {
    std::set<std::string_view> seen;
    for (const auto& s : states) {
        if (s.name.empty()) throw std::invalid_argument("state name must not be empty");
        if (s.population < 1) throw std::invalid_argument("population of " + s.name + " must be positive");
        if (!seen.insert(s.name).second) throw std::invalid_argument("duplicate state name " + s.name);
    }
}

}  // namespace apportion
