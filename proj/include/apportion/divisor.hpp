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

#ifndef APPORTION_DIVISOR_HPP_
#define APPORTION_DIVISOR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "apportion/core.hpp"

namespace apportion {

/// How contested seats at a tie are assigned. The default fails with a TieReport.
struct TiePolicy {
    enum class Kind { Fail, Lexicographic, Seeded };
    Kind kind{Kind::Fail};
    std::uint64_t seed{0};

    static TiePolicy fail() { return {}; }
    static TiePolicy lexicographic() { return {Kind::Lexicographic, 0}; }
    static TiePolicy seeded(std::uint64_t seed) { return {Kind::Seeded, seed}; }

    /// "fail", "lexicographic" or "seed=<n>".
    static TiePolicy parse(std::string_view text);
    [[nodiscard]] std::string str() const;
};

/// Names of the tied states that receive the contested seats.
std::vector<std::string> resolve_tie(const TieReport& report, const TiePolicy& policy);

struct SeatNumber {
    std::int64_t seats{0};
    bool on_boundary{false};  // seat count changes at this exact divisor
    bool capped{false};
};

/// Rounded, capped seat number of one state at divisor d.
SeatNumber seat_number(std::int64_t population, const ApportionmentParams& params, const Rational& d);

struct DivisorTotal {
    std::int64_t total{0};
    std::vector<std::string> boundary_states;  // states whose rounding is not well defined at d

    [[nodiscard]] bool boundary_valued() const noexcept { return !boundary_states.empty(); }
};

DivisorTotal total_at_divisor(std::span<const MemberState> states, const ApportionmentParams& params, const Rational& d);

/// Full allocation at a fixed divisor; the house size in params is ignored.
/// Throws TieError when any state sits exactly on a rounding boundary.
Allocation evaluate_at_divisor(std::span<const MemberState> states, const ApportionmentParams& params,
                               const Rational& d);

/// Allocation whose total equals params.house_size, carrying the maximal open
/// divisor interval. Throws InfeasibleError or TieError.
Allocation solve(std::span<const MemberState> states, const ApportionmentParams& params,
                 const TiePolicy& policy = TiePolicy::fail());

/// Exact divisor interval for params.house_size, or the tie marker.
DivisorInterval divisor_interval(std::span<const MemberState> states, const ApportionmentParams& params);

/// Enumerates every critical divisor, sorts them and scans the total between
/// consecutive values. Meant for small instances.
Allocation brute_force_oracle(std::span<const MemberState> states, const ApportionmentParams& params);

struct FixedHouse {
    std::int64_t seats{0};
};
struct FixedDivisor {
    Rational value;
};
using Target = std::variant<FixedHouse, FixedDivisor>;

/// Dispatches to solve (fixed house) or evaluate_at_divisor (fixed divisor).
Allocation allocate(std::span<const MemberState> states, const ApportionmentParams& params, const Target& target,
                    const TiePolicy& policy = TiePolicy::fail());

/// Builds an allocation entry for `seats` with shares and ratios taken at d.
AllocationEntry make_entry(const MemberState& state, const ApportionmentParams& params, const Rational& d,
                           std::int64_t seats);

}  // namespace apportion

#endif  // APPORTION_DIVISOR_HPP_
