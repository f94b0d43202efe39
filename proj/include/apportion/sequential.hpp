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

#ifndef APPORTION_SEQUENTIAL_HPP_
#define APPORTION_SEQUENTIAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/divisor.hpp"

namespace apportion {

struct QuotientStep {
    std::int64_t step{0};  // 1-based, counted after the stage-0 grant
    std::string state;
    Rational quotient;
    std::int64_t seats_after{0};
};

struct Removal {
    std::string state;
    std::int64_t step{0};  // 0 when the floor already reaches the cap
};

struct PendingQuotient {
    std::string state;
    Rational quotient;
};

/// Record of a highest-quotient run. `frontier` holds the next quotient of
/// every state still in the process once the house is full, best first.
struct QuotientTrace {
    std::int64_t floor_seats{0};
    std::vector<QuotientStep> steps;
    std::vector<Removal> removals;
    std::vector<PendingQuotient> frontier;
};

struct SequentialResult {
    Allocation allocation;
    QuotientTrace trace;
};

/// Stage 0 grants every state the seats it holds at any divisor; the rest go
/// one at a time to the largest population/signpost quotient. A state that
/// reaches the cap leaves the process. Equal quotients are taken in name order.
/// Throws TieError when the final seat is contested and the policy is fail.
SequentialResult sequential_allocate(std::span<const MemberState> states, const ApportionmentParams& params,
                                     const TiePolicy& policy = TiePolicy::fail());

/// A tie exists iff the quotient that won the last seat equals the best
/// losing quotient.
std::optional<TieReport> detect_tie(const QuotientTrace& trace, std::int64_t house_size);

}  // namespace apportion

#endif  // APPORTION_SEQUENTIAL_HPP_
