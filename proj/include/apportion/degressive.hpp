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

#ifndef APPORTION_DEGRESSIVE_HPP_
#define APPORTION_DEGRESSIVE_HPP_

#include <span>
#include <string>
#include <vector>

#include "apportion/core.hpp"

namespace apportion {

struct SeatedState {
    std::string name;
    std::int64_t population{0};
    std::int64_t seats{0};
};

struct SharedState {
    std::string name;
    std::int64_t population{0};
    Rational share;
};

/// Ordered pair of states, smaller population first.
struct StatePair {
    std::string smaller;
    std::string larger;

    friend bool operator==(const StatePair&, const StatePair&) = default;
};

struct DpReport {
    std::vector<StatePair> condition1_violations;
    std::vector<StatePair> pre_rounding_violations;
    std::vector<std::string> post_rounding_violations;
    bool satisfies_revised_dp{true};
};

// All lists come back sorted by population descending (larger member first).
// States of equal population never violate one another.

/// Pairs where the smaller state holds strictly more seats.
std::vector<StatePair> check_condition1(std::span<const SeatedState> entries);

/// Pairs where the larger state's population/share is not strictly larger.
std::vector<StatePair> check_pre_rounding(std::span<const SharedState> entries);

/// States whose population/seats falls below that of some smaller state.
/// Diagnostic only.
std::vector<std::string> check_post_rounding(std::span<const SeatedState> entries);

DpReport dp_report(const Allocation& allocation);

}  // namespace apportion

#endif  // APPORTION_DEGRESSIVE_HPP_
