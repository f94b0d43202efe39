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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "apportion/divisor.hpp"
#include "eu_fixtures.hpp"
#include "random_instances.hpp"

namespace {

using apportion::Rational;
using apportion::SeatedState;
using apportion::SharedState;
using apportion::StatePair;

apportion::Allocation table1_allocation() {
    auto s = eu::eu27();
    return apportion::evaluate_at_divisor(s, eu::lisbon(), Rational{819000});
}

std::vector<SeatedState> seated(const apportion::Allocation& a) {
    std::vector<SeatedState> out;
    for (const auto& e : a.entries) out.push_back({e.name, e.population, e.seats});
    return out;
}

TEST(Condition1, Table1Clean) { EXPECT_TRUE(apportion::check_condition1(seated(table1_allocation())).empty()); }

TEST(Condition1, StatusQuoColumnClean) {
    std::vector<SeatedState> now;
    for (const auto& r : eu::table2()) {
        if (r.now > 0) now.push_back({r.name, r.population, r.now});
    }
    ASSERT_EQ(now.size(), 27U);
    EXPECT_TRUE(apportion::check_condition1(now).empty());
}

TEST(Condition1, ConstructedInversion) {
    std::vector<SeatedState> s{{"Small", 100, 3}, {"Large", 200, 2}};
    EXPECT_EQ(apportion::check_condition1(s), (std::vector<StatePair>{{"Small", "Large"}}));
}

TEST(Condition1, EqualPopulationsNeverViolate) {
    std::vector<SeatedState> s{{"A", 100, 3}, {"B", 100, 2}};
    EXPECT_TRUE(apportion::check_condition1(s).empty());
}

TEST(PreRounding, Table1Clean) {
    std::vector<SharedState> shares;
    for (const auto& e : table1_allocation().entries) shares.push_back({e.name, e.population, e.share});
    EXPECT_TRUE(apportion::check_pre_rounding(shares).empty());
}

TEST(PreRounding, EqualPopulationsEqualShares) {
    std::vector<SharedState> s{{"A", 100, Rational{5}}, {"B", 100, Rational{5}}};
    EXPECT_TRUE(apportion::check_pre_rounding(s).empty());
}

TEST(PreRounding, EqualRatiosViolate) {
    // proportional shares: the larger state's ratio is not strictly larger
    std::vector<SharedState> s{{"A", 100, Rational{1}}, {"B", 200, Rational{2}}};
    EXPECT_EQ(apportion::check_pre_rounding(s), (std::vector<StatePair>{{"A", "B"}}));
}

TEST(PostRounding, Table1FranceAndBelgium) {
    EXPECT_EQ(apportion::check_post_rounding(seated(table1_allocation())),
              (std::vector<std::string>{"France", "Belgium"}));
}

TEST(PostRounding, ProportionalAllocationClean) {
    std::vector<SeatedState> s{{"A", 5000, 5}, {"B", 3000, 3}, {"C", 2000, 2}};
    EXPECT_TRUE(apportion::check_post_rounding(s).empty());
}

TEST(PostRounding, ZeroSeatsRejected) {
    std::vector<SeatedState> s{{"A", 5000, 5}, {"B", 3000, 0}};
    EXPECT_THROW(apportion::check_post_rounding(s), std::invalid_argument);
}

TEST(DpReport, Table1) {
    auto report = apportion::dp_report(table1_allocation());
    EXPECT_TRUE(report.satisfies_revised_dp);
    EXPECT_TRUE(report.condition1_violations.empty());
    EXPECT_TRUE(report.pre_rounding_violations.empty());
    EXPECT_EQ(report.post_rounding_violations, (std::vector<std::string>{"France", "Belgium"}));
}

TEST(DpReport, TwentyEightStates) {
    auto s = eu::union_of(28);
    auto report = apportion::dp_report(apportion::evaluate_at_divisor(s, eu::lisbon(), Rational{835000}));
    EXPECT_TRUE(report.satisfies_revised_dp);
}

TEST(DpReport, ConstructedInversionFails) {
    apportion::Allocation a;
    a.entries.push_back(apportion::make_entry({"Large", 200}, eu::lisbon(), Rational{100}, 2));
    a.entries.push_back(apportion::make_entry({"Small", 100}, eu::lisbon(), Rational{100}, 3));
    auto report = apportion::dp_report(a);
    EXPECT_FALSE(report.satisfies_revised_dp);
    EXPECT_EQ(report.condition1_violations.size(), 1U);
}

// Naive all-pairs scan in input order, for comparison.
std::vector<std::string> post_rounding_oracle(const std::vector<SeatedState>& s) {
    std::vector<std::string> flagged;
    for (const auto& i : s) {
        for (const auto& j : s) {
            if (j.population < i.population &&
                Rational{j.population, j.seats} > Rational{i.population, i.seats}) {
                flagged.push_back(i.name);
                break;
            }
        }
    }
    return flagged;
}

TEST(DegressiveProperties, PostRoundingMatchesPairwiseOracle) {
    std::mt19937_64 rng{21};
    for (int trial = 0; trial < 500; ++trial) {
        auto inst = testing_support::random_instance(rng);
        apportion::Allocation a;
        try {
            a = apportion::solve(inst.states, inst.params);
        } catch (const apportion::TieError&) {
            continue;
        }
        auto s = seated(a);
        if (std::any_of(s.begin(), s.end(), [](const auto& x) { return x.seats < 1; })) continue;
        auto got = apportion::check_post_rounding(s);
        auto expected = post_rounding_oracle(s);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(got, expected) << "trial " << trial;
    }
}

TEST(DegressiveProperties, SolverOutputsSatisfyRevisedDefinition) {
    std::mt19937_64 rng{22};
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto inst = testing_support::random_instance(rng);
        if (!inst.params.base.is_positive()) continue;
        try {
            auto report = apportion::dp_report(apportion::solve(inst.states, inst.params));
            EXPECT_TRUE(report.condition1_violations.empty()) << "trial " << trial;
            EXPECT_TRUE(report.pre_rounding_violations.empty()) << "trial " << trial;
            ++checked;
        } catch (const apportion::TieError&) {
        }
    }
    EXPECT_GT(checked, 800);
}

TEST(DegressiveProperties, ListsSortedByPopulationDescending) {
    std::vector<SeatedState> s{{"C", 300, 1}, {"A", 100, 3}, {"B", 200, 2}, {"D", 400, 1}};
    auto pairs = apportion::check_condition1(s);
    ASSERT_EQ(pairs.size(), 5U);
    EXPECT_EQ(pairs.front(), (StatePair{"B", "D"}));
    EXPECT_EQ(pairs.back(), (StatePair{"A", "B"}));
    std::vector<SeatedState> t{{"A", 100, 1}, {"C", 300, 2}, {"E", 500, 5}, {"B", 200, 2}, {"D", 400, 4}};
    EXPECT_EQ(apportion::check_post_rounding(t), (std::vector<std::string>{"E", "D"}));
}

}  // namespace
