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


#include "apportion/rational.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

namespace {

using apportion::Rational;

TEST(Rational, NormalizesSignAndTerms) {
    Rational r{6, -4};
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, -7), Rational{0});
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
    EXPECT_EQ(Rational::parse("7"), Rational{7});
    EXPECT_EQ(Rational::parse("-3"), Rational{-3});
    EXPECT_EQ(Rational::parse("11/2"), Rational(11, 2));
    EXPECT_EQ(Rational::parse("5.5"), Rational(11, 2));
    EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
    EXPECT_EQ(Rational::parse("819000"), Rational{819000});
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "5 seats"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, FloorAndCeilRoundTowardInfinities) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational{5}.floor(), 5);
    EXPECT_EQ(Rational{5}.ceil(), 5);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
    EXPECT_THROW(Rational{1} / Rational{0}, std::domain_error);
}

TEST(Rational, ComparisonIsExactNearTies) {
    // 81802257/819000 vs 81802257/819001 differ far beyond double's resolution of the sum.
    Rational a = Rational{5} + Rational{81802257} / Rational{819000};
    Rational b = Rational{5} + Rational{81802257} / Rational{819001};
    EXPECT_GT(a, b);
    EXPECT_EQ(Rational(412970, 1) / Rational(2), Rational(206485));
    constexpr std::int64_t big = std::numeric_limits<std::int64_t>::max() / 3;
    EXPECT_LT(Rational(big, big - 1), Rational(big - 1, big - 2));
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
    constexpr std::int64_t big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(Rational{big} + Rational{1}, std::overflow_error);
    EXPECT_THROW(Rational(1, big) * Rational(1, big - 1), std::overflow_error);
}

TEST(Rational, StrAndDecimal) {
    EXPECT_EQ(Rational(11, 2).str(), "11/2");
    EXPECT_EQ(Rational{-4}.str(), "-4");
    EXPECT_EQ(Rational(81802257, 96).decimal(1, true), "852,106.8");
    EXPECT_EQ(Rational(1, 3).decimal(4), "0.3333");
    EXPECT_EQ(Rational(-1, 3).decimal(2), "-0.33");
    EXPECT_EQ(Rational(1234567).decimal(0, true), "1,234,567");
    // Exact halves go to the even neighbour.
    EXPECT_EQ(Rational(5, 4).decimal(1), "1.2");
    EXPECT_EQ(Rational(7, 4).decimal(1), "1.8");
    EXPECT_EQ(Rational(5, 2).decimal(0), "2");
}

TEST(Rational, RandomFieldIdentities) {
    std::mt19937_64 rng{7};
    std::uniform_int_distribution<std::int64_t> num{-1'000'000, 1'000'000};
    std::uniform_int_distribution<std::int64_t> den{1, 1'000'000};
    for (int i = 0; i < 2000; ++i) {
        Rational a{num(rng), den(rng)};
        Rational b{num(rng), den(rng)};
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ(a * b / b, a);
        }
        EXPECT_EQ(a < b, apportion::wide_int{a.num()} * b.den() < apportion::wide_int{b.num()} * a.den());
        EXPECT_LE(a.floor(), a);
        EXPECT_GE(Rational{a.ceil()}, a);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}

}  // namespace
