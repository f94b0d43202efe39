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

#ifndef APPORTION_RATIONAL_HPP_
#define APPORTION_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace apportion {

__extension__ using wide_int = __int128;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Intermediate
/// products are formed in 128-bit arithmetic; a result that does not reduce
/// back into 64 bits throws std::overflow_error instead of wrapping.
/// Comparisons cross-multiply in 128 bits and never lose precision.
class Rational {
  public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_{value} {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    static Rational from_wide(wide_int num, wide_int den);

    /// Accepts "7", "-3", "11/2" and plain decimals such as "5.5" or "0.25".
    static Rational parse(std::string_view text);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool is_positive() const noexcept { return num_ > 0; }
    [[nodiscard]] bool is_negative() const noexcept { return num_ < 0; }

    [[nodiscard]] std::int64_t floor() const noexcept;
    [[nodiscard]] std::int64_t ceil() const noexcept;

    [[nodiscard]] double to_double() const noexcept;

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const;

    /// Fixed-point rendering at `places` decimals, ties to even, optionally
    /// with comma thousands separators.
    [[nodiscard]] std::string decimal(int places, bool group_thousands = false) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

  private:
    std::int64_t num_{0};
    std::int64_t den_{1};
};

std::string to_string(const Rational& r);

}  // namespace apportion

#endif  // APPORTION_RATIONAL_HPP_
