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

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace apportion {

namespace {

    wide_int wide_abs(wide_int v) { return v < 0 ? -v : v; }

    wide_int wide_gcd(wide_int a, wide_int b) {
        a = wide_abs(a);
        b = wide_abs(b);
        while (b != 0) {
            wide_int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    bool fits_int64(wide_int v) {
        return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
    }

    // floor(a / b) for b > 0
    wide_int floor_div(wide_int a, wide_int b) {
        wide_int q = a / b;
        if (a % b != 0 && a < 0) --q;
        return q;
    }

    std::string wide_to_string(wide_int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        v = wide_abs(v);
        std::string out;
        while (v > 0) {
            out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        if (neg) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

    std::int64_t parse_int(std::string_view text) {
        std::int64_t value{0};
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            throw std::invalid_argument("not a rational number: '" + std::string{text} + "'");
        }
        return value;
    }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide_int g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits_int64(num) || !fits_int64(den)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("not a rational number: '" + std::string{text} + "'");
        }
        bool neg = !whole.empty() && whole.front() == '-';
        std::int64_t int_part = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        wide_int magnitude = wide_abs(int_part) * static_cast<wide_int>(scale) + parse_int(frac);
        return from_wide(neg ? -magnitude : magnitude, scale);
    }
    return Rational{parse_int(text)};
}

std::int64_t Rational::floor() const noexcept {
    return static_cast<std::int64_t>(floor_div(num_, den_));
}

std::int64_t Rational::ceil() const noexcept {
    return static_cast<std::int64_t>(-floor_div(-static_cast<wide_int>(num_), den_));
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int places, bool group_thousands) const {
    places = std::clamp(places, 0, 9);
    wide_int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    wide_int magnitude = wide_abs(num_);
    wide_int scaled = magnitude * scale / den_;
    wide_int twice_rem = 2 * (magnitude * scale % den_);
    if (twice_rem > den_ || (twice_rem == den_ && scaled % 2 == 1)) ++scaled;
    std::string whole = wide_to_string(scaled / scale);
    if (group_thousands) {
        for (int pos = static_cast<int>(whole.size()) - 3; pos > 0; pos -= 3) whole.insert(static_cast<std::size_t>(pos), ",");
    }
    std::string out = (num_ < 0 && scaled != 0) ? "-" + whole : whole;
    if (places > 0) {
        std::string frac = wide_to_string(scaled % scale);
        out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
    }
    return out;
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<wide_int>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ + static_cast<wide_int>(rhs.num_) * den_,
                             static_cast<wide_int>(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ - static_cast<wide_int>(rhs.num_) * den_,
                             static_cast<wide_int>(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.num_, static_cast<wide_int>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_, static_cast<wide_int>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    wide_int l = static_cast<wide_int>(lhs.num_) * rhs.den_;
    wide_int r = static_cast<wide_int>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace apportion
