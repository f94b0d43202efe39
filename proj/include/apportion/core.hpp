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

#ifndef APPORTION_CORE_HPP_
#define APPORTION_CORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "apportion/rational.hpp"

namespace apportion {

/// Cap value large enough that it never binds for any realistic house size.
inline constexpr std::int64_t kUncapped = std::int64_t{1} << 40;

struct MemberState {
    std::string name;
    std::int64_t population{0};

    friend bool operator==(const MemberState&, const MemberState&) = default;
};

enum class RoundingRule { Up, Standard, Down };

std::string to_string(RoundingRule rule);
RoundingRule parse_rounding(std::string_view text);

struct ApportionmentParams {
    Rational base{5};
    std::int64_t max_cap{96};
    std::int64_t house_size{751};
    RoundingRule rounding{RoundingRule::Up};

    /// Throws std::invalid_argument unless base >= 0, base < max_cap and house_size >= 1.
    void validate() const;
};

/// A (base, rounding) system; two specs are equivalent when they produce
/// identical allocations wherever roundings are well defined.
struct RoundingSpec {
    Rational base;
    RoundingRule rule{RoundingRule::Up};

    friend bool operator==(const RoundingSpec&, const RoundingSpec&) = default;
};

struct EquivalenceClass {
    std::vector<RoundingSpec> members;
    std::vector<std::string> notes;
};

struct RoundedShare {
    std::int64_t seats{0};
    bool well_defined{true};
};

struct HouseRange {
    std::int64_t lo{0};
    std::int64_t hi{0};

    [[nodiscard]] bool contains(std::int64_t house) const noexcept { return house >= lo && house <= hi; }
};

struct TieReport {
    std::vector<std::string> tied_states;  // sorted by name
    Rational boundary_divisor;
    std::int64_t seats_contested{0};
};

/// The set of divisors realizing a target total, or the tie marker when that
/// set is empty. Endpoints are critical divisors where some rounding is not
/// well defined, so both ends are reported open.
class DivisorInterval {
  public:
    static DivisorInterval between(Rational lo, std::optional<Rational> hi);
    static DivisorInterval point(Rational d);
    static DivisorInterval tie(Rational boundary);

    [[nodiscard]] bool is_tie() const noexcept { return tie_; }
    [[nodiscard]] bool is_point() const noexcept { return point_; }
    [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
    [[nodiscard]] const std::optional<Rational>& hi() const noexcept { return hi_; }
    [[nodiscard]] bool lo_open() const noexcept { return !point_; }
    [[nodiscard]] bool hi_open() const noexcept { return !point_; }

    /// Membership; open ends exclude their endpoint.
    [[nodiscard]] bool contains(const Rational& d) const;

    /// Display divisor: the multiple of the largest power of ten strictly
    /// inside, nearest the midpoint (the simplest rational if no integer
    /// fits). An unbounded interval is searched up to twice its lower end.
    [[nodiscard]] Rational reference() const;

  private:
    Rational lo_;
    std::optional<Rational> hi_;
    bool tie_{false};
    bool point_{false};
};

struct AllocationEntry {
    std::string name;
    std::int64_t population{0};
    std::int64_t seats{0};
    Rational share;                         // min{b + p/d, M}
    Rational ratio_before;                  // population / share
    std::optional<Rational> ratio_after;    // population / seats, absent for zero seats
    bool capped{false};
};

struct Allocation {
    std::vector<AllocationEntry> entries;
    DivisorInterval divisor_interval = DivisorInterval::point(Rational{1});
    Rational divisor{1};  // the divisor shares and ratios were evaluated at
    std::int64_t total_seats{0};
    std::optional<TieReport> resolved_tie;  // set when a tie policy decided contested seats

    [[nodiscard]] std::vector<std::int64_t> seat_vector() const;
    [[nodiscard]] const AllocationEntry* find(std::string_view name) const;
};

struct RatioPair {
    Rational before;
    Rational after;
};

// Errors. Each maps onto a structured code at the CLI and service edges.

class ApportionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char* code() const noexcept = 0;
};

class InfeasibleError : public ApportionError {
  public:
    InfeasibleError(std::string what, HouseRange range) : ApportionError(std::move(what)), range_{range} {}
    [[nodiscard]] const char* code() const noexcept override { return "INFEASIBLE"; }
    [[nodiscard]] const HouseRange& range() const noexcept { return range_; }

  private:
    HouseRange range_;
};

class TieError : public ApportionError {
  public:
    explicit TieError(TieReport report);
    [[nodiscard]] const char* code() const noexcept override { return "TIE"; }
    [[nodiscard]] const TieReport& report() const noexcept { return report_; }

  private:
    TieReport report_;
};

class ParseError : public ApportionError {
  public:
    ParseError(std::string what, std::size_t line)
        : ApportionError("line " + std::to_string(line) + ": " + what), line_{line} {}
    [[nodiscard]] const char* code() const noexcept override { return "PARSE"; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Operations

/// min{base + population/divisor, max_cap}, exact.
Rational seat_share(std::int64_t population, const Rational& base, const Rational& divisor, std::int64_t max_cap);

/// Rounds a non-negative share. STANDARD resolves halves upwards; `well_defined`
/// is false whenever the rule's boundary is hit.
RoundedShare round_share(const Rational& x, RoundingRule rule);

/// Fractional position of the rounding boundary above each integer:
/// 0 for UP, 1/2 for STANDARD, 1 for DOWN.
Rational rounding_offset(RoundingRule rule);

/// Divisor-space threshold for winning seat `seats_held + 1`; the priority
/// quotient of a state is population / signpost.
Rational signpost(std::int64_t seats_held, const Rational& base, RoundingRule rule);

/// Seats an arbitrarily small positive population receives (before capping).
std::int64_t minimum_seats(const Rational& base, RoundingRule rule);

EquivalenceClass equivalent_specs(const Rational& base, RoundingRule rule);

HouseRange feasible_house_range(std::int64_t n, const ApportionmentParams& params);

std::vector<RatioPair> ratios(const Allocation& allocation);

/// Throws std::invalid_argument on empty names, non-positive populations or duplicates.
void validate_states(std::span<const MemberState> states);

}  // namespace apportion

#endif  // APPORTION_CORE_HPP_
