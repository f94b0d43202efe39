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

#include "apportion/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "apportion/sequential.hpp"

namespace apportion {

using nlohmann::json;

Method parse_method(std::string_view text) {
    if (text == "divisor") return Method::Divisor;
    if (text == "sequential") return Method::Sequential;
    if (text == "both") return Method::Both;
    throw std::invalid_argument("unknown method '" + std::string{text} + "'");
}

Format parse_format(std::string_view text) {
    if (text == "table") return Format::Table;
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + std::string{text} + "'");
}

namespace {

    const char* method_name(Method m) {
        switch (m) {
            case Method::Divisor: return "divisor";
            case Method::Sequential: return "sequential";
            case Method::Both: return "both";
        }
        return "both";
    }

    std::string describe_seats(const std::vector<std::int64_t>& seats) {
        std::string out;
        for (auto s : seats) out += (out.empty() ? "" : " ") + std::to_string(s);
        return out;
    }

    Allocation allocate_with(const ScenarioConfig& config, const ApportionmentParams& params, Method method) {
        if (const auto* fixed = std::get_if<FixedDivisor>(&config.target)) {
            return evaluate_at_divisor(config.dataset.states, params, fixed->value);
        }
        switch (method) {
            case Method::Divisor: return solve(config.dataset.states, params, config.tie_policy);
            case Method::Sequential:
                return sequential_allocate(config.dataset.states, params, config.tie_policy).allocation;
            case Method::Both: {
                Allocation primary = solve(config.dataset.states, params, config.tie_policy);
                Allocation check = sequential_allocate(config.dataset.states, params, config.tie_policy).allocation;
                if (primary.seat_vector() != check.seat_vector()) {
                    throw std::logic_error("divisor and sequential methods disagree: [" +
                                           describe_seats(primary.seat_vector()) + "] vs [" +
                                           describe_seats(check.seat_vector()) + "]");
                }
                return primary;
            }
        }
        return {};
    }

    std::string target_label(const Target& target) {
        if (const auto* fixed = std::get_if<FixedDivisor>(&target)) return "divisor " + fixed->value.decimal(1, true);
        return "house " + std::to_string(std::get<FixedHouse>(target).seats);
    }

    std::string pad_left(const std::string& s, std::size_t width) {
        return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
    }

    std::string pad_right(const std::string& s, std::size_t width) {
        return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
    }

    std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out.push_back('"');
            out.push_back(c);
        }
        return out + "\"";
    }

    std::string join(const std::vector<std::string>& items, const char* sep) {
        std::string out;
        for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
        return out;
    }

    std::string interval_label(const DivisorInterval& interval) {
        if (interval.is_tie()) return "TIE at " + interval.lo().decimal(1, true);
        if (interval.is_point()) return "fixed at " + interval.lo().decimal(1, true);
        return "(" + interval.lo().decimal(1, true) + ", " +
               (interval.hi() ? interval.hi()->decimal(1, true) : std::string{"inf"}) + ")";
    }

    json interval_json(const DivisorInterval& interval) {
        json out;
        out["tie"] = interval.is_tie();
        out["lo"] = rational_json(interval.lo());
        out["lo_open"] = interval.lo_open();
        out["hi"] = interval.hi() ? rational_json(*interval.hi()) : json(nullptr);
        out["hi_open"] = interval.hi_open();
        return out;
    }

    json allocation_json(const Allocation& a, const std::map<std::string, std::int64_t>& status_quo) {
        json entries = json::array();
        for (const auto& e : a.entries) {
            json row;
            row["name"] = e.name;
            row["population"] = e.population;
            row["seats"] = e.seats;
            row["share"] = rational_json(e.share);
            row["ratio_before"] = rational_json(e.ratio_before);
            row["ratio_after"] = e.ratio_after ? rational_json(*e.ratio_after) : json(nullptr);
            row["capped"] = e.capped;
            auto it = status_quo.find(e.name);
            row["now_seats"] = it == status_quo.end() ? json(nullptr) : json(it->second);
            entries.push_back(std::move(row));
        }
        json out;
        out["entries"] = std::move(entries);
        out["total_seats"] = a.total_seats;
        out["divisor"] = rational_json(a.divisor);
        out["divisor_interval"] = interval_json(a.divisor_interval);
        out["resolved_tie"] = a.resolved_tie ? tie_json(*a.resolved_tie) : json(nullptr);
        return out;
    }

    json pairs_json(const std::vector<StatePair>& pairs) {
        json out = json::array();
        for (const auto& p : pairs) out.push_back({{"smaller", p.smaller}, {"larger", p.larger}});
        return out;
    }

}  // namespace

Report run_scenario(const ScenarioConfig& config) {
    const auto& states = config.dataset.states;
    if (states.empty()) throw std::invalid_argument("dataset has no states");

    Report report;
    report.source_label = config.dataset.source_label;
    report.snapshot_date = config.dataset.snapshot_date;
    report.status_quo = config.dataset.status_quo_seats;
    report.target = config.target;
    report.method = config.method;
    report.tie_policy = config.tie_policy;

    ApportionmentParams params = config.params;
    if (const auto* house = std::get_if<FixedHouse>(&config.target)) params.house_size = house->seats;
    const auto n = static_cast<std::int64_t>(states.size());

    if (config.scheme) {
        if (const auto* a = std::get_if<SchemeA>(&*config.scheme)) {
            std::int64_t m = scheme_a_minimum(n, SchemeAConfig{a->cap_fraction, params.house_size});
            params.base = scheme_a_base(states, m, a->variant, params);
            params.rounding = RoundingRule::Up;
            report.scheme_minimum = m;
            report.scheme_label = "A (cap " + a->cap_fraction.str() + ", minimum " + std::to_string(m) + ")";
        } else {
            params.base = scheme_b_base(n);
            report.scheme_label = "B (base 135/" + std::to_string(n) + ")";
        }
    }
    report.params = params;
    report.allocation = allocate_with(config, params, config.method);
    if (config.check_dp) report.dp = dp_report(report.allocation);

    if (config.accession) {
        ScenarioOptions options;
        options.remove = config.accession->remove;
        options.baseline_target = config.target;
        options.variant_target = config.accession->variant_target.value_or(config.target);
        options.tie_policy = config.tie_policy;
        report.delta = accession_scenario(states, config.accession->acceding, params, options);
    }
    return report;
}

json rational_json(const Rational& r) {
    return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.decimal(6)}};
}

json tie_json(const TieReport& tie) {
    return {{"tied_states", tie.tied_states},
            {"boundary_divisor", rational_json(tie.boundary_divisor)},
            {"seats_contested", tie.seats_contested}};
}

json report_json(const Report& report) {
    json out;
    out["source"] = {{"label", report.source_label}, {"snapshot", report.snapshot_date}};
    json params;
    params["base"] = rational_json(report.params.base);
    params["max"] = report.params.max_cap;
    params["rounding"] = to_string(report.params.rounding);
    if (const auto* fixed = std::get_if<FixedDivisor>(&report.target)) {
        params["house"] = nullptr;
        params["divisor"] = rational_json(fixed->value);
    } else {
        params["house"] = std::get<FixedHouse>(report.target).seats;
        params["divisor"] = nullptr;
    }
    out["params"] = std::move(params);
    out["method"] = method_name(report.method);
    out["tie_policy"] = report.tie_policy.str();
    out["scheme"] = report.scheme_label.empty() ? json(nullptr) : json(report.scheme_label);
    out["scheme_minimum"] = report.scheme_minimum ? json(*report.scheme_minimum) : json(nullptr);
    out["allocation"] = allocation_json(report.allocation, report.status_quo);

    if (report.dp) {
        out["dp_report"] = {{"satisfies_revised_dp", report.dp->satisfies_revised_dp},
                            {"condition1_violations", pairs_json(report.dp->condition1_violations)},
                            {"pre_rounding_violations", pairs_json(report.dp->pre_rounding_violations)},
                            {"post_rounding_violations", report.dp->post_rounding_violations}};
    } else {
        out["dp_report"] = nullptr;
    }

    if (report.delta) {
        json changes = json::array();
        for (const auto& c : report.delta->changes) {
            if (c.before && c.after && c.delta() == 0) continue;
            changes.push_back({{"state", c.state},
                               {"before", c.before ? json(*c.before) : json(nullptr)},
                               {"after", c.after ? json(*c.after) : json(nullptr)},
                               {"delta", c.delta()}});
        }
        out["delta"] = {{"changes", std::move(changes)},
                        {"joined", report.delta->joined},
                        {"removed", report.delta->removed},
                        {"variant", allocation_json(report.delta->variant, report.status_quo)}};
    } else {
        out["delta"] = nullptr;
    }
    return out;
}

std::string render(const Report& report, Format format) {
    const Allocation& a = report.allocation;
    auto now_of = [&](const std::string& name) -> std::optional<std::int64_t> {
        auto it = report.status_quo.find(name);
        if (it == report.status_quo.end()) return std::nullopt;
        return it->second;
    };
    std::int64_t population_total = 0;
    for (const auto& e : a.entries) population_total += e.population;

    if (format == Format::Json) return report_json(report).dump(2) + "\n";

    std::ostringstream out;
    if (format == Format::Csv) {
        out << "rank,name,population,seats,now_seats,share,ratio_before,ratio_after\n";
        std::size_t rank = 0;
        for (const auto& e : a.entries) {
            auto now = now_of(e.name);
            out << ++rank << ',' << csv_field(e.name) << ',' << e.population << ',' << e.seats << ','
                << (now ? std::to_string(*now) : "") << ',' << e.share.str() << ',' << e.ratio_before.decimal(1) << ','
                << (e.ratio_after ? e.ratio_after->decimal(1) : "") << '\n';
        }
        out << ",Total," << population_total << ',' << a.total_seats << ",,,,\n";
        return out.str();
    }

    // Table
    const bool with_now = !report.status_quo.empty();
    std::vector<std::string> flagged = report.dp ? report.dp->post_rounding_violations : std::vector<std::string>{};
    if (!report.source_label.empty()) {
        out << "Source: " << report.source_label;
        if (!report.snapshot_date.empty()) out << " [" << report.snapshot_date << "]";
        out << "\n";
    }
    out << "Parameters: base " << report.params.base.str() << ", max " << report.params.max_cap << ", rounding "
        << to_string(report.params.rounding) << ", " << target_label(report.target) << "\n";
    if (!report.scheme_label.empty()) out << "Scheme: " << report.scheme_label << "\n";
    out << "Divisor interval: " << interval_label(a.divisor_interval) << "; ratios at divisor "
        << a.divisor.decimal(1, true) << "\n";
    if (a.resolved_tie) {
        out << "Tie resolved by policy " << report.tie_policy.str() << " among " << join(a.resolved_tie->tied_states, ", ")
            << "\n";
    }
    out << "\n";

    std::size_t name_width = 12;
    for (const auto& e : a.entries) name_width = std::max(name_width, e.name.size());
    out << pad_left("#", 3) << "  " << pad_right("Member State", name_width) << pad_left("Population", 14)
        << pad_left("Seats", 7);
    if (with_now) out << pad_left("Now", 6);
    out << pad_left("Popn/seats before", 20) << pad_left("Popn/seats after", 19) << "\n";
    std::size_t rank = 0;
    for (const auto& e : a.entries) {
        out << pad_left(std::to_string(++rank), 3) << "  " << pad_right(e.name, name_width)
            << pad_left(Rational{e.population}.decimal(0, true), 14) << pad_left(std::to_string(e.seats), 7);
        if (with_now) {
            auto now = now_of(e.name);
            out << pad_left(now ? std::to_string(*now) : "--", 6);
        }
        out << pad_left(e.ratio_before.decimal(1, true), 20)
            << pad_left(e.ratio_after ? e.ratio_after->decimal(1, true) : "--", 19);
        if (std::find(flagged.begin(), flagged.end(), e.name) != flagged.end()) out << " *";
        if (e.capped) out << " (cap)";
        out << "\n";
    }
    out << pad_left("", 3) << "  " << pad_right("Total", name_width)
        << pad_left(Rational{population_total}.decimal(0, true), 14) << pad_left(std::to_string(a.total_seats), 7);
    if (with_now) {
        std::int64_t now_total = 0;
        for (const auto& [name, seats] : report.status_quo) now_total += seats;
        out << pad_left(std::to_string(now_total), 6);
    }
    out << "\n";

    if (report.dp) {
        out << "\nDegressive proportionality: "
            << (report.dp->satisfies_revised_dp ? "satisfied before rounding" : "VIOLATED before rounding") << "\n";
        for (const auto& p : report.dp->condition1_violations) {
            out << "  condition 1: " << p.smaller << " has more seats than " << p.larger << "\n";
        }
        for (const auto& p : report.dp->pre_rounding_violations) {
            out << "  condition 2 (before rounding): " << p.larger << " does not exceed " << p.smaller << "\n";
        }
        out << "  after rounding (*): "
            << (flagged.empty() ? std::string{"none"} : join(flagged, ", ")) << "\n";
    }

    if (report.delta) {
        out << "\nScenario: " << report.delta->variant.entries.size() << " states, total "
            << report.delta->variant.total_seats << ", divisor interval "
            << interval_label(report.delta->variant.divisor_interval) << "\n";
        for (const auto& c : report.delta->changes) {
            out << "  " << pad_right(c.state, name_width) << pad_left(c.before ? std::to_string(*c.before) : "--", 5)
                << " -> " << pad_left(c.after ? std::to_string(*c.after) : "--", 4);
            if (c.delta() != 0) out << "  (" << (c.delta() > 0 ? "+" : "") << c.delta() << ")";
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace apportion
