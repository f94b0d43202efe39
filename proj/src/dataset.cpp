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

#include "apportion/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace apportion {

namespace {

    std::string_view trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    }

    std::string lower(std::string_view s) {
        std::string out{s};
        std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
        return out;
    }

    // Splits one CSV record; double quotes group fields and "" escapes a quote.
    std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
        std::vector<std::string> fields(1);
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back().push_back('"');
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    fields.back().push_back(c);
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.emplace_back();
            } else {
                fields.back().push_back(c);
            }
        }
        if (quoted) throw ParseError("unterminated quote", line_no);
        for (auto& f : fields) f = std::string{trim(f)};
        return fields;
    }

    std::int64_t parse_count(std::string_view field, std::string_view what, std::size_t line_no) {
        std::string digits;
        for (char c : field) {
            if (c == ',' || c == '_' || c == '\'' || c == ' ') continue;
            digits.push_back(c);
        }
        std::int64_t value{0};
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ParseError("malformed " + std::string{what} + " '" + std::string{field} + "'", line_no);
        }
        return value;
    }

    std::string quote_if_needed(const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out.push_back('"');
            out.push_back(c);
        }
        return out + "\"";
    }

}  // namespace

PopulationDataset parse_population_file(std::string_view bytes) {
    if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);

    PopulationDataset out;
    std::set<std::string> seen;
    bool header_seen = false;
    bool has_now_column = false;
    std::size_t line_no = 0;

    while (!bytes.empty()) {
        std::size_t eol = bytes.find('\n');
        std::string_view raw = bytes.substr(0, eol);
        bytes = eol == std::string_view::npos ? std::string_view{} : bytes.substr(eol + 1);
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '#') {
            std::string_view meta = trim(line.substr(1));
            if (meta.starts_with("source:")) out.source_label = std::string{trim(meta.substr(7))};
            if (meta.starts_with("snapshot:")) out.snapshot_date = std::string{trim(meta.substr(9))};
            continue;
        }

        auto fields = split_record(line, line_no);
        if (!header_seen) {
            if (fields.size() < 2 || fields.size() > 3 || lower(fields[0]) != "name" ||
                lower(fields[1]) != "population" || (fields.size() == 3 && lower(fields[2]) != "now_seats")) {
                throw ParseError("expected header 'name,population[,now_seats]'", line_no);
            }
            has_now_column = fields.size() == 3;
            header_seen = true;
            continue;
        }

        if (fields.size() < 2 || fields.size() > (has_now_column ? 3u : 2u)) {
            throw ParseError("expected " + std::string{has_now_column ? "2 or 3" : "2"} + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        const std::string& name = fields[0];
        if (name.empty()) throw ParseError("empty state name", line_no);
        if (!seen.insert(name).second) throw ParseError("duplicate state '" + name + "'", line_no);
        std::int64_t population = parse_count(fields[1], "population", line_no);
        if (population < 1) throw ParseError("population of '" + name + "' must be positive", line_no);
        out.states.push_back({name, population});
        if (fields.size() == 3 && !fields[2].empty()) {
            std::int64_t now = parse_count(fields[2], "now_seats", line_no);
            if (now < 0) throw ParseError("negative now_seats for '" + name + "'", line_no);
            out.status_quo_seats[name] = now;
        }
    }
    if (!header_seen) throw ParseError("empty population file", line_no);
    if (out.states.empty()) throw ParseError("no states in population file", line_no);
    return out;
}

std::string render_dataset_csv(const PopulationDataset& dataset) {
    std::ostringstream out;
    if (!dataset.source_label.empty()) out << "# source: " << dataset.source_label << "\n";
    if (!dataset.snapshot_date.empty()) out << "# snapshot: " << dataset.snapshot_date << "\n";
    bool with_now = !dataset.status_quo_seats.empty();
    out << (with_now ? "name,population,now_seats\n" : "name,population\n");
    for (const auto& s : dataset.states) {
        out << quote_if_needed(s.name) << ',' << s.population;
        if (with_now) {
            out << ',';
            if (auto it = dataset.status_quo_seats.find(s.name); it != dataset.status_quo_seats.end()) out << it->second;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

    struct PresetRow {
        const char* name;
        std::int64_t population;
        std::int64_t now;  // 0: no status-quo seats
    };

    // Eurostat figures as tabulated in 2011, in population order.
    constexpr PresetRow kEu27[] = {
        {"Germany", 81'802'257, 99},  {"France", 64'714'074, 74},     {"UK", 62'008'048, 73},
        {"Italy", 60'340'328, 73},    {"Spain", 45'989'016, 54},      {"Poland", 38'167'329, 51},
        {"Romania", 21'462'186, 33},  {"Netherlands", 16'574'989, 26}, {"Greece", 11'305'118, 22},
        {"Belgium", 10'839'905, 22},  {"Portugal", 10'637'713, 22},   {"Czech Rep.", 10'506'813, 22},
        {"Hungary", 10'014'324, 22},  {"Sweden", 9'340'682, 20},      {"Austria", 8'375'290, 19},
        {"Bulgaria", 7'563'710, 18},  {"Denmark", 5'534'738, 13},     {"Slovakia", 5'424'925, 13},
        {"Finland", 5'351'427, 13},   {"Ireland", 4'467'854, 12},     {"Lithuania", 3'329'039, 12},
        {"Latvia", 2'248'374, 9},     {"Slovenia", 2'046'976, 8},     {"Estonia", 1'340'127, 6},
        {"Cyprus", 803'147, 6},       {"Luxembourg", 502'066, 6},     {"Malta", 412'970, 6},
    };
    constexpr PresetRow kCroatia{"Croatia", 4'425'747, 0};
    constexpr PresetRow kIceland{"Iceland", 317'630, 0};

}  // namespace

const std::vector<std::string>& preset_ids() {
    static const std::vector<std::string> ids{"eu27", "eu28", "eu29"};
    return ids;
}

PopulationDataset preset(std::string_view id) {
    std::vector<PresetRow> rows(std::begin(kEu27), std::end(kEu27));
    if (id == "eu28" || id == "eu29") rows.push_back(kCroatia);
    if (id == "eu29") rows.push_back(kIceland);
    if (id != "eu27" && id != "eu28" && id != "eu29") throw std::invalid_argument("unknown preset '" + std::string{id} + "'");
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.population > b.population; });

    PopulationDataset out;
    out.source_label = "Eurostat, " + std::string{id} + " (" + std::to_string(rows.size()) + " states)";
    out.snapshot_date = "2011";
    for (const auto& r : rows) {
        out.states.push_back({r.name, r.population});
        if (r.now > 0) out.status_quo_seats[r.name] = r.now;
    }
    return out;
}

}  // namespace apportion
