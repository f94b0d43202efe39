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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "apportion/dataset.hpp"
#include "apportion/report.hpp"
#include "apportion/service.hpp"

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitTie = 3;
constexpr int kExitParse = 4;

std::string read_file(const std::string& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

apportion::PopulationDataset load_dataset(const std::string& path) {
    apportion::PopulationDataset d = apportion::parse_population_file(read_file(path));
    if (d.source_label.empty()) d.source_label = std::filesystem::path{path}.filename().string();
    return d;
}

int report_failure(const std::exception& e, bool json_output) {
    auto response = apportion::error_response(e);
    if (json_output) {
        std::cout << response.body.dump(2) << "\n";
    } else {
        std::cerr << "error [" << response.body["error"]["code"].get<std::string>() << "]: " << e.what() << "\n";
        if (const auto* tie = dynamic_cast<const apportion::TieError*>(&e)) {
            std::cerr << "rerun with --tie-policy lexicographic or --tie-policy seed=<n> to cast lots among:";
            for (const auto& name : tie->report().tied_states) std::cerr << " " << name;
            std::cerr << "\n";
        }
    }
    if (dynamic_cast<const apportion::InfeasibleError*>(&e)) return kExitInfeasible;
    if (dynamic_cast<const apportion::TieError*>(&e)) return kExitTie;
    if (response.status == 500) return 1;
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact base+prop seat apportionment"};
    app.require_subcommand(1);

    // allocate
    auto* allocate = app.add_subcommand("allocate", "Allocate seats for a population dataset");
    std::string data_path;
    std::string preset_id;
    std::string base_text = "5";
    std::int64_t max_cap = 96;
    std::int64_t house = 751;
    std::string divisor_text;
    std::string rounding = "up";
    std::string method = "both";
    bool check_dp = false;
    std::string format = "table";
    std::string tie_policy = "fail";
    std::string scheme;
    bool allow_general_base = false;
    std::string accede_path;
    std::vector<std::string> remove_names;
    std::int64_t variant_house = 0;
    std::string variant_divisor_text;

    auto* data_opt = allocate->add_option("--data", data_path, "CSV file: name,population[,now_seats]");
    auto* preset_opt = allocate->add_option("--preset", preset_id, "Bundled dataset: eu27, eu28, eu29");
    data_opt->excludes(preset_opt);
    allocate->add_option("--base", base_text, "Base seats per state (e.g. 5, 11/2, 5.5)")->capture_default_str();
    allocate->add_option("--max", max_cap, "Maximum seats per state")->capture_default_str();
    auto* house_opt = allocate->add_option("--house", house, "House size")->capture_default_str();
    auto* divisor_opt = allocate->add_option("--divisor", divisor_text, "Fixed divisor (house size becomes emergent)");
    divisor_opt->excludes(house_opt);
    allocate->add_option("--rounding", rounding, "up | standard | down")
        ->check(CLI::IsMember({"up", "standard", "down"}))
        ->capture_default_str();
    allocate->add_option("--method", method, "divisor | sequential | both (both must agree)")
        ->check(CLI::IsMember({"divisor", "sequential", "both"}))
        ->capture_default_str();
    allocate->add_flag("--check-dp", check_dp, "Report degressive proportionality findings");
    allocate->add_option("--format", format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    allocate->add_option("--tie-policy", tie_policy, "fail | lexicographic | seed=<n>")->capture_default_str();
    allocate->add_option("--scheme", scheme, "a[:FRACTION[:smallest]] or b");
    allocate->add_flag("--allow-general-base", allow_general_base, "Accept bases that are not whole or half seats");
    allocate->add_option("--accede", accede_path, "CSV of acceding states for a what-if scenario");
    allocate->add_option("--remove", remove_names, "States dropped from the scenario variant");
    auto* vh = allocate->add_option("--variant-house", variant_house, "House size for the scenario variant");
    auto* vd = allocate->add_option("--variant-divisor", variant_divisor_text, "Fixed divisor for the scenario variant");
    vh->excludes(vd);

    // serve
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP/JSON service");
    std::string bind_address = "127.0.0.1:8080";
    serve_cmd->add_option("--bind", bind_address, "host:port")->capture_default_str();

    // presets
    auto* presets_cmd = app.add_subcommand("presets", "List or export the bundled datasets");
    std::string show_id;
    std::string export_dir;
    presets_cmd->add_option("--show", show_id, "Print one preset as CSV");
    presets_cmd->add_option("--export", export_dir, "Write every preset as <dir>/<id>.csv");

    CLI11_PARSE(app, argc, argv);

    if (serve_cmd->parsed()) return apportion::serve(bind_address);

    if (presets_cmd->parsed()) {
        try {
            if (!show_id.empty()) {
                std::cout << apportion::render_dataset_csv(apportion::preset(show_id));
                return 0;
            }
            for (const auto& id : apportion::preset_ids()) {
                auto d = apportion::preset(id);
                if (!export_dir.empty()) {
                    std::ofstream out{std::filesystem::path{export_dir} / (id + ".csv"), std::ios::binary};
                    out << apportion::render_dataset_csv(d);
                }
                std::cout << id << "\t" << d.states.size() << " states\t" << d.source_label << "\n";
            }
            return 0;
        } catch (const std::exception& e) {
            return report_failure(e, false);
        }
    }

    const bool json_output = format == "json";
    try {
        apportion::ScenarioConfig config;
        if (!data_path.empty()) {
            config.dataset = load_dataset(data_path);
        } else {
            config.dataset = apportion::preset(preset_id.empty() ? "eu27" : preset_id);
        }
        config.params.base = apportion::Rational::parse(base_text);
        config.params.max_cap = max_cap;
        config.params.house_size = house;
        config.params.rounding = apportion::parse_rounding(rounding);
        if (!divisor_text.empty()) {
            config.target = apportion::FixedDivisor{apportion::Rational::parse(divisor_text)};
        } else {
            config.target = apportion::FixedHouse{house};
        }
        config.tie_policy = apportion::TiePolicy::parse(tie_policy);
        config.method = apportion::parse_method(method);
        config.check_dp = check_dp;

        if (!scheme.empty()) {
            if (scheme == "b") {
                config.scheme = apportion::SchemeB{};
                allow_general_base = true;
            } else if (scheme == "a" || scheme.starts_with("a:")) {
                apportion::SchemeA a;
                std::string rest = scheme.size() > 2 ? scheme.substr(2) : "";
                if (auto colon = rest.find(':'); colon != std::string::npos) {
                    if (rest.substr(colon + 1) != "smallest") throw std::invalid_argument("unknown scheme A variant");
                    a.variant = apportion::SchemeABase::SmallestFraction;
                    allow_general_base = true;
                    rest = rest.substr(0, colon);
                }
                if (!rest.empty()) a.cap_fraction = apportion::Rational::parse(rest);
                config.scheme = a;
            } else {
                throw std::invalid_argument("unknown scheme '" + scheme + "'");
            }
        }
        apportion::check_base_granularity(config.params.base, allow_general_base);

        if (!accede_path.empty() || !remove_names.empty()) {
            apportion::AccessionConfig accession;
            if (!accede_path.empty()) accession.acceding = load_dataset(accede_path).states;
            accession.remove = remove_names;
            if (!variant_divisor_text.empty()) {
                accession.variant_target = apportion::FixedDivisor{apportion::Rational::parse(variant_divisor_text)};
            } else if (variant_house > 0) {
                accession.variant_target = apportion::FixedHouse{variant_house};
            }
            config.accession = std::move(accession);
        }

        apportion::Report report = apportion::run_scenario(config);
        std::cout << apportion::render(report, apportion::parse_format(format));
        return 0;
    } catch (const std::exception& e) {
        return report_failure(e, json_output);
    }
}
