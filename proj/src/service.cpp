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

#include "apportion/service.hpp"

#include <iostream>

#include "httplib.h"

namespace apportion {

using nlohmann::json;

void check_base_granularity(const Rational& base, bool allow_general) {
    if (allow_general) return;
    if (base.den() != 1 && base.den() != 2) {
        throw std::invalid_argument("base " + base.str() +
                                    " is not a whole or half seat; allow general rational bases to use it");
    }
}

namespace {

    Rational rational_field(const json& value, const char* what) {
        if (value.is_number_integer()) return Rational{value.get<std::int64_t>()};
        if (value.is_number_float()) return Rational::parse(value.dump());
        if (value.is_string()) return Rational::parse(value.get<std::string>());
        if (value.is_object() && value.contains("num") && value.contains("den")) {
            return Rational{value.at("num").get<std::int64_t>(), value.at("den").get<std::int64_t>()};
        }
        throw std::invalid_argument(std::string{what} + " must be a number, \"p/q\" string or {num, den}");
    }

    std::vector<MemberState> states_field(const json& value) {
        if (!value.is_array()) throw std::invalid_argument("states must be an array");
        std::vector<MemberState> out;
        for (const auto& s : value) {
            out.push_back({s.at("name").get<std::string>(), s.at("population").get<std::int64_t>()});
        }
        return out;
    }

    std::optional<Target> target_field(const json& obj) {
        bool has_house = obj.contains("house") && !obj.at("house").is_null();
        bool has_divisor = obj.contains("divisor") && !obj.at("divisor").is_null();
        if (has_house && has_divisor) throw std::invalid_argument("give either house or divisor, not both");
        if (has_divisor) return FixedDivisor{rational_field(obj.at("divisor"), "divisor")};
        if (has_house) return FixedHouse{obj.at("house").get<std::int64_t>()};
        return std::nullopt;
    }

    // nlohmann/json errors become PARSE failures at the edge
    template <typename F>
    auto as_parse_error(F&& f) {
        try {
            return f();
        } catch (const json::exception& e) {
            throw ParseError(e.what(), 1);
        }
    }

}  // namespace

ScenarioConfig scenario_from_json(const json& request) {
    return as_parse_error([&] {
        if (!request.is_object()) throw ParseError("request body must be a JSON object", 1);
        ScenarioConfig config;

        if (request.contains("preset")) {
            config.dataset = preset(request.at("preset").get<std::string>());
        }
        if (request.contains("states")) {
            config.dataset.states = states_field(request.at("states"));
            config.dataset.status_quo_seats.clear();
            config.dataset.source_label = "request";
        }
        if (request.contains("status_quo")) {
            for (const auto& [name, seats] : request.at("status_quo").items()) {
                config.dataset.status_quo_seats[name] = seats.get<std::int64_t>();
            }
        }
        if (config.dataset.states.empty()) throw std::invalid_argument("request needs a preset or states");
        validate_states(config.dataset.states);

        const json params = request.value("params", json::object());
        if (params.contains("base")) config.params.base = rational_field(params.at("base"), "base");
        if (params.contains("max")) config.params.max_cap = params.at("max").get<std::int64_t>();
        if (params.contains("rounding")) config.params.rounding = parse_rounding(params.at("rounding").get<std::string>());
        config.target = target_field(params).value_or(FixedHouse{config.params.house_size});
        if (const auto* house = std::get_if<FixedHouse>(&config.target)) config.params.house_size = house->seats;
        check_base_granularity(config.params.base, request.value("allow_general_base", false));

        if (request.contains("tie_policy")) config.tie_policy = TiePolicy::parse(request.at("tie_policy").get<std::string>());
        if (request.contains("method")) config.method = parse_method(request.at("method").get<std::string>());
        config.check_dp = request.value("check_dp", true);

        if (request.contains("scheme") && !request.at("scheme").is_null()) {
            const json& scheme = request.at("scheme");
            std::string type = scheme.at("type").get<std::string>();
            if (type == "A") {
                SchemeA a;
                if (scheme.contains("cap_fraction")) a.cap_fraction = rational_field(scheme.at("cap_fraction"), "cap_fraction");
                if (scheme.value("variant", std::string{"minimum_minus_one"}) == "smallest_fraction") {
                    a.variant = SchemeABase::SmallestFraction;
                }
                config.scheme = a;
            } else if (type == "B") {
                config.scheme = SchemeB{};
            } else {
                throw std::invalid_argument("unknown scheme '" + type + "'");
            }
        }

        if (request.contains("accession") && !request.at("accession").is_null()) {
            const json& acc = request.at("accession");
            AccessionConfig accession;
            if (acc.contains("states")) accession.acceding = states_field(acc.at("states"));
            if (acc.contains("remove")) accession.remove = acc.at("remove").get<std::vector<std::string>>();
            accession.variant_target = target_field(acc);
            config.accession = std::move(accession);
        }
        return config;
    });
}

ServiceResponse error_response(const std::exception& error) {
    json body;
    body["message"] = error.what();
    int status = 400;
    if (const auto* tie = dynamic_cast<const TieError*>(&error)) {
        status = 409;
        body["code"] = tie->code();
        body["tie"] = tie_json(tie->report());
    } else if (const auto* infeasible = dynamic_cast<const InfeasibleError*>(&error)) {
        status = 422;
        body["code"] = infeasible->code();
        body["feasible_range"] = {{"lo", infeasible->range().lo}, {"hi", infeasible->range().hi}};
    } else if (dynamic_cast<const std::logic_error*>(&error) && !dynamic_cast<const std::invalid_argument*>(&error) &&
               !dynamic_cast<const std::domain_error*>(&error)) {
        status = 500;
        body["code"] = "INTERNAL";
    } else {
        body["code"] = "PARSE";
    }
    return {status, json{{"error", std::move(body)}}};
}

ServiceResponse handle_allocate(std::string_view body) {
    try {
        json request;
        try {
            request = json::parse(body);
        } catch (const json::parse_error& e) {
            throw ParseError(e.what(), 1);
        }
        return {200, report_json(run_scenario(scenario_from_json(request)))};
    } catch (const std::exception& e) {
        return error_response(e);
    }
}

ServiceResponse handle_presets() {
    json presets = json::array();
    for (const auto& id : preset_ids()) {
        PopulationDataset d = preset(id);
        json states = json::array();
        for (const auto& s : d.states) {
            auto it = d.status_quo_seats.find(s.name);
            states.push_back({{"name", s.name},
                              {"population", s.population},
                              {"now_seats", it == d.status_quo_seats.end() ? json(nullptr) : json(it->second)}});
        }
        presets.push_back({{"id", id}, {"label", d.source_label}, {"snapshot", d.snapshot_date}, {"states", states}});
    }
    return {200, json{{"presets", std::move(presets)}}};
}

ServiceResponse handle_health() { return {200, json{{"status", "ok"}}}; }

Service::Service() : server_{std::make_unique<httplib::Server>()} {
    auto reply = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server_->Post("/api/allocate", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_allocate(req.body));
    });
    server_->Get("/api/presets", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_presets()); });
    server_->Get("/api/health", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
}

Service::~Service() = default;

int Service::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

bool Service::run() { return server_->listen_after_bind(); }

void Service::stop() { server_->stop(); }

int serve(std::string_view bind_address) {
    std::string host = "127.0.0.1";
    std::string port_text{bind_address};
    if (auto colon = bind_address.rfind(':'); colon != std::string_view::npos) {
        host = std::string{bind_address.substr(0, colon)};
        port_text = std::string{bind_address.substr(colon + 1)};
    }
    int port = std::stoi(port_text);
    Service service;
    int bound = service.bind(host, port);
    if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
    }
    std::cerr << "listening on http://" << host << ":" << bound << "\n";
    return service.run() ? 0 : 1;
}

}  // namespace apportion
