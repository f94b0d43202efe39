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

#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"

#include "eu_fixtures.hpp"

namespace {

using nlohmann::json;

std::vector<std::int64_t> seats_of(const json& body) {
    std::vector<std::int64_t> out;
    for (const auto& e : body["allocation"]["entries"]) out.push_back(e["seats"].get<std::int64_t>());
    return out;
}

std::vector<std::int64_t> table1_seats() {
    std::vector<std::int64_t> out;
    for (const auto& r : eu::table1()) out.push_back(r.seats);
    return out;
}

TEST(HandleAllocate, PresetDefaults) {
    auto r = apportion::handle_allocate(R"({"preset": "eu27"})");
    ASSERT_EQ(r.status, 200) << r.body.dump();
    EXPECT_EQ(seats_of(r.body), table1_seats());
    EXPECT_EQ(r.body["allocation"]["total_seats"], 751);
    EXPECT_TRUE(r.body["dp_report"]["satisfies_revised_dp"].get<bool>());
    const json& iv = r.body["allocation"]["divisor_interval"];
    EXPECT_TRUE(iv["lo_open"].get<bool>());
    EXPECT_LT(iv["lo"]["num"].get<std::int64_t>(), 819000 * iv["lo"]["den"].get<std::int64_t>());
}

TEST(HandleAllocate, ExplicitStatesAndParams) {
    json req = {{"states", json::array({{{"name", "A"}, {"population", 5000}},
                                        {{"name", "B"}, {"population", 3000}},
                                        {{"name", "C"}, {"population", 2000}}})},
                {"params", {{"base", 0}, {"max", 100}, {"rounding", "down"}, {"house", 10}}}};
    auto r = apportion::handle_allocate(req.dump());
    ASSERT_EQ(r.status, 200) << r.body.dump();
    EXPECT_EQ(seats_of(r.body), (std::vector<std::int64_t>{5, 3, 2}));
}

TEST(HandleAllocate, FixedDivisorAndRationalForms) {
    for (const char* divisor : {R"("844000")", "844000", R"({"num": 844000, "den": 1})"}) {
        std::string body = std::string{R"({"preset": "eu29", "params": {"divisor": )"} + divisor + "}}";
        auto r = apportion::handle_allocate(body);
        ASSERT_EQ(r.status, 200) << r.body.dump();
        EXPECT_EQ(seats_of(r.body), eu::column_of(29));
    }
}

TEST(HandleAllocate, BaseSixStandardMalta) {
    auto r = apportion::handle_allocate(R"({"preset": "eu27", "params": {"base": 6, "rounding": "standard"}})");
    ASSERT_EQ(r.status, 200) << r.body.dump();
    EXPECT_EQ(r.body["allocation"]["entries"][26]["seats"], 6);
}

TEST(HandleAllocate, TieIs409) {
    json req = {{"states", json::array({{{"name", "A"}, {"population", 100}}, {{"name", "B"}, {"population", 100}}})},
                {"params", {{"base", 0}, {"max", 50}, {"rounding", "up"}, {"house", 3}}}};
    auto r = apportion::handle_allocate(req.dump());
    EXPECT_EQ(r.status, 409);
    EXPECT_EQ(r.body["error"]["code"], "TIE");
    EXPECT_EQ(r.body["error"]["tie"]["tied_states"], json({"A", "B"}));
    EXPECT_EQ(r.body["error"]["tie"]["seats_contested"], 1);

    req["tie_policy"] = "lexicographic";
    auto resolved = apportion::handle_allocate(req.dump());
    ASSERT_EQ(resolved.status, 200);
    EXPECT_EQ(seats_of(resolved.body), (std::vector<std::int64_t>{2, 1}));
    EXPECT_FALSE(resolved.body["allocation"]["resolved_tie"].is_null());
}

TEST(HandleAllocate, InfeasibleIs422) {
    auto r = apportion::handle_allocate(R"({"preset": "eu27", "params": {"house": 100}})");
    EXPECT_EQ(r.status, 422);
    EXPECT_EQ(r.body["error"]["code"], "INFEASIBLE");
    EXPECT_EQ(r.body["error"]["feasible_range"]["lo"], 162);
    EXPECT_EQ(r.body["error"]["feasible_range"]["hi"], 2592);
}

TEST(HandleAllocate, MalformedInputIs400) {
    for (const char* body : {"not json", "[]", "{}", R"({"preset": "eu99"})",
                             R"({"states": [{"name": "A"}]})", R"({"states": [{"name": "A", "population": 0}]})",
                             R"({"preset": "eu27", "params": {"base": "5/3"}})",
                             R"({"preset": "eu27", "params": {"house": 751, "divisor": 819000}})",
                             R"({"preset": "eu27", "tie_policy": "dice"})"}) {
        auto r = apportion::handle_allocate(body);
        EXPECT_EQ(r.status, 400) << body;
        EXPECT_EQ(r.body["error"]["code"], "PARSE") << body;
    }
}

TEST(HandleAllocate, GeneralBaseNeedsOptIn) {
    auto r = apportion::handle_allocate(R"({"preset": "eu27", "params": {"base": "9/2"}})");
    EXPECT_EQ(r.status, 200);
    auto rejected = apportion::handle_allocate(R"({"preset": "eu27", "params": {"base": "14/3"}})");
    EXPECT_EQ(rejected.status, 400);
    auto allowed = apportion::handle_allocate(R"({"preset": "eu27", "params": {"base": "14/3"}, "allow_general_base": true})");
    EXPECT_EQ(allowed.status, 200);
}

TEST(HandleAllocate, SchemesAndAccession) {
    auto a = apportion::handle_allocate(R"({"preset": "eu27", "scheme": {"type": "A"}})");
    ASSERT_EQ(a.status, 200) << a.body.dump();
    EXPECT_EQ(a.body["scheme_minimum"], 6);
    auto b = apportion::handle_allocate(R"({"preset": "eu29", "scheme": {"type": "B"}})");
    ASSERT_EQ(b.status, 200) << b.body.dump();
    EXPECT_EQ(b.body["params"]["base"]["num"], 135);
    EXPECT_EQ(b.body["params"]["base"]["den"], 29);

    auto acc = apportion::handle_allocate(
        R"({"preset": "eu27", "accession": {"states": [{"name": "Croatia", "population": 4425747}]}})");
    ASSERT_EQ(acc.status, 200) << acc.body.dump();
    EXPECT_EQ(acc.body["delta"]["joined"], json({"Croatia"}));
    bool france_seen = false;
    for (const auto& c : acc.body["delta"]["changes"]) {
        if (c["state"] == "France") {
            france_seen = true;
            EXPECT_EQ(c["before"], 85);
            EXPECT_EQ(c["after"], 83);
        }
    }
    EXPECT_TRUE(france_seen);
}

TEST(HandleAllocate, OrderIndependent) {
    const std::vector<std::string> bodies{R"({"preset": "eu27"})", R"({"preset": "eu28"})",
                                          R"({"preset": "eu27", "params": {"house": 100}})",
                                          R"({"preset": "eu29", "params": {"divisor": 844000}})"};
    std::vector<std::string> forward;
    for (const auto& b : bodies) forward.push_back(apportion::handle_allocate(b).body.dump());
    for (std::size_t i = bodies.size(); i-- > 0;) {
        EXPECT_EQ(apportion::handle_allocate(bodies[i]).body.dump(), forward[i]);
    }
}

TEST(HandlePresets, ThreeDatasets) {
    auto r = apportion::handle_presets();
    ASSERT_EQ(r.status, 200);
    const json& presets = r.body["presets"];
    ASSERT_EQ(presets.size(), 3U);
    EXPECT_EQ(presets[0]["id"], "eu27");
    EXPECT_EQ(presets[0]["states"].size(), 27U);
    EXPECT_EQ(presets[0]["states"][0]["name"], "Germany");
    EXPECT_EQ(presets[0]["states"][0]["population"], 81802257);
    EXPECT_EQ(presets[0]["states"][0]["now_seats"], 99);
    EXPECT_EQ(presets[2]["states"].size(), 29U);
    EXPECT_EQ(presets[2]["states"][28]["name"], "Iceland");
    EXPECT_TRUE(presets[2]["states"][28]["now_seats"].is_null());
}

TEST(Health, Ok) {
    auto r = apportion::handle_health();
    EXPECT_EQ(r.status, 200);
    EXPECT_EQ(r.body["status"], "ok");
}

TEST(Service, LiveEndpoints) {
    apportion::Service service;
    int port = service.bind("127.0.0.1", 0);
    ASSERT_GT(port, 0);
    std::thread server{[&] { service.run(); }};

    httplib::Client client{"127.0.0.1", port};
    client.set_connection_timeout(5);
    auto health = client.Get("/api/health");
    ASSERT_TRUE(health);
    EXPECT_EQ(health->status, 200);
    EXPECT_EQ(json::parse(health->body)["status"], "ok");

    auto presets = client.Get("/api/presets");
    ASSERT_TRUE(presets);
    EXPECT_EQ(json::parse(presets->body)["presets"].size(), 3U);

    auto ok = client.Post("/api/allocate", R"({"preset": "eu27"})", "application/json");
    ASSERT_TRUE(ok);
    EXPECT_EQ(ok->status, 200);
    EXPECT_EQ(seats_of(json::parse(ok->body)), table1_seats());

    auto tie = client.Post("/api/allocate",
                           R"({"states": [{"name": "A", "population": 100}, {"name": "B", "population": 100}],
                               "params": {"base": 0, "rounding": "up", "house": 3}})",
                           "application/json");
    ASSERT_TRUE(tie);
    EXPECT_EQ(tie->status, 409);
    EXPECT_EQ(json::parse(tie->body)["error"]["code"], "TIE");

    auto bad = client.Post("/api/allocate", "{", "application/json");
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->status, 400);

    service.stop();
    server.join();
}

}  // namespace
