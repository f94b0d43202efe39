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

#ifndef APPORTION_SERVICE_HPP_
#define APPORTION_SERVICE_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "apportion/report.hpp"

namespace httplib {
class Server;
}

namespace apportion {

/// Rejects bases that are not multiples of 1/2 unless general rationals are allowed.
void check_base_granularity(const Rational& base, bool allow_general);

/// Builds a scenario from an /api/allocate request body. Throws ParseError or
/// std::invalid_argument on malformed input.
ScenarioConfig scenario_from_json(const nlohmann::json& request);

struct ServiceResponse {
    int status{200};
    nlohmann::json body;
};

/// Maps a thrown exception to a structured error body (INFEASIBLE/TIE/PARSE).
ServiceResponse error_response(const std::exception& error);

ServiceResponse handle_allocate(std::string_view body);
ServiceResponse handle_presets();
ServiceResponse handle_health();

/// HTTP front end: POST /api/allocate, GET /api/presets, GET /api/health.
/// Handlers hold no state between requests.
class Service {
  public:
    Service();
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds to host:port; port 0 picks a free port. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks serving requests until stop().
    bool run();
    void stop();

  private:
    std::unique_ptr<httplib::Server> server_;
};

/// Parses "host:port" (or just "port") and serves until interrupted.
int serve(std::string_view bind_address);

}  // namespace apportion

#endif  // APPORTION_SERVICE_HPP_
