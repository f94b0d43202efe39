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

#ifndef APPORTION_DATASET_HPP_
#define APPORTION_DATASET_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "apportion/core.hpp"

namespace apportion {

struct PopulationDataset {
    std::vector<MemberState> states;
    std::map<std::string, std::int64_t> status_quo_seats;
    std::string source_label;
    std::string snapshot_date;

    friend bool operator==(const PopulationDataset&, const PopulationDataset&) = default;
};

/// Parses `name,population[,now_seats]` CSV. Numeric fields may carry
/// thousands separators (quoted commas, spaces, underscores, apostrophes).
/// Leading `# source: ...` and `# snapshot: ...` lines set the labels.
/// Throws ParseError with the offending line number.
PopulationDataset parse_population_file(std::string_view bytes);

/// Inverse of parse_population_file.
std::string render_dataset_csv(const PopulationDataset& dataset);

/// Bundled datasets: "eu27", "eu28" (+ Croatia), "eu29" (+ Croatia, Iceland),
/// each with the 2011 status-quo seats of the 27 incumbents.
const std::vector<std::string>& preset_ids();
PopulationDataset preset(std::string_view id);

}  // namespace apportion

#endif  // APPORTION_DATASET_HPP_
