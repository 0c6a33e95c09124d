/*
Copyright 2026 The lfg Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef LFG_TOOLS_CLI_HPP
#define LFG_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lfg/experiment.hpp"

namespace lfg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
};

// Experiment description read from a `key = value` file.
struct Plan {
  experiment::Settings settings;
  std::vector<int> qps;
  std::vector<double> ks;
  std::vector<experiment::SequenceInput> sequences;
  bool per_qp = false;
  std::filesystem::path lambda_opt_out;
  std::filesystem::path table_out;
};

enum class PlanKind { kSweep, kCompare };

// Relative input paths resolve against the config file's directory.
Plan load_plan(const std::filesystem::path& path, PlanKind kind);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfg::cli

#endif  // LFG_TOOLS_CLI_HPP
