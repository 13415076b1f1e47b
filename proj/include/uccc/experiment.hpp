// Copyright 2026 The uccc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "uccc/model.hpp"

namespace uccc {

struct ReactionEntry {
  std::string label;
  double energy = 0.0;  // hartree
  double stoichiometry = 0.0;
};

/// Sum of stoichiometry times energy; reactants carry negative coefficients.
double reaction_energy(const std::vector<ReactionEntry>& entries);

/**
 * Parses `label:stoichiometry:source`. The source is a literal energy in
 * hartree, a report written by `run_experiment` (its VQE energy is used) or a
 * model file, which is solved with chemically aware noiseless VQE. Relative
 * paths resolve against `base_dir`.
 */
ReactionEntry resolve_reaction_entry(const std::string& entry, const std::string& base_dir = {});

/**
 * Loads a JSON model or a FCIDUMP file (detected by its `&FCI` header).
 * `point_group` is "auto" to keep the model's labels, "c1" to drop them, or
 * a group name used to decode FCIDUMP ORBSYM entries.
 */
MolecularModel load_model(const std::string& path, const std::string& point_group = "auto");

struct ExperimentConfig {
  std::string model;
  std::string point_group = "auto";
  std::string task = "vqe";  // vqe | estimate | qse | compare
  std::string strategy = "chemaware";
  std::string circuit;     // optional prepared circuit instead of synthesis
  std::string parameters;  // optional JSON object of parameter values
  double prune_tol = 0.0;
  int max_iterations = 500;
  std::uint64_t shots = 10000;
  std::string mitigation = "none";
  double noise_p2 = 0.0;
  double noise_pm = 0.0;
  std::uint64_t seed = 1;
  std::string expansion = "default";  // default | complete | path
  std::string estimator = "exact";    // exact | shots
  double gamma = 0.01;
  double e_min = 0.0;
  double e_max = -1.0;  // negative: last excitation + 0.5 hartree
  double step = 0.001;
  std::string spectrum_out;
  std::string stick_out;
};

nlohmann::json config_to_json(const ExperimentConfig& c);

/// Gate counts of every strategy on the model's UCCSD pool.
nlohmann::json compare_strategies(const MolecularModel& model);

/**
 * Runs synthesis followed by the configured task and returns the report.
 * Output depends only on the configuration, so equal configurations give
 * byte-identical reports.
 */
nlohmann::json run_experiment(const ExperimentConfig& config);

/// Two-space indented JSON with a trailing newline.
std::string report_text(const nlohmann::json& report);

}  // namespace uccc
