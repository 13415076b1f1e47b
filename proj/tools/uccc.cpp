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


// Command-line front end. Every subcommand reads a TOML config through
// --config; flags given on the command line take precedence.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "uccc/circuit.hpp"
#include "uccc/estimation.hpp"
#include "uccc/experiment.hpp"
#include "uccc/fcidump.hpp"
#include "uccc/fermion.hpp"
#include "uccc/qse.hpp"
#include "uccc/simulator.hpp"
#include "uccc/synthesis.hpp"
#include "uccc/vqe.hpp"

namespace {

using nlohmann::json;
using namespace uccc;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ParameterMap read_parameters(const std::string& path) {
  const json j = json::parse(read_file(path));
  const json& obj = j.contains("vqe") ? j.at("vqe").at("parameters_rad") : j;
  ParameterMap m;
  for (const auto& [k, v] : obj.items()) m[k] = v.get<double>();
  return m;
}

std::vector<SpectrumPoint> read_sticks(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<SpectrumPoint> out;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#' || line.rfind("energy", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument(path + " line " + std::to_string(n) + ": expected two columns");
    out.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)), 1});
  }
  return out;
}

void add_model(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--model", cfg.model, "model file (JSON or FCIDUMP)")->required();
  sub->add_option("--point-group", cfg.point_group, "auto, c1, or the group of a FCIDUMP file");
}

void add_synthesis(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--strategy", cfg.strategy, "individual | commuting | chemaware");
  sub->add_option("--circuit", cfg.circuit, "prepared circuit instead of synthesis");
  sub->add_option("--params", cfg.parameters, "JSON object of parameter values");
  sub->add_option("--prune-tol", cfg.prune_tol, "drop excitations with |theta| below this (rad)");
  sub->add_option("--max-iterations", cfg.max_iterations, "VQE iteration limit");
}

void add_sampling(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--shots", cfg.shots, "shots per measurement circuit");
  sub->add_option("--mitigation", cfg.mitigation, "none | pmsv1 | pmsv2 | mmsv");
  sub->add_option("--seed", cfg.seed, "master seed");
  sub->add_option("--noise-p2", cfg.noise_p2, "two-qubit depolarizing probability");
  sub->add_option("--noise-pm", cfg.noise_pm, "measurement flip probability");
}

void add_spectrum(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--expansion", cfg.expansion, "default | complete | expansion file");
  sub->add_option("--estimator", cfg.estimator, "exact | shots");
  sub->add_option("--spectrum-out", cfg.spectrum_out, "broadened spectrum CSV");
  sub->add_option("--stick-out", cfg.stick_out, "stick table CSV");
  sub->add_option("--gamma", cfg.gamma, "Lorentzian half width (hartree)");
  sub->add_option("--e-min", cfg.e_min, "grid start (hartree)");
  sub->add_option("--e-max", cfg.e_max, "grid end (hartree)");
  sub->add_option("--step", cfg.step, "grid step (hartree)");
}

// Inserts the keys of a subcommand's --config file as flags. Flags already on
// the command line win. Input paths are taken relative to the config file.
std::vector<std::string> expand_config(int argc, char** argv, std::string& config_path) {
  std::vector<std::string> args(argv, argv + argc);
  std::set<std::string> given;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i].rfind("--", 0) != 0) continue;
    given.insert(args[i].substr(2, args[i].find('=') == std::string::npos ? std::string::npos : args[i].find('=') - 2));
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  if (config_path.empty() || args.size() < 2) return args;
  const std::string sub = args[1];
  const std::filesystem::path dir = std::filesystem::path(config_path).parent_path();
  static const std::set<std::string> inputs = {"model", "circuit", "params", "expansion", "sticks"};
  std::vector<std::string> extra;
  for (const CLI::ConfigItem& item : CLI::ConfigTOML().from_file(config_path)) {
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == sub)) continue;
    if (item.name == "++" || item.name == "--" || given.count(item.name)) continue;
    if (item.name == "task" && sub != "experiment") {
      const std::string task = item.inputs.empty() ? "" : item.inputs.front();
      if (task != sub && !(task == "compare" && sub == "compare-strategies")) {
        throw CLI::ValidationError("task", "config task '" + task + "' does not match subcommand '" + sub + "'");
      }
      continue;
    }
    for (std::string v : item.inputs) {
      const bool keyword = v == "default" || v == "complete";
      if (inputs.count(item.name) && !keyword && !v.empty() && std::filesystem::path(v).is_relative()) {
        v = (dir / v).string();
      }
      extra.push_back("--" + item.name);
      extra.push_back(v);
    }
  }
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

void print_error(const std::string& command, const std::string& type, const std::string& message,
                 int line = 0) {
  json e = {{"command", command}, {"type", type}, {"message", message}};
  if (line > 0) e["line"] = line;
  std::cerr << json{{"error", e}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UCC circuit compiler, simulator and estimator"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ExperimentConfig cfg;
  std::string report_out, params_out, circuit_out, format = "text", shots_out, sticks_in, convert_out;
  std::vector<std::string> entries;

  std::string config_path;
  auto config_for = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "TOML config of flag values; command-line flags take precedence");
  };

  CLI::App* synth = app.add_subcommand("synth", "synthesize a UCC state-preparation circuit");
  add_model(synth, cfg);
  add_synthesis(synth, cfg);
  synth->add_option("--format,--emit", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  bool stats = false;
  synth->add_flag("--stats", stats, "print two-qubit gate, qubit and parameter counts");
  synth->add_option("--out", circuit_out, "circuit file (stdout when omitted)");
  config_for(synth);

  CLI::App* vqe = app.add_subcommand("vqe", "noiseless VQE with parameter-shift gradients");
  add_model(vqe, cfg);
  add_synthesis(vqe, cfg);
  vqe->add_option("--params-out", params_out, "write optimized parameters as JSON");
  vqe->add_option("--report", report_out, "report file; stdout when omitted, \"-\" or \"json\"");
  config_for(vqe);

  CLI::App* estimate = app.add_subcommand("estimate", "sampled energy estimation with mitigation");
  add_model(estimate, cfg);
  add_synthesis(estimate, cfg);
  add_sampling(estimate, cfg);
  estimate->add_option("--report", report_out, "report file; stdout when omitted, \"-\" or \"json\"");
  config_for(estimate);

  CLI::App* qse = app.add_subcommand("qse", "quantum subspace expansion and optical spectrum");
  add_model(qse, cfg);
  add_synthesis(qse, cfg);
  add_sampling(qse, cfg);
  add_spectrum(qse, cfg);
  qse->add_option("--report", report_out, "report file; stdout when omitted, \"-\" or \"json\"");
  config_for(qse);

  CLI::App* spectrum = app.add_subcommand("spectrum", "broaden a stick table into a spectrum");
  spectrum->add_option("--sticks", sticks_in, "CSV energy_hartree,oscillator_strength")->required();
  spectrum->add_option("--gamma", cfg.gamma, "Lorentzian half width (hartree)");
  spectrum->add_option("--e-min", cfg.e_min, "grid start (hartree)");
  spectrum->add_option("--e-max", cfg.e_max, "grid end (hartree)");
  spectrum->add_option("--step", cfg.step, "grid step (hartree)");
  spectrum->add_option("--out", cfg.spectrum_out, "spectrum CSV (stdout when omitted)");
  config_for(spectrum);

  CLI::App* react = app.add_subcommand("react", "reaction energy from labelled energies");
  react->add_option("--entry", entries, "label:stoichiometry:source (energy, report or model)");
  config_for(react);

  CLI::App* compare = app.add_subcommand("compare-strategies", "two-qubit gate counts per strategy");
  add_model(compare, cfg);
  compare->add_option("--report", report_out, "report file; stdout when omitted, \"-\" or \"json\"");
  config_for(compare);

  CLI::App* run = app.add_subcommand("run", "sample a circuit");
  run->add_option("--circuit", cfg.circuit, "circuit file; every qubit is measured when it has no classical bits")->required();
  run->add_option("--params", cfg.parameters, "JSON object of parameter values");
  run->add_option("--shots", cfg.shots, "number of shots");
  run->add_option("--seed", cfg.seed, "seed");
  run->add_option("--noise-p2", cfg.noise_p2, "two-qubit depolarizing probability");
  run->add_option("--noise-pm", cfg.noise_pm, "measurement flip probability");
  run->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json", "text"}));
  run->add_option("--out", shots_out, "shot table (stdout when omitted)");
  config_for(run);

  CLI::App* experiment = app.add_subcommand("experiment", "run a configured experiment");
  experiment->add_option("--model", cfg.model, "model file (JSON or FCIDUMP)");
  experiment->add_option("--point-group", cfg.point_group, "auto, c1, or the group of a FCIDUMP file");
  experiment->add_option("--task", cfg.task, "vqe | estimate | qse | compare");
  add_synthesis(experiment, cfg);
  add_sampling(experiment, cfg);
  add_spectrum(experiment, cfg);
  experiment->add_option("--report", report_out, "report file; stdout when omitted, \"-\" or \"json\"");
  config_for(experiment);

  CLI::App* convert = app.add_subcommand("convert", "convert a model between JSON and FCIDUMP");
  add_model(convert, cfg);
  convert->add_option("--out", convert_out, "output file; .fcidump or FCIDUMP selects that format")->required();

  std::string command = argc > 1 ? argv[1] : "uccc";
  try {
    std::vector<std::string> args = expand_config(argc, argv, config_path);
    std::vector<char*> ptrs;
    for (std::string& a : args) ptrs.push_back(a.data());
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::FileError& e) {
    print_error(argc > 1 ? argv[1] : command, "config_error", e.what());
    return 2;
  } catch (const CLI::ParseError& e) {
    for (const CLI::App* s : app.get_subcommands()) command = s->get_name();
    print_error(command, "usage_error", e.what());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  command = sub->get_name();
  try {
    if (sub == synth) {
      const MolecularModel m = load_model(cfg.model, cfg.point_group);
      Circuit c = cfg.circuit.empty() ? synthesize(parse_strategy(cfg.strategy), m, generate_uccsd_pool(m))
                                      : load_circuit(cfg.circuit);
      if (cfg.prune_tol > 0.0) {
        if (cfg.parameters.empty()) throw std::invalid_argument("--prune-tol needs --params");
        c = prune(c, read_parameters(cfg.parameters), cfg.prune_tol).first;
      }
      emit(format == "json" ? to_json_text(c) : to_text(c), circuit_out);
      if (stats) {
        const json counts = {{"two_qubit_gates", two_qubit_gate_count(c)},
                             {"n_qubits", c.n_qubits()},
                             {"n_parameters", c.parameters().size()}};
        (circuit_out.empty() ? std::cerr : std::cout) << counts.dump() << "\n";
      }
    } else if (sub == vqe || sub == estimate || sub == qse || sub == experiment || sub == compare) {
      if (sub == vqe) cfg.task = "vqe";
      if (sub == estimate) cfg.task = "estimate";
      if (sub == qse) cfg.task = "qse";
      if (sub == compare) cfg.task = "compare";
      const json report = run_experiment(cfg);
      if (!params_out.empty()) emit(report.at("vqe").at("parameters_rad").dump(2) + "\n", params_out);
      emit(report_text(report), report_out == "json" ? "-" : report_out);
    } else if (sub == spectrum) {
      const auto sticks = read_sticks(sticks_in);
      double e_max = cfg.e_max;
      if (e_max < 0.0) {
        e_max = 1.0;
        for (const SpectrumPoint& p : sticks) e_max = std::max(e_max, p.energy + 0.5);
      }
      emit(spectrum_csv(broaden(sticks, cfg.gamma, cfg.e_min, e_max, cfg.step)), cfg.spectrum_out);
    } else if (sub == react) {
      const std::string base = std::filesystem::path(config_path).parent_path().string();
      std::vector<ReactionEntry> resolved;
      json rows = json::array();
      for (const std::string& e : entries) {
        resolved.push_back(resolve_reaction_entry(e, base));
        rows.push_back({{"label", resolved.back().label},
                        {"stoichiometry", resolved.back().stoichiometry},
                        {"energy_hartree", resolved.back().energy}});
      }
      const double de = reaction_energy(resolved);
      emit(json{{"entries", rows}, {"reaction_energy_hartree", de}}.dump(2) + "\n", "");
    } else if (sub == run) {
      Circuit c = load_circuit(cfg.circuit);
      if (!cfg.parameters.empty()) c = bind_parameters(c, read_parameters(cfg.parameters));
      NoiseSpec noise;
      noise.two_qubit_depolarizing_p = cfg.noise_p2;
      noise.measurement_flip_p = cfg.noise_pm;
      noise.seed = cfg.seed;
      noise.validate();
      if (c.n_bits() == 0) {
        for (int q = 0; q < c.n_qubits(); ++q) c.add(Gate::measure(q, c.add_bit()));
      }
      const ShotTable t = c.has_midcircuit_operations() ? run_with_midcircuit(c, cfg.shots, noise)
                                                        : sample(c, cfg.shots, noise);
      emit(format == "json" ? t.to_json_text() : t.to_csv(), shots_out);
    } else if (sub == convert) {
      const MolecularModel m = load_model(cfg.model, cfg.point_group);
      const bool to_fcidump = ends_with(convert_out, ".fcidump") || ends_with(convert_out, "FCIDUMP");
      emit(to_fcidump ? export_fcidump(m) : model_to_json_text(m), convert_out);
    }
  } catch (const FcidumpError& e) {
    print_error(command, "fcidump_error", e.what(), e.line());
    return 1;
  } catch (const VqeError& e) {
    print_error(command, "vqe_error", e.what());
    return 1;
  } catch (const json::exception& e) {
    print_error(command, "json_error", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    print_error(command, "invalid_argument", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(command, "runtime_error", e.what());
    return 1;
  }
  return 0;
}
