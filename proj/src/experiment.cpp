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


#include "uccc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "uccc/circuit.hpp"
#include "uccc/estimation.hpp"
#include "uccc/fcidump.hpp"
#include "uccc/fermion.hpp"
#include "uccc/qse.hpp"
#include "uccc/simulator.hpp"
#include "uccc/symmetry.hpp"
#include "uccc/synthesis.hpp"
#include "uccc/vqe.hpp"

namespace uccc {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_fcidump_text(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && lower(text.substr(pos, 4)) == "&fci";
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  if (base_dir.empty() || path.empty() || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(base_dir) / path).string();
}

double model_vqe_energy(const MolecularModel& m) {
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  return vqe_optimize(hamiltonian_from_model(m), c).energy;
}

json vqe_json(const VqeResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"energy_hartree", r.energy},
          {"iterations", r.iterations},
          {"evaluations", r.evaluations},
          {"gradient_norm_hartree", r.gradient_norm},
          {"parameters_rad", params}};
}

ParameterMap load_parameters(const std::string& path) {
  const json j = json::parse(read_file(path));
  const json& obj = j.contains("parameters_rad") ? j.at("parameters_rad") : j;
  ParameterMap m;
  for (const auto& [k, v] : obj.items()) m[k] = v.get<double>();
  return m;
}

std::vector<SymmetryOperator> verifiers_for(Mitigation mit, const MolecularModel& m) {
  switch (mit) {
    case Mitigation::None:
      return {};
    case Mitigation::Pmsv1:
      return pmsv1_symmetries(m);
    case Mitigation::Pmsv2:
      return pmsv2_symmetries(m);
    case Mitigation::Mmsv:
      break;
  }
  throw std::invalid_argument("mmsv mitigation is available for energy estimation only");
}

std::vector<ExpansionOperator> expansion_for(const std::string& name, const MolecularModel& m) {
  if (name == "default") return default_expansion(m);
  if (name == "complete") return complete_expansion(m);
  return parse_expansion(read_file(name));
}

NoiseSpec noise_of(const ExperimentConfig& c) {
  NoiseSpec n;
  n.two_qubit_depolarizing_p = c.noise_p2;
  n.measurement_flip_p = c.noise_pm;
  n.seed = c.seed;
  n.validate();
  return n;
}

json qse_report(const ExperimentConfig& cfg, const MolecularModel& m, const QubitOperator& h,
                const Circuit& prep) {
  const std::vector<ExpansionOperator> ops = expansion_for(cfg.expansion, m);
  std::vector<QubitOperator> needed = qse_operators(h, ops);
  std::array<QubitOperator, 3> dipole;
  if (m.dipoles) {
    dipole = {dipole_operator(m, Axis::X), dipole_operator(m, Axis::Y), dipole_operator(m, Axis::Z)};
    for (QubitOperator& q : dipole_operators_needed(dipole, ops)) needed.push_back(std::move(q));
  }
  const std::vector<PauliString> strings = required_strings(needed);
  PauliExpectations ev;
  json sampling = nullptr;
  if (cfg.estimator == "exact") {
    ev = exact_expectations(run_statevector(prep), strings);
  } else if (cfg.estimator == "shots") {
    const Mitigation mit = parse_mitigation(cfg.mitigation);
    SampledExpectations s = sampled_expectations(prep, strings, verifiers_for(mit, m), cfg.shots, noise_of(cfg));
    ev = std::move(s.values);
    sampling = {{"mitigation", std::string(to_string(mit))},
                {"n_circuits", s.n_circuits},
                {"shots_per_circuit", cfg.shots},
                {"shots_total", s.shots_total},
                {"shots_kept", s.shots_kept}};
  } else {
    throw std::invalid_argument("estimator must be 'exact' or 'shots'");
  }

  QseOptions opts;
  const QseResult r = qse_solve(h, ops, ev, opts);
  std::vector<std::array<double, 3>> dipoles;
  if (m.dipoles) dipoles = transition_dipoles(r, dipole, ev);
  const double e0 = r.eigenvalues(0);

  json states = json::array();
  std::vector<double> excited;
  std::vector<std::array<double, 3>> excited_dipoles;
  for (Eigen::Index v = 0; v < r.eigenvalues.size(); ++v) {
    json s = {{"energy_hartree", r.eigenvalues(v)}, {"excitation_energy_hartree", r.eigenvalues(v) - e0}};
    json degenerate = json::array();
    for (Eigen::Index u = 0; u < r.eigenvalues.size(); ++u) {
      if (u != v && std::abs(r.eigenvalues(u) - r.eigenvalues(v)) < opts.degeneracy_tol) degenerate.push_back(u);
    }
    s["degenerate_with"] = degenerate;
    if (m.dipoles) {
      const auto& d = dipoles[static_cast<std::size_t>(v)];
      s["transition_dipole_au"] = {d[0], d[1], d[2]};
      if (v > 0 && r.eigenvalues(v) - e0 > opts.degeneracy_tol) {
        s["oscillator_strength"] = 2.0 * (r.eigenvalues(v) - e0) / 3.0 * (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        excited.push_back(r.eigenvalues(v) - e0);
        excited_dipoles.push_back(d);
      }
    }
    states.push_back(s);
  }
  json out = {{"estimator", cfg.estimator},
              {"expansion", r.labels},
              {"retained_rank", r.retained_rank},
              {"n_expectation_strings", strings.size()},
              {"states", states}};
  if (!sampling.is_null()) out["sampling"] = sampling;
  if (m.dipoles) {
    const auto peaks = merge_degenerate(oscillator_strengths(excited_dipoles, excited), opts.degeneracy_tol);
    json pj = json::array();
    for (const SpectrumPoint& p : peaks) {
      pj.push_back({{"energy_hartree", p.energy},
                    {"oscillator_strength", p.oscillator_strength},
                    {"multiplicity", p.multiplicity}});
    }
    out["peaks"] = pj;
    if (!cfg.spectrum_out.empty()) {
      const double e_max = cfg.e_max >= 0.0 ? cfg.e_max : (excited.empty() ? 1.0 : *std::max_element(excited.begin(), excited.end()) + 0.5);
      write_file(cfg.spectrum_out, spectrum_csv(broaden(peaks, cfg.gamma, cfg.e_min, e_max, cfg.step)));
      out["spectrum_csv"] = cfg.spectrum_out;
      out["gamma_hartree"] = cfg.gamma;
    }
    if (!cfg.stick_out.empty()) {
      write_file(cfg.stick_out, stick_csv(peaks));
      out["stick_csv"] = cfg.stick_out;
    }
  }
  return out;
}

}  // namespace

double reaction_energy(const std::vector<ReactionEntry>& entries) {
  if (entries.size() < 2) throw std::invalid_argument("a reaction needs at least two entries");
  double e = 0.0;
  for (const ReactionEntry& r : entries) e += r.stoichiometry * r.energy;
  return e;
}

ReactionEntry resolve_reaction_entry(const std::string& entry, const std::string& base_dir) {
  const auto a = entry.find(':');
  const auto b = a == std::string::npos ? a : entry.find(':', a + 1);
  if (b == std::string::npos) {
    throw std::invalid_argument("reaction entry '" + entry + "' is not label:stoichiometry:source");
  }
  ReactionEntry r;
  r.label = entry.substr(0, a);
  const std::string stoich = entry.substr(a + 1, b - a - 1);
  const std::string source = entry.substr(b + 1);
  std::size_t used = 0;
  try {
    r.stoichiometry = std::stod(stoich, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != stoich.size()) {
    throw std::invalid_argument("reaction entry '" + entry + "' has a bad stoichiometry");
  }
  try {
    r.energy = std::stod(source, &used);
    if (used == source.size()) return r;
  } catch (const std::exception&) {
  }
  const std::string path = resolve(source, base_dir);
  const std::string text = read_file(path);
  if (!is_fcidump_text(text)) {
    const json j = json::parse(text);
    if (j.value("format", std::string{}) == "uccc-report") {
      r.energy = j.at("vqe").at("energy_hartree").get<double>();
      return r;
    }
  }
  r.energy = model_vqe_energy(load_model(path));
  return r;
}

MolecularModel load_model(const std::string& path, const std::string& point_group) {
  const std::string text = read_file(path);
  const std::string pg = lower(point_group);
  MolecularModel m;
  if (is_fcidump_text(text)) {
    m = parse_fcidump(text, pg == "auto" || pg == "c1" ? std::string_view{} : std::string_view(point_group));
    m.name = std::filesystem::path(path).stem().string();
  } else {
    m = model_from_json_text(text);
    if (pg != "auto" && pg != "c1" && lower(m.point_group) != pg) {
      throw std::invalid_argument("model " + path + " is labelled " + m.point_group + ", not " + point_group);
    }
  }
  if (pg == "c1") m = without_point_group(m);
  return m;
}

json config_to_json(const ExperimentConfig& c) {
  return {{"model", c.model},
          {"point_group", c.point_group},
          {"task", c.task},
          {"strategy", c.strategy},
          {"circuit", c.circuit},
          {"parameters", c.parameters},
          {"prune_tol_rad", c.prune_tol},
          {"max_iterations", c.max_iterations},
          {"shots", c.shots},
          {"mitigation", c.mitigation},
          {"noise_p2", c.noise_p2},
          {"noise_pm", c.noise_pm},
          {"seed", c.seed},
          {"expansion", c.expansion},
          {"estimator", c.estimator},
          {"gamma_hartree", c.gamma},
          {"e_min_hartree", c.e_min},
          {"e_max_hartree", c.e_max},
          {"step_hartree", c.step},
          {"spectrum_out", c.spectrum_out},
          {"stick_out", c.stick_out}};
}

json compare_strategies(const MolecularModel& model) {
  const std::vector<Excitation> pool = generate_uccsd_pool(model);
  json counts = json::object();
  std::vector<int> values;
  for (Strategy s : {Strategy::Individual, Strategy::CommutingSets, Strategy::ChemicallyAware}) {
    const int n = two_qubit_gate_count(synthesize(s, model, pool));
    counts[std::string(to_string(s))] = n;
    values.push_back(n);
  }
  return {{"two_qubit_gates", counts},
          {"pool_size", pool.size()},
          {"dominance", values[2] <= values[1] && values[1] <= values[0]},
          {"reduction_vs_commuting", values[1] > 0 ? 1.0 - double(values[2]) / values[1] : 0.0},
          {"reduction_vs_individual", values[0] > 0 ? 1.0 - double(values[2]) / values[0] : 0.0}};
}

json run_experiment(const ExperimentConfig& cfg) {
  if (cfg.model.empty()) throw std::invalid_argument("experiment needs a model file");
  const MolecularModel m = load_model(cfg.model, cfg.point_group);
  const QubitOperator h = hamiltonian_from_model(m);
  json report = {{"format", "uccc-report"},
                 {"version", 1},
                 {"bit_order", "little-endian: qubit 0 is the rightmost bitstring character"},
                 {"task", cfg.task},
                 {"seed", cfg.seed},
                 {"config", config_to_json(cfg)},
                 {"model",
                  {{"name", m.name},
                   {"n_qubits", m.n_spin_orbitals},
                   {"n_electrons", m.n_electrons()},
                   {"point_group", m.point_group},
                   {"hf_energy_hartree", hf_energy(m)}}}};
  if (cfg.task == "compare") {
    report["compare"] = compare_strategies(m);
    return report;
  }
  if (cfg.task != "vqe" && cfg.task != "estimate" && cfg.task != "qse") {
    throw std::invalid_argument("unknown task '" + cfg.task + "'");
  }

  Circuit c;
  json synth;
  if (!cfg.circuit.empty()) {
    c = load_circuit(cfg.circuit);
    synth["source"] = cfg.circuit;
  } else {
    const Strategy s = parse_strategy(cfg.strategy);
    const std::vector<Excitation> pool = generate_uccsd_pool(m);
    c = synthesize(s, m, pool);
    synth["strategy"] = std::string(to_string(s));
    json labels = json::array();
    for (const Excitation& e : strategy_order(s, m, pool)) labels.push_back(e.parameter + " " + e.label());
    synth["excitations"] = labels;
  }
  if (c.n_qubits() != m.n_spin_orbitals) {
    throw std::invalid_argument("circuit acts on " + std::to_string(c.n_qubits()) + " qubits but the model has " +
                                std::to_string(m.n_spin_orbitals));
  }

  ParameterMap params;
  VqeOptions vo;
  vo.max_iterations = cfg.max_iterations;
  if (!cfg.parameters.empty()) {
    params = load_parameters(cfg.parameters);
  } else if (!c.is_bound()) {
    const VqeResult r = vqe_optimize(h, c, vo);
    report["vqe"] = vqe_json(r);
    params = r.parameters;
  }
  if (cfg.prune_tol > 0.0 && !c.is_bound()) {
    auto [pruned, kept] = prune(c, params, cfg.prune_tol);
    json dropped = json::array();
    for (const auto& [k, v] : params) {
      if (!kept.count(k)) dropped.push_back(k);
    }
    synth["pruned_parameters"] = dropped;
    synth["two_qubit_gates_before_prune"] = two_qubit_gate_count(c);
    c = std::move(pruned);
    params = kept;
    if (cfg.parameters.empty() && !c.is_bound()) {
      const VqeResult r = vqe_optimize(h, c, vo);
      report["vqe"] = vqe_json(r);
      params = r.parameters;
    }
  }
  synth["two_qubit_gates"] = two_qubit_gate_count(c);
  synth["total_gates"] = c.gates().size();
  synth["n_parameters"] = c.parameters().size();
  report["synthesis"] = synth;
  const Circuit prep = bind_parameters(c, params);
  if (!report.contains("vqe")) {
    VqeResult r;
    r.parameters = params;
    r.energy = run_statevector(prep).expectation(h);
    report["vqe"] = vqe_json(r);
  }

  if (cfg.task == "estimate") {
    EstimationOptions eo;
    eo.shots = cfg.shots;
    eo.mitigation = parse_mitigation(cfg.mitigation);
    eo.noise = noise_of(cfg);
    const EstimationReport er = run_estimation(prep, h, pmsv1_symmetries(m), pmsv2_symmetries(m), eo);
    json sets = json::array();
    double jsd_sum = 0.0;
    for (const SetReport& s : er.sets) {
      sets.push_back({{"n_terms", s.n_terms},
                      {"n_verifiers", s.n_verifiers},
                      {"two_qubit_gates", s.two_qubit_gates},
                      {"shots", s.shots},
                      {"kept", s.kept},
                      {"jsd_to_exact_bits", s.jsd_to_exact}});
      jsd_sum += s.jsd_to_exact;
    }
    report["estimation"] = {
        {"mitigation", std::string(to_string(eo.mitigation))},
        {"energy_hartree", er.estimate.energy},
        {"standard_error_hartree", er.estimate.standard_error},
        {"exact_energy_hartree", er.exact_energy},
        {"relative_error", std::abs((er.estimate.energy - er.exact_energy) / er.exact_energy)},
        {"n_circuits", er.sets.size()},
        {"shots_per_circuit", cfg.shots},
        {"shots_total", er.shots_total},
        {"shots_kept", er.shots_kept},
        {"jsd_mean_bits", er.sets.empty() ? 0.0 : jsd_sum / static_cast<double>(er.sets.size())},
        {"sets", sets}};
  } else if (cfg.task == "qse") {
    report["qse"] = qse_report(cfg, m, h, prep);
  }
  return report;
}

std::string report_text(const json& report) { return report.dump(2) + "\n"; }

}  // namespace uccc
