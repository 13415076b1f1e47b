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


#include "uccc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace uccc {

namespace {

constexpr double kZeroAngle = 1e-14;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const std::string str(s);
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (end != str.c_str() + str.size()) return std::nullopt;
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string format_angle(const Angle& a) {
  if (!a.is_symbolic()) return fmt(a.offset);
  std::string out;
  if (a.scale == 1.0) {
    out = a.symbol;
  } else if (a.scale == -1.0) {
    out = "-" + a.symbol;
  } else {
    out = fmt(a.scale) + "*" + a.symbol;
  }
  if (a.offset != 0.0) out += " + " + fmt(a.offset);
  return out;
}

Angle parse_angle(std::string_view text) {
  std::string s = trim(text);
  Angle a;
  std::string head = s;
  if (const auto plus = s.find(" + "); plus != std::string::npos) {
    head = trim(s.substr(0, plus));
    const auto off = parse_double(trim(s.substr(plus + 3)));
    if (!off) throw std::invalid_argument("malformed angle offset in '" + s + "'");
    a.offset = *off;
  }
  if (auto lit = parse_double(head)) {
    if (a.offset != 0.0) throw std::invalid_argument("angle '" + s + "' has two literal parts");
    a.offset = *lit;
    return a;
  }
  if (const auto star = head.find('*'); star != std::string::npos) {
    const auto sc = parse_double(trim(head.substr(0, star)));
    if (!sc) throw std::invalid_argument("malformed angle scale in '" + s + "'");
    a.scale = *sc;
    a.symbol = trim(head.substr(star + 1));
  } else if (!head.empty() && head[0] == '-') {
    a.scale = -1.0;
    a.symbol = head.substr(1);
  } else {
    a.scale = 1.0;
    a.symbol = head;
  }
  if (!is_identifier(a.symbol)) throw std::invalid_argument("malformed angle '" + s + "'");
  return a;
}

bool is_unitary(GateKind k) {
  return k != GateKind::Measure && k != GateKind::Reset && k != GateKind::ConditionalX;
}

bool disjoint(const Gate& a, const Gate& b) {
  return !b.acts_on(a.q0) && (a.q1 < 0 || !b.acts_on(a.q1));
}

// Commutation that follows from gate kinds and operands alone.
bool trivially_commute(const Gate& a, const Gate& b) {
  if (!is_unitary(a.kind) || !is_unitary(b.kind)) {
    const bool shared_bit = a.bit >= 0 && a.bit == b.bit;
    return disjoint(a, b) && !shared_bit;
  }
  if (disjoint(a, b)) return true;
  if (a.kind == GateKind::Rz && b.kind == GateKind::Rz) return true;
  if (a.kind == GateKind::CX && b.kind == GateKind::CX) {
    if (a.q0 == b.q0 && a.q1 != b.q1 && a.q1 != b.q0 && b.q1 != a.q0) return true;
    if (a.q1 == b.q1 && a.q0 != b.q0 && a.q0 != b.q1 && b.q0 != a.q1) return true;
    return false;
  }
  const Gate* cx = a.kind == GateKind::CX ? &a : (b.kind == GateKind::CX ? &b : nullptr);
  const Gate* one = cx == &a ? &b : &a;
  if (cx == nullptr || one->kind == GateKind::CX) return false;
  if (one->kind == GateKind::Rz && one->q0 == cx->q0) return true;
  if ((one->kind == GateKind::X || one->kind == GateKind::Rx) && one->q0 == cx->q1) return true;
  return false;
}

enum class PairAction { None, Cancel, Merge };

PairAction pair_action(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.q0 != b.q0 || a.q1 != b.q1) return PairAction::None;
  switch (a.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::CX:
      return PairAction::Cancel;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      if (a.angle.is_symbolic() && b.angle.is_symbolic() && a.angle.symbol != b.angle.symbol) {
        return PairAction::None;
      }
      return PairAction::Merge;
    default:
      return PairAction::None;
  }
}

bool is_zero(const Angle& a) {
  return std::abs(a.offset) < kZeroAngle && (!a.is_symbolic() || a.scale == 0.0);
}

void check_qubit(int q, int n, std::string_view what) {
  if (q < 0 || q >= n) {
    throw std::out_of_range(std::string(what) + " qubit " + std::to_string(q) +
                            " outside register of " + std::to_string(n));
  }
}

}  // namespace

double Angle::value(const ParameterMap& values) const {
  if (!is_symbolic()) return offset;
  auto it = values.find(symbol);
  if (it == values.end()) throw std::out_of_range("unbound symbol '" + symbol + "'");
  return offset + scale * it->second;
}

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CX: return "CX";
    case GateKind::Measure: return "MEASURE";
    case GateKind::Reset: return "RESET";
    case GateKind::ConditionalX: return "XC";
  }
  return "?";
}

bool is_rotation(GateKind k) {
  return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz;
}

void Circuit::add(Gate g) {
  check_qubit(g.q0, n_qubits_, gate_name(g.kind));
  if (g.kind == GateKind::CX) {
    check_qubit(g.q1, n_qubits_, "CX");
    if (g.q0 == g.q1) throw std::invalid_argument("CX operands must differ");
  } else {
    g.q1 = -1;
  }
  if (g.kind == GateKind::Measure || g.kind == GateKind::ConditionalX) {
    if (g.bit < 0 || g.bit >= n_bits_) {
      throw std::out_of_range("classical bit " + std::to_string(g.bit) + " outside register of " +
                              std::to_string(n_bits_));
    }
  } else {
    g.bit = -1;
  }
  if (is_rotation(g.kind)) {
    if (g.angle.is_symbolic()) add_parameter(g.angle.symbol);
  } else {
    g.angle = {};
  }
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  n_qubits_ = std::max(n_qubits_, other.n_qubits_);
  n_bits_ = std::max(n_bits_, other.n_bits_);
  for (const auto& p : other.parameters_) add_parameter(p);
  for (const Gate& g : other.gates_) add(g);
}

void Circuit::add_parameter(const std::string& name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid parameter name '" + name + "'");
  if (std::find(parameters_.begin(), parameters_.end(), name) == parameters_.end()) {
    parameters_.push_back(name);
  }
}

bool Circuit::is_bound() const {
  return std::none_of(gates_.begin(), gates_.end(),
                      [](const Gate& g) { return g.angle.is_symbolic(); });
}

bool Circuit::has_midcircuit_operations() const {
  bool measured = false;
  for (const Gate& g : gates_) {
    if (g.kind == GateKind::Reset || g.kind == GateKind::ConditionalX) return true;
    if (g.kind == GateKind::Measure) {
      measured = true;
    } else if (measured) {
      return true;
    }
  }
  return false;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_, n_bits_);
  for (const auto& p : parameters_) out.add_parameter(p);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    if (!is_unitary(it->kind)) throw std::invalid_argument("cannot invert a non-unitary operation");
    Gate g = *it;
    if (is_rotation(g.kind)) g.angle = g.angle.negated();
    out.add(g);
  }
  return out;
}

int two_qubit_gate_count(const Circuit& c) {
  return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(),
                                        [](const Gate& g) { return g.kind == GateKind::CX; }));
}

Circuit bind_parameters(const Circuit& c, const ParameterMap& values) {
  Circuit out(c.n_qubits(), c.n_bits());
  for (const auto& p : c.parameters()) {
    if (!values.count(p)) throw std::invalid_argument("missing value for parameter '" + p + "'");
  }
  for (Gate g : c.gates()) {
    if (g.angle.is_symbolic()) g.angle = Angle::literal(g.angle.value(values));
    out.add(std::move(g));
  }
  return out;
}

Circuit peephole(const Circuit& c) {
  std::vector<std::optional<Gate>> gates(c.gates().begin(), c.gates().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!gates[i]) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (!gates[j]) continue;
        const PairAction act = pair_action(*gates[i], *gates[j]);
        if (act == PairAction::Cancel) {
          gates[i].reset();
          gates[j].reset();
          changed = true;
          break;
        }
        if (act == PairAction::Merge) {
          Angle& a = gates[i]->angle;
          const Angle& b = gates[j]->angle;
          if (!a.is_symbolic()) a.symbol = b.symbol;
          a.offset += b.offset;
          a.scale += b.scale;
          if (a.scale == 0.0 && a.is_symbolic()) {
            a.symbol.clear();
          }
          gates[j].reset();
          if (is_zero(a)) gates[i].reset();
          changed = true;
          break;
        }
        if (!trivially_commute(*gates[i], *gates[j])) break;
      }
    }
  }
  Circuit out(c.n_qubits(), c.n_bits());
  std::set<std::string> used;
  for (const auto& g : gates) {
    if (g && g->angle.is_symbolic()) used.insert(g->angle.symbol);
  }
  for (const auto& p : c.parameters()) {
    if (used.count(p)) out.add_parameter(p);
  }
  for (auto& g : gates) {
    if (g) out.add(std::move(*g));
  }
  return out;
}

std::pair<Circuit, ParameterMap> prune(const Circuit& c, const ParameterMap& values, double tol) {
  if (tol < 0) throw std::invalid_argument("prune tolerance must be non-negative");
  std::set<std::string> dropped;
  ParameterMap kept;
  for (const auto& p : c.parameters()) {
    auto it = values.find(p);
    if (it == values.end()) throw std::invalid_argument("missing value for parameter '" + p + "'");
    if (std::abs(it->second) < tol) {
      dropped.insert(p);
    } else {
      kept[p] = it->second;
    }
  }
  Circuit reduced(c.n_qubits(), c.n_bits());
  bool removed = false;
  for (const auto& p : c.parameters()) {
    if (!dropped.count(p)) reduced.add_parameter(p);
  }
  for (const Gate& g : c.gates()) {
    if (is_rotation(g.kind)) {
      if (g.angle.is_symbolic() ? dropped.count(g.angle.symbol) > 0 : std::abs(g.angle.offset) < tol) {
        removed = true;
        continue;
      }
    }
    reduced.add(g);
  }
  if (!removed) return {c, kept};
  return {peephole(reduced), kept};
}

std::string to_text(const Circuit& c) {
  std::string out = "# uccc circuit; bit order little-endian (qubit 0 is the least significant bit)\n";
  out += "QUBITS " + std::to_string(c.n_qubits()) + "\n";
  out += "BITS " + std::to_string(c.n_bits()) + "\n";
  out += "PARAMS";
  for (const auto& p : c.parameters()) out += " " + p;
  out += "\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::H:
      case GateKind::Reset:
        out += std::string(gate_name(g.kind)) + " q" + std::to_string(g.q0);
        break;
      case GateKind::Rx:
      case GateKind::Ry:
      case GateKind::Rz:
        out += std::string(gate_name(g.kind)) + "(" + format_angle(g.angle) + ") q" +
               std::to_string(g.q0);
        break;
      case GateKind::CX:
        out += "CX q" + std::to_string(g.q0) + " q" + std::to_string(g.q1);
        break;
      case GateKind::Measure:
        out += "MEASURE q" + std::to_string(g.q0) + " -> c" + std::to_string(g.bit);
        break;
      case GateKind::ConditionalX:
        out += "XC c" + std::to_string(g.bit) + " q" + std::to_string(g.q0);
        break;
    }
    out += "\n";
  }
  return out;
}

namespace {

int parse_index(const std::string& tok, char prefix, int line) {
  if (tok.size() < 2 || tok[0] != prefix) {
    throw std::invalid_argument("line " + std::to_string(line) + ": expected " +
                                std::string(1, prefix) + "<index>, got '" + tok + "'");
  }
  char* end = nullptr;
  const long v = std::strtol(tok.c_str() + 1, &end, 10);
  if (*end != '\0' || v < 0) {
    throw std::invalid_argument("line " + std::to_string(line) + ": malformed index '" + tok + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

Circuit parse_circuit_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n_qubits = -1, n_bits = 0;
  std::vector<std::string> params;
  Circuit c;
  bool started = false;
  auto start = [&] {
    if (started) return;
    if (n_qubits < 0) throw std::invalid_argument("circuit text lacks a QUBITS line");
    c = Circuit(n_qubits, n_bits);
    for (const auto& p : params) c.add_parameter(p);
    started = true;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      std::string head = line, rest;
      Angle angle;
      bool has_angle = false;
      if (const auto open = line.find('('); open != std::string::npos) {
        const auto close = line.find(')', open);
        if (close == std::string::npos) throw std::invalid_argument("unterminated '('");
        head = line.substr(0, open);
        angle = parse_angle(line.substr(open + 1, close - open - 1));
        has_angle = true;
        rest = line.substr(close + 1);
      } else {
        const auto sp = line.find_first_of(" \t");
        head = line.substr(0, sp);
        rest = sp == std::string::npos ? "" : line.substr(sp);
      }
      std::istringstream toks(rest);
      std::vector<std::string> args;
      for (std::string t; toks >> t;) args.push_back(t);
      auto need = [&](std::size_t n) {
        if (args.size() != n) {
          throw std::invalid_argument(head + " expects " + std::to_string(n) + " operands");
        }
      };
      if (head == "QUBITS" || head == "BITS") {
        need(1);
        char* end = nullptr;
        const long v = std::strtol(args[0].c_str(), &end, 10);
        if (*end != '\0' || v < 0) throw std::invalid_argument("malformed count");
        if (started) throw std::invalid_argument(head + " after the first gate");
        (head == "QUBITS" ? n_qubits : n_bits) = static_cast<int>(v);
      } else if (head == "PARAMS") {
        if (started) throw std::invalid_argument("PARAMS after the first gate");
        params = args;
      } else {
        start();
        if (has_angle != (head == "Rx" || head == "Ry" || head == "Rz")) {
          throw std::invalid_argument("unexpected angle syntax for '" + head + "'");
        }
        if (head == "X" || head == "H" || head == "RESET") {
          need(1);
          const int q = parse_index(args[0], 'q', line_no);
          c.add(head == "X" ? Gate::x(q) : head == "H" ? Gate::h(q) : Gate::reset(q));
        } else if (head == "Rx" || head == "Ry" || head == "Rz") {
          need(1);
          const int q = parse_index(args[0], 'q', line_no);
          const GateKind k = head == "Rx" ? GateKind::Rx : head == "Ry" ? GateKind::Ry : GateKind::Rz;
          c.add({k, q, -1, -1, angle});
        } else if (head == "CX") {
          need(2);
          c.add(Gate::cx(parse_index(args[0], 'q', line_no), parse_index(args[1], 'q', line_no)));
        } else if (head == "MEASURE") {
          need(3);
          if (args[1] != "->") throw std::invalid_argument("MEASURE expects 'q<i> -> c<j>'");
          c.add(Gate::measure(parse_index(args[0], 'q', line_no), parse_index(args[2], 'c', line_no)));
        } else if (head == "XC") {
          need(2);
          c.add(Gate::conditional_x(parse_index(args[0], 'c', line_no),
                                    parse_index(args[1], 'q', line_no)));
        } else {
          throw std::invalid_argument("unknown gate '" + head + "'");
        }
      }
    } catch (const std::exception& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    }
  }
  start();
  return c;
}

std::string to_json_text(const Circuit& c) {
  nlohmann::ordered_json j;
  j["format"] = "uccc-circuit";
  j["version"] = 1;
  j["bit_order"] = "little-endian";
  j["n_qubits"] = c.n_qubits();
  j["n_bits"] = c.n_bits();
  j["parameters"] = c.parameters();
  auto gates = nlohmann::ordered_json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::ordered_json o;
    o["op"] = gate_name(g.kind);
    if (g.kind == GateKind::CX) {
      o["qubits"] = {g.q0, g.q1};
    } else {
      o["qubits"] = {g.q0};
    }
    if (g.bit >= 0) o["bit"] = g.bit;
    if (is_rotation(g.kind)) {
      if (g.angle.is_symbolic()) {
        o["angle"] = {{"symbol", g.angle.symbol}, {"scale", g.angle.scale}, {"offset", g.angle.offset}};
      } else {
        o["angle"] = g.angle.offset;
      }
    }
    gates.push_back(std::move(o));
  }
  j["gates"] = std::move(gates);
  return j.dump(2) + "\n";
}

Circuit parse_circuit_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  Circuit c(j.at("n_qubits").get<int>(), j.value("n_bits", 0));
  for (const auto& p : j.value("parameters", std::vector<std::string>{})) c.add_parameter(p);
  std::size_t index = 0;
  for (const auto& o : j.at("gates")) {
    try {
      const std::string op = o.at("op").get<std::string>();
      const auto qubits = o.at("qubits").get<std::vector<int>>();
      auto q = [&](std::size_t i) {
        if (i >= qubits.size()) throw std::invalid_argument(op + " lacks qubit operands");
        return qubits[i];
      };
      Angle a;
      if (o.contains("angle")) {
        const auto& ja = o.at("angle");
        if (ja.is_number()) {
          a = Angle::literal(ja.get<double>());
        } else {
          a = {ja.value("offset", 0.0), ja.value("scale", 1.0), ja.at("symbol").get<std::string>()};
        }
      }
      if (op == "X") {
        c.add(Gate::x(q(0)));
      } else if (op == "H") {
        c.add(Gate::h(q(0)));
      } else if (op == "Rx" || op == "Ry" || op == "Rz") {
        if (!o.contains("angle")) throw std::invalid_argument(op + " lacks an angle");
        const GateKind k = op == "Rx" ? GateKind::Rx : op == "Ry" ? GateKind::Ry : GateKind::Rz;
        c.add({k, q(0), -1, -1, a});
      } else if (op == "CX") {
        c.add(Gate::cx(q(0), q(1)));
      } else if (op == "MEASURE") {
        c.add(Gate::measure(q(0), o.at("bit").get<int>()));
      } else if (op == "RESET") {
        c.add(Gate::reset(q(0)));
      } else if (op == "XC") {
        c.add(Gate::conditional_x(o.at("bit").get<int>(), q(0)));
      } else {
        throw std::invalid_argument("unknown gate '" + op + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("gate " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return c;
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_circuit_json(text);
  return parse_circuit_text(text);
}

}  // namespace uccc
