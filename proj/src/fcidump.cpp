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

#include "uccc/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "uccc/point_group.hpp"

namespace uccc {

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

struct Header {
  std::map<std::string, std::vector<long>> values;
  int end_line = 0;
};

// The namelist may span several lines and ends at "&END" or "/".
Header read_header(const std::vector<std::string>& lines) {
  std::string body;
  int line_no = 0;
  bool started = false, ended = false;
  for (const std::string& raw : lines) {
    ++line_no;
    std::string l = raw;
    const std::string u = upper(l);
    if (!started) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw FcidumpError(line_no, "expected '&FCI' namelist header");
      }
      started = true;
      l = l.substr(pos + 4);
    }
    const std::string ul = upper(l);
    auto end = ul.find("&END");
    std::size_t cut = end;
    if (end == std::string::npos) {
      end = ul.find('/');
      cut = end;
    }
    if (end != std::string::npos) {
      body += " " + l.substr(0, cut);
      ended = true;
      Header h;
      h.end_line = line_no;
      // Tokenise "KEY=v1,v2,..., KEY2=..." into key/value lists.
      std::string key;
      std::string tok;
      auto flush_tok = [&](int ln) {
        if (tok.empty()) return;
        if (key.empty()) throw FcidumpError(ln, "value '" + tok + "' before any key");
        char* e = nullptr;
        const long v = std::strtol(tok.c_str(), &e, 10);
        if (*e != '\0') throw FcidumpError(ln, "non-integer header value '" + tok + "'");
        h.values[key].push_back(v);
        tok.clear();
      };
      for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c == '=') {
          key = upper(tok);
          tok.clear();
          h.values[key];
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          if (!tok.empty()) {
            // A token followed by '=' is a key, otherwise a value.
            std::size_t j = i;
            while (j < body.size() && std::isspace(static_cast<unsigned char>(body[j]))) ++j;
            if (j < body.size() && body[j] == '=') continue;
            flush_tok(line_no);
          }
        } else {
          tok += c;
        }
      }
      flush_tok(line_no);
      return h;
    }
    body += " " + l;
  }
  if (!ended) throw FcidumpError(line_no, "namelist header is not terminated by &END or /");
  return {};
}

long header_int(const Header& h, const std::string& key, int line, std::optional<long> def = {}) {
  auto it = h.values.find(key);
  if (it == h.values.end() || it->second.empty()) {
    if (def) return *def;
    throw FcidumpError(line, "header is missing " + key);
  }
  if (it->second.size() != 1) throw FcidumpError(line, key + " must be a single integer");
  return it->second.front();
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

MolecularModel parse_fcidump(std::string_view text, std::string_view point_group_name) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  const Header h = read_header(lines);
  const long norb = header_int(h, "NORB", h.end_line);
  const long nelec = header_int(h, "NELEC", h.end_line);
  const long ms2 = header_int(h, "MS2", h.end_line, 0);
  if (norb <= 0 || norb > 32) throw FcidumpError(h.end_line, "NORB must be in 1..32");
  if (nelec < 0 || nelec > 2 * norb) throw FcidumpError(h.end_line, "NELEC out of range");
  if ((nelec + ms2) % 2 != 0 || std::abs(ms2) > nelec) {
    throw FcidumpError(h.end_line, "NELEC and MS2 are inconsistent");
  }

  MolecularModel m;
  m.n_spin_orbitals = static_cast<int>(2 * norb);
  m.point_group = point_group_name.empty() ? "C1" : std::string(point_group_name);
  const PointGroup& pg = point_group(m.point_group);
  std::vector<long> orbsym;
  if (auto it = h.values.find("ORBSYM"); it != h.values.end()) orbsym = it->second;
  if (orbsym.empty()) orbsym.assign(static_cast<std::size_t>(norb), 1);
  if (static_cast<long>(orbsym.size()) != norb) {
    throw FcidumpError(h.end_line, "ORBSYM lists " + std::to_string(orbsym.size()) +
                                       " entries for NORB=" + std::to_string(norb));
  }
  for (long s : orbsym) {
    if (s < 1 || s > static_cast<long>(pg.irreps.size())) {
      throw FcidumpError(h.end_line, "ORBSYM label " + std::to_string(s) +
                                         " is not an irrep of point group " + pg.name);
    }
    m.irreps.push_back(pg.irreps[static_cast<std::size_t>(s - 1)]);
  }

  const long na = (nelec + ms2) / 2, nb = (nelec - ms2) / 2;
  m.hf_occupation.assign(static_cast<std::size_t>(m.n_spin_orbitals), 0);
  for (long p = 0; p < na; ++p) m.hf_occupation[static_cast<std::size_t>(2 * p)] = 1;
  for (long p = 0; p < nb; ++p) m.hf_occupation[static_cast<std::size_t>(2 * p + 1)] = 1;

  const int n = static_cast<int>(norb);
  m.h = Eigen::MatrixXd::Zero(n, n);
  m.g = TwoElectronIntegrals(n);
  for (std::size_t li = static_cast<std::size_t>(h.end_line); li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    std::istringstream in(lines[li]);
    std::string vs;
    if (!(in >> vs)) continue;
    for (char& c : vs) {
      if (c == 'D' || c == 'd') c = 'E';
    }
    char* e = nullptr;
    const double v = std::strtod(vs.c_str(), &e);
    if (*e != '\0') throw FcidumpError(line_no, "malformed value '" + vs + "'");
    long idx[4];
    for (long& x : idx) {
      if (!(in >> x)) throw FcidumpError(line_no, "expected four orbital indices");
    }
    std::string extra;
    if (in >> extra) throw FcidumpError(line_no, "trailing data '" + extra + "'");
    for (long x : idx) {
      if (x < 0 || x > norb) {
        throw FcidumpError(line_no, "index " + std::to_string(x) + " out of range for NORB=" +
                                        std::to_string(norb));
      }
    }
    const int i = static_cast<int>(idx[0]) - 1, j = static_cast<int>(idx[1]) - 1;
    const int k = static_cast<int>(idx[2]) - 1, l = static_cast<int>(idx[3]) - 1;
    if (idx[0] == 0 && idx[1] == 0 && idx[2] == 0 && idx[3] == 0) {
      m.core_energy = v;
    } else if (idx[2] == 0 && idx[3] == 0) {
      if (idx[0] == 0 || idx[1] == 0) throw FcidumpError(line_no, "malformed one-electron record");
      m.h(i, j) = v;
      m.h(j, i) = v;
    } else if (idx[0] > 0 && idx[1] > 0 && idx[2] > 0 && idx[3] > 0) {
      m.g.set_symmetric(i, j, k, l, v);
    } else if (idx[1] == 0 && idx[2] == 0 && idx[3] == 0) {
      // Orbital energy records carry no integrals.
    } else {
      throw FcidumpError(line_no, "malformed index pattern");
    }
  }
  m.validate();
  return m;
}

MolecularModel load_fcidump(const std::string& path, std::string_view point_group_name) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  MolecularModel m = parse_fcidump(ss.str(), point_group_name);
  m.name = path;
  return m;
}

std::string export_fcidump(const MolecularModel& m) {
  m.validate();
  const PointGroup& pg = point_group(m.point_group);
  const int n = m.n_orbitals();
  const int ms2 = m.n_alpha() - m.n_beta();
  std::string out = " &FCI NORB=" + std::to_string(n) + ",NELEC=" +
                    std::to_string(m.n_electrons()) + ",MS2=" + std::to_string(ms2) + ",\n  ORBSYM=";
  for (int p = 0; p < n; ++p) {
    out += std::to_string(pg.irrep_index(m.irreps[static_cast<std::size_t>(p)]) + 1) + ",";
  }
  out += "\n  ISYM=1,\n &END\n";
  auto record = [&](double v, int i, int j, int k, int l) {
    out += format_value(v) + " " + std::to_string(i) + " " + std::to_string(j) + " " +
           std::to_string(k) + " " + std::to_string(l) + "\n";
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = m.g(i, j, k, l);
          if (v != 0.0) record(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (m.h(i, j) != 0.0) record(m.h(i, j), i + 1, j + 1, 0, 0);
    }
  }
  record(m.core_energy, 0, 0, 0, 0);
  return out;
}

}  // namespace uccc
