// Copyright 2026 The catcoh Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <regex>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "catcoh/correlations.hpp"
#include "catcoh/discrimination.hpp"
#include "catcoh/errors.hpp"
#include "catcoh/repeatability.hpp"
#include "catcoh/reservoir.hpp"
#include "catcoh/wigner.hpp"

namespace catcoh::cli {
namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

int to_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string precise(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* format_name(Format f) {
  switch (f) {
    case Format::kText: return "text";
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
  }
  return "?";
}

void write_csv(const RunConfig& cfg, const Table& t, std::ostream& os) {
  os << "# " << cfg.stamp() << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      std::visit(
          [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) os << format_double(v);
            else if constexpr (std::is_same_v<T, long long> || std::is_same_v<T, std::string>) os << v;
          },
          row[i]);
    }
    os << "\n";
  }
}

json config_json(const RunConfig& cfg) {
  json c;
  c["command"] = cfg.command;
  c["L"] = cfg.L;
  c["N"] = {cfg.N.first, cfg.N.last};
  c["stride"] = cfg.stride;
  if (cfg.command == "discriminate") {
    c["theta1"] = cfg.theta1;
    c["theta2"] = cfg.theta2;
  }
  if (cfg.command == "single-use" || cfg.command == "fig2") c["gate"] = cfg.gate_text;
  if (cfg.command == "fig1") {
    c["eig_convention"] = cfg.convention == EigenConvention::kEq12 ? "eq12" : "appendixA";
  }
  c["format"] = format_name(cfg.format);
  return c;
}

void write_json_table(const RunConfig& cfg, const Table& t, std::ostream& os) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = cfg.command;
  doc["config"] = config_json(cfg);
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) r[t.columns[i]] = nullptr;
            else r[t.columns[i]] = v;
          },
          row[i]);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
}

// ---- subcommands ----

struct SingleUse {
  int L;
  HermitianMatrix rho;
  double plus_population;
  double target_population;
  double reservoir_fidelity;
  double target_trace_distance;
};

SingleUse single_use(int L, const QubitGate& gate) {
  const int guard = default_guard(1);
  const ReservoirState eta = make_eta(L, guard, 0.0, guard);
  HermitianMatrix rho = phi_channel(eta, gate, ground_projector());
  const double fid = overlap_fidelity(lambda_channel(eta, gate, ground_projector()), eta);
  Eigen::Vector2cd target(gate(0, 0), gate(1, 0));
  Eigen::Vector2cd plus(1.0, 1.0);
  plus /= std::sqrt(2.0);
  const double tp = (target.adjoint() * rho.matrix() * target)(0, 0).real();
  const double pp = (plus.adjoint() * rho.matrix() * plus)(0, 0).real();
  const double d = trace_distance(rho, HermitianMatrix(target * target.adjoint()));
  return {L, std::move(rho), pp, tp, fid, d};
}

void cmd_single_use(const RunConfig& cfg, std::ostream& os) {
  std::vector<SingleUse> res;
  for (int L : cfg.L) res.push_back(single_use(L, cfg.gate));
  if (cfg.format == Format::kText) {
    os << "# " << cfg.stamp() << "\n";
    for (const auto& r : res) {
      const auto& m = r.rho;
      os << "L = " << r.L << "\n"
         << "  rho_S = [[" << format_double(m(0, 0).real()) << ", " << format_double(m(0, 1).real())
         << (m(0, 1).imag() < 0 ? "" : "+") << format_double(m(0, 1).imag()) << "i], ["
         << format_double(m(1, 0).real()) << (m(1, 0).imag() < 0 ? "" : "+")
         << format_double(m(1, 0).imag()) << "i, " << format_double(m(1, 1).real()) << "]]\n"
         << "  <+|rho_S|+> = " << format_double(r.plus_population) << "\n"
         << "  <target|rho_S|target> = " << format_double(r.target_population) << "\n"
         << "  reservoir fidelity = " << format_double(r.reservoir_fidelity) << "\n"
         << "  trace distance to target = " << format_double(r.target_trace_distance) << "\n";
    }
    return;
  }
  Table t{{"L", "rho_00", "rho_01_re", "rho_01_im", "rho_11", "plus_population",
           "target_population", "reservoir_fidelity", "target_trace_distance"},
          {}};
  for (const auto& r : res) {
    t.rows.push_back({static_cast<long long>(r.L), r.rho(0, 0).real(), r.rho(0, 1).real(),
                      r.rho(0, 1).imag(), r.rho(1, 1).real(), r.plus_population,
                      r.target_population, r.reservoir_fidelity, r.target_trace_distance});
  }
  cfg.format == Format::kJson ? write_json_table(cfg, t, os) : write_csv(cfg, t, os);
}

void cmd_probs(const RunConfig& cfg, std::ostream& os) {
  Table t{{"N", "L", "n", "p_seq_exact", "p_seq_approx", "p_count_exact", "product_p_seq",
           "product_p_count"},
          {}};
  const auto ns = cfg.n_values();
  for (int L : cfg.L) {
    for (int N : ns) {
      const SequenceStats s = sequence_stats(N, L);
      for (int n = 0; n <= N; ++n) {
        Cell approx;
        if (p_seq_approx_supported(n, N)) approx = p_seq_approx(n, N, L);
        t.rows.push_back({static_cast<long long>(N), static_cast<long long>(L),
                          static_cast<long long>(n), s.p_seq[n], approx, s.p_count[n],
                          s.product_p_seq[n], s.product_p_count[n]});
      }
    }
  }
  cfg.format == Format::kJson ? write_json_table(cfg, t, os) : write_csv(cfg, t, os);
}

constexpr const char* kDiscriminateColumns[] = {
    "theta1", "theta2", "L", "N", "naive_fidelity_per_copy", "naive_fidelity_N",
    "naive_error_bound", "reservoir_overlap_magnitude", "reservoir_error_floor",
    "naive_beats_floor", "exact_trace_distance", "exact_helstrom_error", "exact_error"};

void cmd_discriminate(const RunConfig& cfg, std::ostream& os) {
  struct Item {
    DiscriminationReport r;
    std::string exact_error;
  };
  std::vector<Item> items;
  for (int L : cfg.L) {
    for (int N : cfg.n_values()) {
      try {
        items.push_back({exact_report(cfg.theta1, cfg.theta2, L, N), {}});
      } catch (const CapacityError& e) {
        items.push_back({naive_report(cfg.theta1, cfg.theta2, L, N), e.what()});
      }
    }
  }
  if (cfg.format == Format::kJson) {
    json doc;
    doc["schema_version"] = 1;
    doc["command"] = cfg.command;
    doc["config"] = config_json(cfg);
    json reports = json::array();
    for (const auto& [r, error] : items) {
      json j;
      j["theta1"] = r.theta1;
      j["theta2"] = r.theta2;
      j["L"] = r.L;
      j["N"] = r.N;
      j["naive"] = {{"fidelity_per_copy", r.naive_fidelity_per_copy},
                    {"fidelity_N", r.naive_fidelity_N},
                    {"error_bound", r.naive_error_bound}};
      // The floor is derived from data processing, not a printed formula.
      j["reservoir"] = {{"overlap_magnitude", r.reservoir_overlap_magnitude},
                        {"error_floor", r.reservoir_error_floor},
                        {"error_floor_kind", "derived"}};
      j["naive_beats_floor"] = r.naive_beats_floor;
      if (error.empty()) {
        j["exact"] = {{"trace_distance", *r.exact_trace_distance},
                      {"helstrom_error", *r.exact_helstrom_error}};
      } else {
        j["exact"] = {{"error", error}};
      }
      reports.push_back(std::move(j));
    }
    doc["reports"] = std::move(reports);
    os << doc.dump(2) << "\n";
    return;
  }
  Table t{{std::begin(kDiscriminateColumns), std::end(kDiscriminateColumns)}, {}};
  for (const auto& [r, error] : items) {
    Cell td, he, msg;
    if (error.empty()) {
      td = *r.exact_trace_distance;
      he = *r.exact_helstrom_error;
    } else {
      msg = "capacity";
    }
    t.rows.push_back({r.theta1, r.theta2, static_cast<long long>(r.L), static_cast<long long>(r.N),
                      r.naive_fidelity_per_copy, r.naive_fidelity_N, r.naive_error_bound,
                      r.reservoir_overlap_magnitude, r.reservoir_error_floor,
                      static_cast<long long>(r.naive_beats_floor), td, he, msg});
  }
  write_csv(cfg, t, os);
}

constexpr int kMaxFig1N = 256;

void cmd_fig1(const RunConfig& cfg, std::ostream& os) {
  if (cfg.N.last > kMaxFig1N) {
    throw ParameterError("fig1: N must be <= " + std::to_string(kMaxFig1N));
  }
  const WignerCache cache(cfg.N.last);
  Table t{{"L", "N", "A_exact", "A_approx", "A_bound"}, {}};
  for (int L : cfg.L) {
    for (int N : cfg.n_values()) {
      const auto r = asymmetry_report(N, L, cfg.convention, cache);
      t.rows.push_back({static_cast<long long>(L), static_cast<long long>(N), r.A_exact, r.A_approx,
                        r.A_bound});
    }
  }
  cfg.format == Format::kJson ? write_json_table(cfg, t, os) : write_csv(cfg, t, os);
}

void cmd_fig2(const RunConfig& cfg, std::ostream& os) {
  Table t{{"L", "N", "xi_exact", "xi_approx"}, {}};
  for (int L : cfg.L) {
    for (int N : cfg.n_values()) {
      const auto r = repeatability(N, L, cfg.gate);
      t.rows.push_back(
          {static_cast<long long>(L), static_cast<long long>(N), r.trace_norm_exact, r.trace_norm_approx});
    }
  }
  cfg.format == Format::kJson ? write_json_table(cfg, t, os) : write_csv(cfg, t, os);
}

struct CommandInfo {
  const char* name;
  const char* help;
  const char* default_L;
  const char* default_N;
  Format default_format;
  bool uses_theta, uses_gate, uses_convention;
  void (*body)(const RunConfig&, std::ostream&);
};

const CommandInfo kCommands[] = {
    {"single-use", "single-use output state, reservoir fidelity, error vs target", "1,2,10,100",
     "1", Format::kText, false, true, false, cmd_single_use},
    {"probs", "exact and approximate outcome-sequence probabilities", "50", "1:10", Format::kCsv,
     false, false, false, cmd_probs},
    {"discriminate", "naive vs exact reservoir-phase discrimination", "8", "1:6", Format::kJson,
     true, false, false, cmd_discriminate},
    {"fig1", "asymmetry of rho^N: exact, approximation, ln L bound", "12,17,27", "1:200",
     Format::kCsv, false, false, true, cmd_fig1},
    {"fig2", "trace norm of the repeatability error", "20,50,100,200", "1:10", Format::kCsv, false,
     true, false, cmd_fig2},
};

}  // namespace

std::vector<int> RunConfig::n_values() const {
  std::vector<int> v;
  for (int n = N.first; n <= N.last; n += stride) v.push_back(n);
  return v;
}

std::string RunConfig::stamp() const {
  std::string s = "catcoh " + command + " L=" + join_ints(L) + " N=" + std::to_string(N.first) +
                  ":" + std::to_string(N.last) + " stride=" + std::to_string(stride);
  if (command == "discriminate") s += " theta1=" + precise(theta1) + " theta2=" + precise(theta2);
  if (command == "single-use" || command == "fig2") s += " gate=" + gate_text;
  if (command == "fig1") {
    s += std::string(" eig_convention=") +
         (convention == EigenConvention::kEq12 ? "eq12" : "appendixA");
  }
  s += std::string(" format=") + format_name(format);
  return s;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    v.push_back(to_int(text.substr(pos, comma - pos), "integer list"));
    pos = comma + 1;
  }
  return v;
}

Range parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const int n = to_int(text, "range");
    return {n, n};
  }
  return {to_int(text.substr(0, colon), "range"), to_int(text.substr(colon + 1), "range")};
}

Complex parse_complex(std::string_view text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, pure_imag)) {
    const std::string im = m[1].str();
    return {0.0, im.empty() || im == "+" ? 1.0 : im == "-" ? -1.0 : std::stod(im)};
  }
  if (std::regex_match(s, m, re) && m[1].matched) {
    const double re_part = std::stod(m[1].str());
    double im_part = 0.0;
    if (m[2].matched) {
      im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im_part = -im_part;
    }
    return {re_part, im_part};
  }
  throw UsageError("bad complex number '" + s + "'");
}

QubitGate parse_gate(std::string_view text) {
  if (text == "hadamard") return QubitGate::hadamard_like();
  if (text == "identity") return QubitGate::identity();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw UsageError("bad gate '" + std::string(text) + "' (want hadamard, identity or a,b)");
  }
  const Complex a = parse_complex(text.substr(0, comma));
  const Complex b = parse_complex(text.substr(comma + 1));
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw UsageError("gate column (a,b) must satisfy |a|^2 + |b|^2 = 1");
  }
  return QubitGate::from_column(a, b);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"catcoh: catalytic coherence experiments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Raw {
    std::string L, N, gate = "hadamard", format, eig = "eq12", out;
    int stride = 1;
    double theta1 = 0.0, theta2 = std::numbers::pi / 2;
  };
  Raw raw;
  const CommandInfo* chosen = nullptr;
  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("--L", raw.L, "comma-separated reservoir sizes")->default_str(info.default_L);
    sub->add_option("--N", raw.N, "qubit count or range a:b")->default_str(info.default_N);
    sub->add_option("--stride", raw.stride, "step through the N range")->capture_default_str();
    sub->add_option("--out", raw.out, "output path (default stdout)");
    sub->add_option("--format", raw.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (info.uses_theta) {
      sub->add_option("--theta1", raw.theta1, "first reservoir phase")->capture_default_str();
      sub->add_option("--theta2", raw.theta2, "second reservoir phase")->capture_default_str();
    }
    if (info.uses_gate) {
      sub->add_option("--gate", raw.gate, "hadamard, identity, or first column a,b")
          ->capture_default_str();
    }
    if (info.uses_convention) {
      sub->add_option("--eig-convention", raw.eig, "eq12 or appendixA")
          ->check(CLI::IsMember({"eq12", "appendixA"}))
          ->capture_default_str();
    }
    sub->callback([&chosen, &info] { chosen = &info; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "catcoh: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    cfg.command = chosen->name;
    cfg.L = parse_int_list(raw.L.empty() ? chosen->default_L : raw.L);
    cfg.N = parse_range(raw.N.empty() ? chosen->default_N : raw.N);
    cfg.stride = raw.stride;
    cfg.theta1 = raw.theta1;
    cfg.theta2 = raw.theta2;
    cfg.gate_text = raw.gate;
    cfg.gate = parse_gate(raw.gate);
    cfg.format = raw.format.empty() ? chosen->default_format
                 : raw.format == "json" ? Format::kJson
                                        : Format::kCsv;
    cfg.convention = raw.eig == "eq12" ? EigenConvention::kEq12 : EigenConvention::kAppendixA;
    if (std::any_of(cfg.L.begin(), cfg.L.end(), [](int l) { return l < 1; })) {
      throw UsageError("--L values must be >= 1");
    }
    if (cfg.N.first < 1 || cfg.N.last < cfg.N.first) throw UsageError("--N range is empty or below 1");
    if (cfg.stride < 1) throw UsageError("--stride must be >= 1");
    if (!std::isfinite(cfg.theta1) || !std::isfinite(cfg.theta2)) {
      throw UsageError("--theta1/--theta2 must be finite");
    }

    // Buffer so that a failure midway leaves no partial file.
    std::ostringstream buf;
    chosen->body(cfg, buf);
    if (!raw.out.empty()) {
      std::ofstream f(raw.out, std::ios::binary);
      if (!f || !(f << buf.str()) || !f.flush()) {
        err << "catcoh: cannot write '" << raw.out << "'\n";
        return kExitInternal;
      }
    } else {
      out << buf.str();
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "catcoh: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "catcoh: parameter error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const CapacityError& e) {
    err << "catcoh: capacity error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const DomainError& e) {
    err << "catcoh: domain error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const WindowOverflowError& e) {
    err << "catcoh: window overflow: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::exception& e) {
    err << "catcoh: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace catcoh::cli
