// scan.cpp
//
// Config parsing, scans, classification table, oracle comparison and
// CSV/JSON emission. Output is deterministic: no timestamps, fixed key
// ordering, fixed %.17g number formatting.

#include "raman/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "raman/coefficients.hpp"
#include "raman/fock.hpp"

namespace raman {

namespace {

using nlohmann::json;

constexpr const char* kCodeVersion = "raman-witness 1.0.0";
constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& v, int line) {
  size_t pos = 0;
  double d;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != v.size() || v.empty()) {
    throw RamanError(ErrorCode::ParseError,
                     "line " + std::to_string(line) + ": not a number: " + v);
  }
  return d;
}

int parse_int(const std::string& v, int line) {
  const double d = parse_double(v, line);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw RamanError(ErrorCode::ParseError,
                     "line " + std::to_string(line) + ": not an integer: " + v);
  }
  return i;
}

Criterion criterion_from_name(const std::string& name, int line) {
  if (name == "hz1") return Criterion::HZ1;
  if (name == "hz2") return Criterion::HZ2;
  if (name == "duan") return Criterion::Duan;
  throw RamanError(ErrorCode::ParseError,
                   "line " + std::to_string(line) + ": unknown criterion: " +
                       name);
}

Process process_from_name(const std::string& name, int line) {
  if (name == "spontaneous") return Process::Spontaneous;
  if (name == "partial") return Process::PartiallySpontaneous;
  if (name == "stimulated") return Process::Stimulated;
  throw RamanError(ErrorCode::ParseError,
                   "line " + std::to_string(line) + ": unknown process: " +
                       name);
}

const char* process_name(Process p) {
  switch (p) {
    case Process::Spontaneous: return "spontaneous";
    case Process::PartiallySpontaneous: return "partial";
    case Process::Stimulated: return "stimulated";
  }
  return "??";
}

CoherentInputs inputs_for(const ScanConfig& cfg, double phi) {
  return CoherentInputs::from_magnitudes(cfg.alpha_mag[0], cfg.alpha_mag[1],
                                         cfg.alpha_mag[2], cfg.alpha_mag[3],
                                         phi);
}

// Runs fn(i) for i in [0, n) over `jobs` workers; fn writes to disjoint slots.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  futs.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < n; i += jobs) fn(i);
    }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace

std::vector<double> ScanConfig::t_grid() const {
  std::vector<double> ts(t_steps);
  const double step = (t_max - t_min) / t_steps;
  for (int i = 0; i < t_steps; ++i) ts[i] = t_min + step * (i + 1);
  return ts;
}

ScanConfig load_preset(const std::string& name) {
  ScanConfig cfg;  // defaults are the paper preset
  if (name == "paper") {
    return cfg;
  }
  if (name == "spontaneous") {
    cfg.alpha_mag = {10.0, 0.0, 0.0, 0.0};
    cfg.process = Process::Spontaneous;
    return cfg;
  }
  if (name == "partial-b" || name == "partial-c" || name == "partial-d") {
    const char mode = name.back();
    cfg.alpha_mag = {10.0, mode == 'b' ? 8.0 : 0.0, mode == 'c' ? 0.01 : 0.0,
                     mode == 'd' ? 1.0 : 0.0};
    cfg.process = Process::PartiallySpontaneous;
    return cfg;
  }
  throw RamanError(ErrorCode::ParseError, "unknown preset: " + name);
}

ScanConfig parse_config_text(const std::string& text) {
  ScanConfig cfg;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw RamanError(ErrorCode::ParseError,
                       "line " + std::to_string(line) + ": expected key = value");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key == "g") cfg.params.g = parse_double(val, line);
    else if (key == "chi") cfg.params.chi = parse_double(val, line);
    else if (key == "d_omega1") cfg.params.d_omega1 = parse_double(val, line);
    else if (key == "d_omega2") cfg.params.d_omega2 = parse_double(val, line);
    else if (key == "frame") {
      if (val == "corotating") cfg.params.frame = Frame::CoRotating;
      else if (val == "absolute") cfg.params.frame = Frame::Absolute;
      else throw RamanError(ErrorCode::ParseError,
                            "line " + std::to_string(line) +
                                ": unknown frame: " + val);
    }
    else if (key == "omega_a") cfg.params.omega[0] = parse_double(val, line);
    else if (key == "omega_b") cfg.params.omega[1] = parse_double(val, line);
    else if (key == "omega_c") cfg.params.omega[2] = parse_double(val, line);
    else if (key == "omega_d") cfg.params.omega[3] = parse_double(val, line);
    else if (key == "alpha1") cfg.alpha_mag[0] = parse_double(val, line);
    else if (key == "alpha2") cfg.alpha_mag[1] = parse_double(val, line);
    else if (key == "alpha3") cfg.alpha_mag[2] = parse_double(val, line);
    else if (key == "alpha4") cfg.alpha_mag[3] = parse_double(val, line);
    else if (key == "process") cfg.process = process_from_name(val, line);
    else if (key == "t_min") cfg.t_min = parse_double(val, line);
    else if (key == "t_max") cfg.t_max = parse_double(val, line);
    else if (key == "t_steps") cfg.t_steps = parse_int(val, line);
    else if (key == "phi_set") {
      cfg.phi_set.clear();
      for (const auto& p : split(val, ',')) {
        if (p == "pi") cfg.phi_set.push_back(kPi);
        else if (p == "pi/2") cfg.phi_set.push_back(kPi / 2.0);
        else cfg.phi_set.push_back(parse_double(p, line));
      }
    }
    else if (key == "pairs") {
      cfg.pairs.clear();
      for (const auto& p : split(val, ',')) cfg.pairs.push_back(pair_from_name(p));
    }
    else if (key == "criteria") {
      cfg.criteria.clear();
      for (const auto& p : split(val, ','))
        cfg.criteria.push_back(criterion_from_name(p, line));
    }
    else if (key == "reading") {
      if (val == "literal") cfg.witness.reading = Reading::PaperLiteral;
      else if (val == "exact") cfg.witness.reading = Reading::SecondOrderExact;
      else throw RamanError(ErrorCode::ParseError,
                            "line " + std::to_string(line) +
                                ": unknown reading: " + val);
    }
    else if (key == "f3_reading") {
      if (val == "sq") cfg.witness.f3 = F3Reading::Squared;
      else if (val == "lin") cfg.witness.f3 = F3Reading::Linear;
      else throw RamanError(ErrorCode::ParseError,
                            "line " + std::to_string(line) +
                                ": unknown f3_reading: " + val);
    }
    else if (key == "oracle_cutoffs") {
      const auto parts = split(val, ',');
      if (parts.size() == 1) {
        const int c = parse_int(parts[0], line);
        cfg.oracle.cutoffs = {c, c, c, c};
      } else if (parts.size() == 4) {
        for (int m = 0; m < 4; ++m)
          cfg.oracle.cutoffs[m] = parse_int(parts[m], line);
      } else {
        throw RamanError(ErrorCode::ParseError,
                         "line " + std::to_string(line) +
                             ": oracle_cutoffs wants 1 or 4 integers");
      }
    }
    else if (key == "oracle_alphas") {
      const auto parts = split(val, ',');
      if (parts.size() != 4) {
        throw RamanError(ErrorCode::ParseError,
                         "line " + std::to_string(line) +
                             ": oracle_alphas wants 4 magnitudes");
      }
      for (int m = 0; m < 4; ++m)
        cfg.oracle.alpha[m] = parse_double(parts[m], line);
    }
    else if (key == "oracle_alpha_scale")
      cfg.oracle.alpha_scale = parse_double(val, line);
    else if (key == "oracle_tol") cfg.oracle.tol = parse_double(val, line);
    else if (key == "oracle_tail_bound")
      cfg.oracle.tail_bound = parse_double(val, line);
    else if (key == "out_dir") cfg.out_dir = val;
    else if (key == "format") cfg.format = val;
    else if (key == "jobs") cfg.jobs = parse_int(val, line);
    else {
      throw RamanError(ErrorCode::ParseError,
                       "line " + std::to_string(line) + ": unknown key: " + key);
    }
  }
  validate_config(cfg);
  return cfg;
}

ScanConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw RamanError(ErrorCode::IoError, "cannot open config: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void validate_config(const ScanConfig& cfg) {
  validate_params(cfg.params);
  if (cfg.t_min < 0.0 || cfg.t_max <= cfg.t_min) {
    throw RamanError(ErrorCode::ValidationError,
                     "require 0 <= t_min < t_max");
  }
  if (cfg.t_steps < 2) {
    throw RamanError(ErrorCode::ValidationError, "t_steps must be >= 2");
  }
  const double gt = std::max(cfg.params.g, cfg.params.chi) * cfg.t_max;
  if (gt > 0.5) {
    throw RamanError(ErrorCode::ValidationError,
                     "max(g,chi)*t_max > 0.5: far outside the perturbative "
                     "validity range");
  }
  if (gt > 0.1) {
    std::cerr << "warning: max(g,chi)*t_max = " << gt
              << " exceeds the declared validity bound 0.1\n";
  }
  if (cfg.phi_set.empty() || cfg.pairs.empty() || cfg.criteria.empty()) {
    throw RamanError(ErrorCode::ValidationError,
                     "phi_set, pairs and criteria must be nonempty");
  }
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "both") {
    throw RamanError(ErrorCode::ValidationError,
                     "format must be csv, json or both");
  }
  if (cfg.jobs < 1) {
    throw RamanError(ErrorCode::ValidationError, "jobs must be >= 1");
  }
  for (double m : cfg.alpha_mag) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw RamanError(ErrorCode::ValidationError,
                       "alpha magnitudes must be finite and >= 0");
    }
  }
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json provenance(const ScanConfig& cfg) {
  json j;
  j["code_version"] = kCodeVersion;
  j["frame"] =
      cfg.params.frame == Frame::CoRotating ? "corotating" : "absolute";
  j["g"] = cfg.params.g;
  j["chi"] = cfg.params.chi;
  j["d_omega1"] = cfg.params.d_omega1;
  j["d_omega2"] = cfg.params.d_omega2;
  j["alpha_mag"] = cfg.alpha_mag;
  j["process"] = process_name(cfg.process);
  j["t_min"] = cfg.t_min;
  j["t_max"] = cfg.t_max;
  j["t_steps"] = cfg.t_steps;
  j["phi_set"] = cfg.phi_set;
  j["reading"] = cfg.witness.reading == Reading::PaperLiteral
                     ? "literal"
                     : "exact";
  j["f3_reading"] =
      cfg.witness.f3 == F3Reading::Squared ? "sq" : "lin";
  std::vector<std::string> pn, cn;
  for (auto p : cfg.pairs) pn.push_back(pair_name(p));
  for (auto c : cfg.criteria) cn.push_back(criterion_name(c));
  j["pairs"] = pn;
  j["criteria"] = cn;
  return j;
}

}  // namespace

ScanResult run_scan(const ScanConfig& cfg) {
  validate_config(cfg);
  const RamanParams params = validate_params(cfg.params);
  const std::vector<double> ts = cfg.t_grid();

  struct Task {
    ModePair pair;
    Criterion crit;
    double phi;
  };
  std::vector<Task> tasks;
  for (auto pair : cfg.pairs)
    for (auto crit : cfg.criteria)
      for (double phi : cfg.phi_set) tasks.push_back({pair, crit, phi});

  std::vector<std::vector<double>> values(tasks.size());
  std::vector<Classification> cls(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), cfg.jobs, [&](int i) {
    const Task& task = tasks[i];
    const CoherentInputs a =
        specialize(inputs_for(cfg, task.phi), cfg.process);
    std::vector<double> vals(ts.size());
    double max_abs = 0.0;
    Classification c;
    c.min_value = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < ts.size(); ++k) {
      const CoefficientSet coef = compute_coefficients(params, ts[k]);
      vals[k] = evaluate_witness(task.pair, task.crit, coef, a, cfg.witness);
      max_abs = std::max(max_abs, std::abs(vals[k]));
      if (vals[k] < c.min_value) {
        c.min_value = vals[k];
        c.min_t = ts[k];
      }
    }
    c.delta = 1e-6 * std::max(1.0, max_abs);
    c.entangled = c.min_value < -c.delta;
    values[i] = std::move(vals);
    cls[i] = c;
  });

  ScanResult out;
  out.rows.reserve(tasks.size() * ts.size());
  for (size_t i = 0; i < tasks.size(); ++i) {
    const CoherentInputs a =
        specialize(inputs_for(cfg, tasks[i].phi), cfg.process);
    const Process proc = classify_process(a);
    for (size_t k = 0; k < ts.size(); ++k) {
      out.rows.push_back({tasks[i].pair, tasks[i].crit, ts[k], tasks[i].phi,
                          values[i][k], proc});
    }
    out.cells.push_back({tasks[i].pair, tasks[i].crit, tasks[i].phi, cls[i]});
  }
  out.provenance_json = provenance(cfg).dump(2);
  return out;
}

std::vector<std::string> emit(const ScanResult& result, const ScanConfig& cfg) {
  std::vector<std::string> written;
  const bool csv = cfg.format == "csv" || cfg.format == "both";
  const bool js = cfg.format == "json" || cfg.format == "both";

  auto cell_label = [&](ModePair pair, Criterion crit, double phi) {
    for (const auto& c : result.cells) {
      if (pair_name(c.pair) == std::string(pair_name(pair)) &&
          c.criterion == crit && c.phi == phi) {
        return c.result.entangled ? "entangled" : "nc";
      }
    }
    return "nc";
  };

  if (csv) {
    const std::string path = cfg.out_dir + "/scan.csv";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw RamanError(ErrorCode::IoError, "cannot write " + path);
    f << "pair,criterion,phi,t,value,classification\n";
    for (const auto& r : result.rows) {
      f << pair_name(r.pair) << ',' << criterion_name(r.criterion) << ','
        << format_value(r.phi) << ',' << format_value(r.t) << ','
        << format_value(r.value) << ','
        << cell_label(r.pair, r.criterion, r.phi) << '\n';
    }
    if (!f) throw RamanError(ErrorCode::IoError, "write failed: " + path);
    written.push_back(path);
  }
  if (js) {
    json root;
    root["provenance"] = json::parse(result.provenance_json);
    json data;
    for (const auto& c : result.cells) {
      json cell;
      cell["classification"] = c.result.entangled ? "entangled" : "nc";
      cell["min_value"] = format_value(c.result.min_value);
      cell["min_t"] = format_value(c.result.min_t);
      cell["delta"] = format_value(c.result.delta);
      std::vector<std::string> tv, vv;
      for (const auto& r : result.rows) {
        if (pair_name(r.pair) == std::string(pair_name(c.pair)) &&
            r.criterion == c.criterion && r.phi == c.phi) {
          tv.push_back(format_value(r.t));
          vv.push_back(format_value(r.value));
        }
      }
      cell["t"] = tv;
      cell["value"] = vv;
      data[pair_name(c.pair)][criterion_name(c.criterion)]
          [format_value(c.phi)] = cell;
    }
    root["data"] = data;
    const std::string path = cfg.out_dir + "/scan.json";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw RamanError(ErrorCode::IoError, "cannot write " + path);
    f << root.dump(2) << '\n';
    if (!f) throw RamanError(ErrorCode::IoError, "write failed: " + path);
    written.push_back(path);
  }
  return written;
}

bool expected_table1(ModePair pair, Criterion crit, double phi) {
  // Column order phi = 0, pi/2, pi.
  const int iphi = phi < kPi / 4.0 ? 0 : (phi < 3.0 * kPi / 4.0 ? 1 : 2);
  const std::string p = pair_name(pair);
  struct Row { const char* pair; bool e[3]; };
  static const Row hz1_rows[] = {
      {"ab", {false, false, false}}, {"ac", {true, true, true}},
      {"ad", {true, true, true}},    {"bc", {false, true, false}},
      {"bd", {true, false, true}},   {"cd", {false, false, false}},
  };
  static const Row hz2_rows[] = {
      {"ab", {false, false, false}}, {"ac", {false, true, false}},
      {"ad", {false, false, false}}, {"bc", {true, false, true}},
      {"bd", {false, true, false}},  {"cd", {false, false, false}},
  };
  static const Row duan_rows[] = {
      {"ab", {false, false, false}}, {"ac", {false, false, false}},
      {"ad", {true, false, false}},  {"bc", {false, false, false}},
      {"bd", {false, false, false}}, {"cd", {false, false, false}},
  };
  const Row* rows = crit == Criterion::HZ1
                        ? hz1_rows
                        : (crit == Criterion::HZ2 ? hz2_rows : duan_rows);
  for (int i = 0; i < 6; ++i) {
    if (p == rows[i].pair) return rows[i].e[iphi];
  }
  return false;
}

Table1Report table1_report(const ScanConfig& cfg) {
  Table1Report rep;
  const RamanParams params = validate_params(cfg.params);
  const std::vector<double> ts = cfg.t_grid();
  ScanConfig cfg5 = cfg;
  cfg5.t_max = cfg.t_min + 5.0 * (cfg.t_max - cfg.t_min);
  const std::vector<double> ts5 = cfg5.t_grid();

  for (auto pair : cfg.pairs) {
    for (auto crit : cfg.criteria) {
      for (double phi : cfg.phi_set) {
        const CoherentInputs a = specialize(inputs_for(cfg, phi), cfg.process);
        const Classification c =
            classify(pair, crit, params, a, ts, cfg.witness);
        const Classification c5 =
            classify(pair, crit, params, a, ts5, cfg.witness);
        Table1Cell cell;
        cell.pair = pair;
        cell.criterion = crit;
        cell.phi = phi;
        cell.expected = expected_table1(pair, crit, phi);
        cell.got = c.entangled;
        cell.got_5x = c5.entangled;
        cell.min_value = c.min_value;
        cell.min_value_5x = c5.min_value;
        if (cell.got == cell.expected) {
          cell.status = "match";
          ++rep.matches;
        } else if (cell.got_5x == cell.expected) {
          cell.status = "range-sensitive";
          ++rep.range_sensitive;
        } else {
          cell.status = "mismatch";
          ++rep.mismatches;
        }
        rep.cells.push_back(cell);
      }
    }
  }
  return rep;
}

CompareReport compare_report(const ScanConfig& cfg) {
  validate_config(cfg);
  const RamanParams params = validate_params(cfg.params);

  // Scaled amplitudes for the oracle; the closed-form side uses the same.
  std::array<double, 4> mag = cfg.oracle.alpha;
  for (double& m : mag) m *= cfg.oracle.alpha_scale;
  for (double m : mag) {
    if (m > 1.5) {
      throw RamanError(ErrorCode::ValidationError,
                       "scaled amplitudes must stay <= 1.5 for the oracle");
    }
  }

  const FockSpace space = build_space(cfg.oracle.cutoffs);
  const SparseOperator H = build_hamiltonian(params, space);
  const std::array<double, 4> omega = oracle_frequencies(params);
  const std::vector<double> ts = cfg.t_grid();

  CompareReport rep;
  for (double phi : cfg.phi_set) {
    const CoherentInputs a = CoherentInputs::from_magnitudes(
        mag[0], mag[1], mag[2], mag[3], phi);
    double tail = 0.0;
    QuantumState psi = coherent_state(a, space, &tail, cfg.oracle.tail_bound);

    struct Acc {
      std::vector<double> err_lit, err_exact, err_sq, err_lin;
      double range_max = 0.0;
    };
    std::map<std::pair<std::string, Criterion>, Acc> acc;

    double t_prev = 0.0;
    for (double t : ts) {
      psi = evolve(psi, H, t - t_prev, cfg.oracle.tol * (t - t_prev) /
                                           (cfg.t_max - cfg.t_min));
      t_prev = t;
      const CoefficientSet coef = compute_coefficients(params, t);
      for (auto pair : cfg.pairs) {
        for (auto crit : cfg.criteria) {
          const double orc = oracle_witness(pair, crit, psi, omega, t);
          WitnessOptions lit{Reading::PaperLiteral, cfg.witness.f3};
          WitnessOptions exact{Reading::SecondOrderExact, cfg.witness.f3};
          const double v_lit = evaluate_witness(pair, crit, coef, a, lit);
          const double v_exact = evaluate_witness(pair, crit, coef, a, exact);
          CompareRow row{pair, crit, phi, t, v_lit, orc,
                         std::abs(v_lit - orc),
                         std::abs(v_lit - orc) / std::max(1e-300, std::abs(orc))};
          rep.rows.push_back(row);
          Acc& ac = acc[{pair_name(pair), crit}];
          ac.err_lit.push_back(std::abs(v_lit - orc));
          ac.err_exact.push_back(std::abs(v_exact - orc));
          if (crit == Criterion::Duan) {
            WitnessOptions sq{Reading::PaperLiteral, F3Reading::Squared};
            WitnessOptions lin{Reading::PaperLiteral, F3Reading::Linear};
            ac.err_sq.push_back(
                std::abs(evaluate_witness(pair, crit, coef, a, sq) - orc));
            ac.err_lin.push_back(
                std::abs(evaluate_witness(pair, crit, coef, a, lin) - orc));
          }
          ac.range_max = std::max(ac.range_max, std::abs(orc));
        }
      }
    }

    // Third-order fit: dyadic error-halving ratios over the top three
    // octaves of the grid (grid points nearest t_max/2, /4, /8; exact when
    // t_steps is divisible by 8). The reported ratio is the best of the
    // three: higher-order oscillatory terms can locally flatten the error
    // curve at one octave, but a genuine low-order defect stays near its
    // t^2 ratio of 4 at all of them.
    auto nearest = [&](double target) {
      size_t idx = 0;
      double best = 1e300;
      for (size_t k = 0; k < ts.size(); ++k) {
        const double d = std::abs(ts[k] - target);
        if (d < best) {
          best = d;
          idx = k;
        }
      }
      return idx;
    };
    const std::array<size_t, 4> oct{nearest(ts.back() / 8.0),
                                    nearest(ts.back() / 4.0),
                                    nearest(ts.back() / 2.0),
                                    ts.size() - 1};
    for (auto pair : cfg.pairs) {
      for (auto crit : cfg.criteria) {
        const Acc& ac = acc[{pair_name(pair), crit}];
        CompareFit fit;
        fit.pair = pair;
        fit.criterion = crit;
        fit.phi = phi;
        fit.range_max_mag = ac.range_max;
        // Resolution floor: below 0.01% of the witness's own range the
        // comparison is dominated by the oracle's truncation and propagator
        // bias, so the halving ratio carries no information. Transcription
        // defects produce errors comparable to the range itself, four orders
        // of magnitude above this floor.
        const double floor = std::max(1e-11, 1e-4 * ac.range_max);
        auto ratio = [&](const std::vector<double>& e) {
          double best = 0.0;
          for (int k = 0; k < 3; ++k) {
            best = std::max(best,
                            e[oct[k + 1]] / std::max(e[oct[k]], 1e-300));
          }
          return best;
        };
        auto tracks = [&](const std::vector<double>& e) {
          const double max_err = *std::max_element(e.begin(), e.end());
          // Third order or better: halving t shrinks the error by >= 6x,
          // unless the error sits below the resolvable floor entirely.
          return (max_err <= floor || ratio(e) >= 6.0) &&
                 max_err <= 0.05 * std::max(ac.range_max, 1e-300);
        };
        fit.literal_ratio = ratio(ac.err_lit);
        fit.exact_ratio = ratio(ac.err_exact);
        fit.literal_max_err =
            *std::max_element(ac.err_lit.begin(), ac.err_lit.end());
        fit.exact_max_err =
            *std::max_element(ac.err_exact.begin(), ac.err_exact.end());
        fit.literal_tracks = tracks(ac.err_lit);
        fit.exact_tracks = tracks(ac.err_exact);
        if (crit == Criterion::Duan) {
          const double sq =
              *std::max_element(ac.err_sq.begin(), ac.err_sq.end());
          const double lin =
              *std::max_element(ac.err_lin.begin(), ac.err_lin.end());
          fit.f3_verdict = sq < lin ? "sq" : (lin < sq ? "lin" : "tie");
        }
        rep.fits.push_back(fit);
      }
    }
  }
  return rep;
}

}  // namespace raman
