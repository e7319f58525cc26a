// raman_cli.cpp
//
// Command-line harness: `scan` (time/phase witness scans with CSV/JSON
// output), `compare` (closed forms vs the Fock oracle at scaled amplitudes),
// `table1` (classification matrix plus diff against the published pattern).
//
// Exit codes: 0 success, 2 config error, 3 numerical-tolerance failure,
// 4 I/O error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "raman/scan.hpp"

namespace {

using namespace raman;

int exit_code_for(const RamanError& e) {
  switch (e.code()) {
    case ErrorCode::DimensionTooLarge:
    case ErrorCode::TailMassTooLarge:
    case ErrorCode::ToleranceNotMet:
      return 3;
    case ErrorCode::IoError:
      return 4;
    default:
      return 2;  // configuration / validation / parse errors
  }
}

struct CommonFlags {
  std::string config;
  std::string preset;
  std::string phi;
  double t_max = -1.0;
  int t_steps = -1;
  std::string frame;
  std::string out;
  std::string format;
  int jobs = -1;
  std::string reading;
  std::string f3;
};

void add_common(CLI::App* cmd, CommonFlags& fl) {
  cmd->add_option("--config", fl.config, "config file (flat key = value)");
  cmd->add_option("--preset", fl.preset,
                  "paper|spontaneous|partial-b|partial-c|partial-d");
  cmd->add_option("--phi", fl.phi, "comma list of phases (accepts pi, pi/2)");
  cmd->add_option("--t-max", fl.t_max, "scan end time, seconds");
  cmd->add_option("--t-steps", fl.t_steps, "grid points over (t_min, t_max]");
  cmd->add_option("--frame", fl.frame, "corotating|absolute");
  cmd->add_option("--out", fl.out, "output directory");
  cmd->add_option("--format", fl.format, "csv|json|both");
  cmd->add_option("--jobs", fl.jobs, "worker pool size");
  cmd->add_option("--reading", fl.reading, "literal|exact closed-form reading");
  cmd->add_option("--f3-reading", fl.f3, "sq|lin Duan |f3| reading");
}

ScanConfig make_config(const CommonFlags& fl) {
  ScanConfig cfg;
  if (!fl.config.empty()) {
    cfg = load_config(fl.config);
  } else if (!fl.preset.empty()) {
    cfg = load_preset(fl.preset);
  }
  std::string overrides;
  if (!fl.phi.empty()) overrides += "phi_set = " + fl.phi + "\n";
  if (fl.t_max > 0.0) overrides += "t_max = " + format_value(fl.t_max) + "\n";
  if (fl.t_steps > 0) overrides += "t_steps = " + std::to_string(fl.t_steps) + "\n";
  if (!fl.frame.empty()) overrides += "frame = " + fl.frame + "\n";
  if (!fl.out.empty()) overrides += "out_dir = " + fl.out + "\n";
  if (!fl.format.empty()) overrides += "format = " + fl.format + "\n";
  if (fl.jobs > 0) overrides += "jobs = " + std::to_string(fl.jobs) + "\n";
  if (!fl.reading.empty()) overrides += "reading = " + fl.reading + "\n";
  if (!fl.f3.empty()) overrides += "f3_reading = " + fl.f3 + "\n";
  if (!overrides.empty()) {
    // Re-parse on top of the loaded config by applying the override lines.
    ScanConfig merged = cfg;
    ScanConfig parsed = parse_config_text(overrides);
    // parse_config_text starts from defaults; copy just the overridden knobs.
    std::stringstream ss(overrides);
    std::string line;
    while (std::getline(ss, line)) {
      const std::string key = line.substr(0, line.find('='));
      if (key.find("phi_set") != std::string::npos) merged.phi_set = parsed.phi_set;
      else if (key.find("t_max") != std::string::npos) merged.t_max = parsed.t_max;
      else if (key.find("t_steps") != std::string::npos) merged.t_steps = parsed.t_steps;
      else if (key.find("frame") != std::string::npos) merged.params.frame = parsed.params.frame;
      else if (key.find("out_dir") != std::string::npos) merged.out_dir = parsed.out_dir;
      else if (key.find("format") != std::string::npos) merged.format = parsed.format;
      else if (key.find("jobs") != std::string::npos) merged.jobs = parsed.jobs;
      else if (key.find("f3_reading") != std::string::npos) merged.witness.f3 = parsed.witness.f3;
      else if (key.find("reading") != std::string::npos) merged.witness.reading = parsed.witness.reading;
    }
    cfg = merged;
  }
  if (cfg.out_dir == ".") {
    if (const char* env = std::getenv("RAMAN_OUT_DIR")) cfg.out_dir = env;
  }
  validate_config(cfg);
  return cfg;
}

int run_scan_cmd(const CommonFlags& fl) {
  const ScanConfig cfg = make_config(fl);
  const ScanResult result = run_scan(cfg);
  for (const auto& path : emit(result, cfg)) {
    std::cout << "wrote " << path << "\n";
  }
  for (const auto& c : result.cells) {
    std::cout << pair_name(c.pair) << " " << criterion_name(c.criterion)
              << " phi=" << format_value(c.phi) << " -> "
              << (c.result.entangled ? "entangled" : "nc")
              << " (min " << format_value(c.result.min_value) << " at t="
              << format_value(c.result.min_t) << ")\n";
  }
  return 0;
}

int run_compare_cmd(const CommonFlags& fl, int cutoff, double alpha_scale,
                    double tol) {
  ScanConfig cfg = make_config(fl);
  if (cutoff > 0) cfg.oracle.cutoffs = {cutoff, cutoff, cutoff, cutoff};
  if (alpha_scale > 0.0) cfg.oracle.alpha_scale = alpha_scale;
  if (tol > 0.0) cfg.oracle.tol = tol;
  const CompareReport rep = compare_report(cfg);
  std::cout << "pair crit phi literal_max_err exact_max_err literal_ratio "
               "exact_ratio range_max literal_tracks exact_tracks f3\n";
  bool all_exact_track = true;
  for (const auto& f : rep.fits) {
    std::cout << pair_name(f.pair) << " " << criterion_name(f.criterion)
              << " " << format_value(f.phi) << " "
              << format_value(f.literal_max_err) << " "
              << format_value(f.exact_max_err) << " "
              << format_value(f.literal_ratio) << " "
              << format_value(f.exact_ratio) << " "
              << format_value(f.range_max_mag) << " "
              << (f.literal_tracks ? "yes" : "NO") << " "
              << (f.exact_tracks ? "yes" : "NO") << " "
              << (f.f3_verdict.empty() ? "-" : f.f3_verdict) << "\n";
    all_exact_track = all_exact_track && f.exact_tracks;
  }
  return all_exact_track ? 0 : 3;
}

int run_table1_cmd(const CommonFlags& fl) {
  const ScanConfig cfg = make_config(fl);
  const Table1Report rep = table1_report(cfg);
  std::cout << "pair crit phi expected got got_5x min min_5x status\n";
  for (const auto& c : rep.cells) {
    std::cout << pair_name(c.pair) << " " << criterion_name(c.criterion)
              << " " << format_value(c.phi) << " "
              << (c.expected ? "entangled" : "nc") << " "
              << (c.got ? "entangled" : "nc") << " "
              << (c.got_5x ? "entangled" : "nc") << " "
              << format_value(c.min_value) << " "
              << format_value(c.min_value_5x) << " " << c.status << "\n";
  }
  std::cout << "matches=" << rep.matches
            << " range_sensitive=" << rep.range_sensitive
            << " mismatches=" << rep.mismatches << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Raman intermodal entanglement witness harness"};
  app.require_subcommand(1);

  CommonFlags scan_fl, cmp_fl, tab_fl;
  int cutoff = -1;
  double alpha_scale = -1.0, tol = -1.0;

  CLI::App* scan_cmd = app.add_subcommand("scan", "witness time/phase scan");
  add_common(scan_cmd, scan_fl);
  CLI::App* cmp_cmd =
      app.add_subcommand("compare", "closed forms vs Fock oracle");
  add_common(cmp_cmd, cmp_fl);
  cmp_cmd->add_option("--cutoff", cutoff, "uniform per-mode Fock cutoff");
  cmp_cmd->add_option("--alpha-scale", alpha_scale,
                      "multiplier on the scaled oracle amplitudes");
  cmp_cmd->add_option("--tol", tol, "propagator tolerance");
  CLI::App* tab_cmd =
      app.add_subcommand("table1", "classification matrix + expected diff");
  add_common(tab_cmd, tab_fl);

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan_cmd->parsed()) return run_scan_cmd(scan_fl);
    if (cmp_cmd->parsed()) return run_compare_cmd(cmp_fl, cutoff, alpha_scale, tol);
    if (tab_cmd->parsed()) return run_table1_cmd(tab_fl);
  } catch (const RamanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
