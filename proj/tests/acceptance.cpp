// acceptance.cpp
//
// Integration acceptance suite: one test case per acceptance criterion,
// each printing a single "CRITERION n: PASS|FAIL" line plus the failing
// details. Tolerances are pinned here, not configurable.
//
// Criteria 6 and 7 run against the literal closed-form transcriptions by
// design: where those disagree with the brute-force oracle or the published
// classification table, the disagreement is reported as a genuine FAIL (the
// derived second-order reading is reported alongside as supplementary
// evidence), not patched over.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "raman/coefficients.hpp"
#include "raman/fock.hpp"
#include "raman/scan.hpp"
#include "raman/witness.hpp"

using namespace raman;
namespace fs = std::filesystem;

namespace {

RamanParams paper_params() {
  RamanParams p;
  p.g = 1e5;
  p.chi = 1e5;
  p.d_omega1 = 1e5;
  p.d_omega2 = 1.9e5;
  return p;
}

RamanParams random_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> mag(0.2, 3.0);
  std::uniform_int_distribution<int> sign(0, 1);
  RamanParams p;
  p.g = mag(rng) * 1e5;
  p.chi = mag(rng) * 1e5;
  p.d_omega1 = (sign(rng) ? 1.0 : -1.0) * mag(rng) * 1e5;
  p.d_omega2 = p.d_omega1 * (1.3 + mag(rng));
  return p;
}

void report(int n, const std::vector<std::string>& failures) {
  std::cout << "CRITERION " << n << ": "
            << (failures.empty() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : failures) std::cout << "  - " << f << "\n";
  std::cout.flush();
}

std::pair<double, double> conserved(const QuantumState& psi) {
  const FockSpace& s = *psi.space;
  double q1 = 0.0, q2 = 0.0;
  for (std::int64_t i = 0; i < s.dim; ++i) {
    const auto n = s.multi_index(i);
    const double w = std::norm(psi.amplitudes[i]);
    q1 += w * (n[0] + n[1] + n[3]);
    q2 += w * (n[2] - n[1] + n[3]);
  }
  return {q1, q2};
}

std::string combo(ModePair pair, Criterion crit) {
  return std::string(pair_name(pair)) + "/" + criterion_name(crit);
}

}  // namespace

TEST_CASE("criterion 1: exact identity coefficients at t = 0") {
  std::vector<std::string> failures;
  for (Frame frame : {Frame::CoRotating, Frame::Absolute}) {
    RamanParams p = paper_params();
    p.frame = frame;
    if (frame == Frame::Absolute) {
      p.omega = {1e8 + 2e8 - p.d_omega1, 1e8, 2e8, 0.0};
      p.omega[3] = p.omega[0] + p.omega[2] - p.d_omega2;
    }
    const CoefficientSet c = compute_coefficients(validate_params(p), 0.0);
    bool ok = c.f[1] == cplx(1, 0) && c.gc[1] == cplx(1, 0) &&
              c.h[1] == cplx(1, 0) && c.l[1] == cplx(1, 0);
    for (int k = 2; k <= 8; ++k) ok = ok && c.f[k] == cplx(0, 0);
    for (int k = 2; k <= 6; ++k) ok = ok && c.gc[k] == cplx(0, 0);
    for (int k = 2; k <= 8; ++k) ok = ok && c.h[k] == cplx(0, 0);
    for (int k = 2; k <= 6; ++k) ok = ok && c.l[k] == cplx(0, 0);
    if (!ok) {
      failures.push_back(std::string("non-identity set at t = 0, frame ") +
                         (frame == Frame::CoRotating ? "corotating"
                                                     : "absolute"));
    }
  }
  report(1, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 1");
}

TEST_CASE("criterion 2: pair identities over 1000 random samples") {
  std::vector<std::string> failures;
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> time(0.0, 1e-6);
  auto rel_ok = [](cplx got, cplx want) {
    return std::abs(got - want) <= 1e-14 * std::max(1e-300, std::abs(want));
  };
  for (int s = 0; s < 1000 && failures.empty(); ++s) {
    const RamanParams p = validate_params(random_params(rng));
    const CoefficientSet c = compute_coefficients(p, time(rng));
    if (!rel_ok(c.f[6], c.f[5])) failures.push_back("f6 != f5");
    if (!rel_ok(c.f[8], -c.f[7])) failures.push_back("f8 != -f7");
    if (!rel_ok(c.gc[6], -c.gc[5])) failures.push_back("g6 != -g5");
    if (!rel_ok(c.h[6], -c.h[5])) failures.push_back("h6 != -h5");
    if (!rel_ok(c.h[8], -c.h[7])) failures.push_back("h8 != -h7");
    if (!rel_ok(c.l[6], c.l[5])) failures.push_back("l6 != l5");
  }
  report(2, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 2");
}

TEST_CASE("criterion 3: spontaneous ab witness equals |g2|^2 |alpha1|^4") {
  std::vector<std::string> failures;
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> mag(0.5, 12.0);
  std::uniform_real_distribution<double> phase(0.0, 6.28);
  for (int s = 0; s < 200 && failures.empty(); ++s) {
    const RamanParams p = validate_params(random_params(rng));
    const double t = 0.1 / std::max(p.g, p.chi) * (0.1 + 0.9 * phase(rng) / 6.28);
    const double m1 = mag(rng);
    const CoherentInputs a =
        CoherentInputs::from_magnitudes(m1, 0.0, 0.0, 0.0, phase(rng));
    const double got = hz1_witness(kAllPairs[0], p, a, t);
    const CoefficientSet c = compute_coefficients(p, t);
    const double want = std::norm(c.gc[2]) * std::pow(m1, 4);
    if (got < 0.0 ||
        std::abs(got - want) > 1e-12 * std::max(1e-300, std::abs(want))) {
      std::ostringstream os;
      os << "sample " << s << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
  report(3, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 3");
}

TEST_CASE("criterion 4: partial-spontaneous sign flip at |alpha2| = |alpha1|") {
  std::vector<std::string> failures;
  const RamanParams p = validate_params(paper_params());
  const double t = 7e-7;
  for (double m1 : {0.8, 3.0, 10.0}) {
    auto w = [&](double m2) {
      const CoherentInputs a =
          CoherentInputs::from_magnitudes(m1, m2, 0.0, 0.0, 0.4);
      return hz1_witness(kAllPairs[0], p, a, t);
    };
    double lo = 0.2 * m1, hi = 4.0 * m1;
    if (!(w(lo) > 0.0 && w(hi) < 0.0)) {
      failures.push_back("no sign change bracketing |alpha1| = " +
                         std::to_string(m1));
      continue;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * m1; ++it) {
      const double mid = 0.5 * (lo + hi);
      (w(mid) > 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (std::abs(root - m1) > 1e-10) {
      std::ostringstream os;
      os << "zero crossing at |alpha2| = " << root << " vs |alpha1| = " << m1;
      failures.push_back(os.str());
    }
  }
  report(4, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 4");
}

TEST_CASE("criterion 5: oracle baseline (t = 0 zeros, conservation, norm)") {
  std::vector<std::string> failures;
  const RamanParams p = validate_params(paper_params());

  // t = 0: separable product state, every witness vanishes to 1e-10.
  // Cutoffs sized so the per-mode truncation bias sits well below the bound.
  {
    const FockSpace s = build_space({16, 16, 8, 10});
    const CoherentInputs a =
        CoherentInputs::from_magnitudes(1.0, 0.8, 0.01, 0.5, 0.7);
    const QuantumState psi = coherent_state(a, s);
    const std::array<double, 4> w = oracle_frequencies(p);
    for (const auto& pair : kAllPairs) {
      for (Criterion c : {Criterion::HZ1, Criterion::HZ2, Criterion::Duan}) {
        const double v = oracle_witness(pair, c, psi, w, 0.0);
        if (std::abs(v) > 1e-10) {
          std::ostringstream os;
          os << combo(pair, c) << " at t = 0: " << v;
          failures.push_back(os.str());
        }
      }
    }
  }

  // Full scaled evolution at cutoffs 12^4: norm drift < 1e-9,
  // conserved-charge drift < 1e-8.
  {
    const FockSpace s = build_space({12, 12, 12, 12});
    const SparseOperator H = build_hamiltonian(p, s);
    const CoherentInputs a =
        CoherentInputs::from_magnitudes(1.0, 0.8, 0.01, 0.5, 0.0);
    QuantumState psi = coherent_state(a, s);
    const auto [q1_0, q2_0] = conserved(psi);
    double norm_drift = 0.0;
    for (int step = 0; step < 8; ++step) {
      psi = evolve(psi, H, 1.25e-7);
      norm_drift = std::max(norm_drift, std::abs(psi.norm() - 1.0));
    }
    const auto [q1, q2] = conserved(psi);
    if (norm_drift >= 1e-9) {
      failures.push_back("norm drift " + std::to_string(norm_drift));
    }
    if (std::abs(q1 - q1_0) >= 1e-8) {
      failures.push_back("<Na+Nb+Nd> drift " + std::to_string(q1 - q1_0));
    }
    if (std::abs(q2 - q2_0) >= 1e-8) {
      failures.push_back("<Nc-Nb+Nd> drift " + std::to_string(q2 - q2_0));
    }
  }
  report(5, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 5");
}

TEST_CASE("criterion 6: closed forms track the oracle at third order") {
  // Pinned gate, applied per (pair, criterion): max |closed - oracle| over
  // the grid <= 5% of the oracle's own range maximum, AND the error at t_max
  // shrinks by >= 6x relative to t_max/2 (third order or better; the
  // correctly assembled forms shrink ~16x, i.e. fourth order) unless the
  // error sits below the 1e-11-of-range resolution floor.
  std::vector<std::string> failures;
  ScanConfig cfg;
  cfg.params = paper_params();
  cfg.t_min = 0.0;
  cfg.t_max = 5e-7;  // gt = 0.05, inside the declared validity range
  cfg.t_steps = 40;
  cfg.phi_set = {0.7};
  cfg.oracle.cutoffs = {12, 12, 12, 12};
  cfg.oracle.alpha = {1.0, 0.8, 0.01, 0.5};
  cfg.oracle.tol = 1e-10;
  cfg.oracle.tail_bound = 1e-9;

  const CompareReport rep = compare_report(cfg);
  int exact_tracking = 0;
  for (const auto& f : rep.fits) {
    std::cout << "  " << combo(f.pair, f.criterion)
              << " literal_err=" << f.literal_max_err
              << " ratio=" << f.literal_ratio
              << " exact_err=" << f.exact_max_err
              << " ratio=" << f.exact_ratio
              << " range=" << f.range_max_mag
              << (f.literal_tracks ? "" : "  [literal DIVERGES]") << "\n";
    if (!f.literal_tracks) {
      std::ostringstream os;
      os << combo(f.pair, f.criterion) << ": literal form does not track the "
         << "oracle (max err " << f.literal_max_err << ", halving ratio "
         << f.literal_ratio << ", range max " << f.range_max_mag << ")";
      failures.push_back(os.str());
    }
    exact_tracking += f.exact_tracks ? 1 : 0;
  }
  std::cout << "  supplementary: derived second-order reading tracks "
            << exact_tracking << "/" << rep.fits.size() << " combinations\n";
  report(6, failures);
  // Supplementary gate: the independently derived second-order assembly of
  // the same moments must track the oracle everywhere. Its failure would
  // indict this implementation; the literal failures above indict the
  // transcription source.
  CHECK(exact_tracking == static_cast<int>(rep.fits.size()));
  CHECK_MESSAGE(failures.empty(), "criterion 6");
}

TEST_CASE("criterion 7: published classification pattern at paper parameters") {
  std::vector<std::string> failures;
  ScanConfig cfg;  // paper defaults: literal reading, |f3|^2, t in (0, 1e-6]
  const Table1Report rep = table1_report(cfg);
  for (const auto& c : rep.cells) {
    if (c.status == "match") continue;
    std::ostringstream os;
    os << combo(c.pair, c.criterion) << " phi=" << format_value(c.phi)
       << ": expected " << (c.expected ? "entangled" : "nc") << ", got "
       << (c.got ? "entangled" : "nc") << " (min " << c.min_value << "), 5x "
       << (c.got_5x ? "entangled" : "nc") << " (min " << c.min_value_5x
       << ") -> " << c.status;
    failures.push_back(os.str());
  }
  std::cout << "  cells: " << rep.matches << " match, " << rep.range_sensitive
            << " range-sensitive, " << rep.mismatches << " mismatch of "
            << rep.cells.size() << "\n";
  report(7, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 7");
}

TEST_CASE("criterion 8: determinism and output format arithmetic") {
  std::vector<std::string> failures;
  ScanConfig cfg = parse_config_text(
      "pairs = ab, bc, cd\n"
      "criteria = hz1\n");  // 3 pairs x 1 criterion x 3 phi x 400 t
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const fs::path d1 = fs::temp_directory_path() / "raman_acc_1";
  const fs::path d2 = fs::temp_directory_path() / "raman_acc_2";
  fs::create_directories(d1);
  fs::create_directories(d2);
  cfg.out_dir = d1.string();
  emit(run_scan(cfg), cfg);
  cfg.out_dir = d2.string();
  emit(run_scan(cfg), cfg);
  if (slurp(d1 / "scan.csv") != slurp(d2 / "scan.csv")) {
    failures.push_back("scan.csv differs between identical runs");
  }
  if (slurp(d1 / "scan.json") != slurp(d2 / "scan.json")) {
    failures.push_back("scan.json differs between identical runs");
  }
  std::stringstream csv(slurp(d1 / "scan.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  if (lines != 1 + 3 * 1 * 3 * 400) {
    failures.push_back("CSV line count " + std::to_string(lines) +
                       " != 1 header + 3600 rows");
  }
  fs::remove_all(d1);
  fs::remove_all(d2);
  report(8, failures);
  CHECK_MESSAGE(failures.empty(), "criterion 8");
}
