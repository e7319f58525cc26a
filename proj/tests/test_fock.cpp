// test_fock.cpp
//
// fock-oracle: space construction, Hamiltonian assembly (Hermiticity, a
// hand-checked matrix element), coherent-state tails, the Krylov propagator
// (identity at t = 0, free evolution, unitarity, conservation laws) and a
// pinned cross-check of the full oracle against an independent sparse
// matrix-exponential implementation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "raman/fock.hpp"

using namespace raman;

namespace {

RamanParams paper_params() {
  RamanParams p;
  p.g = 1e5;
  p.chi = 1e5;
  p.d_omega1 = 1e5;
  p.d_omega2 = 1.9e5;
  return p;
}

bool onear(double a, double b, double tol = 1e-8) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// <N_a + N_b + N_d> and <N_c - N_b + N_d> commute with H.
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

}  // namespace

TEST_CASE("build_space dimensions and index bijection") {
  CHECK(build_space({1, 1, 1, 1}).dim == 16);
  CHECK(build_space({15, 15, 15, 15}).dim == 65536);
  CHECK(build_space({0, 0, 0, 0}).dim == 1);
  CHECK_THROWS_AS(build_space({100, 100, 100, 100}), RamanError);

  const FockSpace s = build_space({3, 2, 4, 1});
  for (std::int64_t i = 0; i < s.dim; ++i) {
    const auto n = s.multi_index(i);
    CHECK(s.flat_index(n[0], n[1], n[2], n[3]) == i);
  }
}

TEST_CASE("Hamiltonian is exactly Hermitian with the documented element") {
  const RamanParams p = validate_params(paper_params());
  const FockSpace s = build_space({2, 2, 2, 2});
  const SparseOperator H = build_hamiltonian(p, s);
  const Eigen::SparseMatrix<cplx> diff =
      Eigen::SparseMatrix<cplx>(H.matrix.adjoint()) - H.matrix;
  CHECK(diff.norm() == 0.0);
  // <0_a 1_b 1_c 0_d| g a b^dag c^dag |1_a 0_b 0_c 0_d> = g
  const std::int64_t from = s.flat_index(1, 0, 0, 0);
  const std::int64_t to = s.flat_index(0, 1, 1, 0);
  CHECK(H.matrix.coeff(to, from) == cplx(p.g, 0.0));

  RamanParams zero = p;
  zero.g = zero.chi = 0.0;
  zero.frame = Frame::Absolute;  // all omegas zero, detunings kept as labels
  zero.omega = {0.0, 0.0, 0.0, 0.0};
  // inconsistent detuning labels are irrelevant here; build directly
  zero.d_omega1 = 0.0;
  zero.d_omega2 = 0.0;
  const SparseOperator Z = build_hamiltonian(zero, s);
  CHECK(Z.matrix.nonZeros() == 0);
}

TEST_CASE("coherent state: vacuum, small tail, rejected tail") {
  const FockSpace s = build_space({15, 15, 3, 3});
  const CoherentInputs vac = CoherentInputs::from_magnitudes(0, 0, 0, 0, 0.0);
  double tail = -1.0;
  const QuantumState v = coherent_state(vac, s, &tail);
  CHECK(tail == 0.0);
  CHECK(std::abs(v.amplitudes[s.flat_index(0, 0, 0, 0)] - cplx(1, 0)) == 0.0);
  CHECK(std::abs(v.norm() - 1.0) < 1e-15);

  const CoherentInputs one = CoherentInputs::from_magnitudes(1, 0, 0, 0, 0.0);
  coherent_state(one, s, &tail);
  CHECK(tail < 1e-12);  // Poisson(1) mass above 15

  const CoherentInputs ten = CoherentInputs::from_magnitudes(10, 0, 0, 0, 0.0);
  CHECK_THROWS_AS(coherent_state(ten, s), RamanError);  // Poisson(100) tail
}

TEST_CASE("coherent moments factorize at t = 0") {
  const FockSpace s = build_space({10, 10, 4, 6});
  const CoherentInputs a = CoherentInputs::from_magnitudes(0.5, 0.8, 0.1, 0.4, 0.6);
  const QuantumState psi = coherent_state(a, s, nullptr, 1e-6);
  const std::array<double, 4> w{0, 0, 0, 0};
  const PairMoments mo = pair_moments(psi, kAllPairs[0], w, 0.0);
  CHECK(onear(mo.n_x, 0.25, 1e-6));          // <N_a> = |alpha1|^2
  CHECK(std::abs(mo.xy_dag - a.alpha1 * std::conj(a.alpha2)) < 1e-6);
  CHECK(std::abs(mo.xy - a.alpha1 * a.alpha2) < 1e-6);
  // separable product state: all witnesses vanish
  for (const auto& pair : kAllPairs) {
    for (Criterion c : {Criterion::HZ1, Criterion::HZ2, Criterion::Duan}) {
      CHECK(std::abs(oracle_witness(pair, c, psi, w, 0.0)) < 1e-8);
    }
  }
}

TEST_CASE("evolve: identity at t = 0 and free evolution") {
  const RamanParams p = validate_params(paper_params());
  const FockSpace s = build_space({6, 6, 3, 3});
  const SparseOperator H = build_hamiltonian(p, s);
  const CoherentInputs a = CoherentInputs::from_magnitudes(0.7, 0.5, 0.1, 0.2, 0.3);
  const QuantumState psi0 = coherent_state(a, s, nullptr, 1e-4);

  const QuantumState same = evolve(psi0, H, 0.0);
  CHECK((same.amplitudes - psi0.amplitudes).norm() == 0.0);

  RamanParams free_p = p;
  free_p.g = free_p.chi = 0.0;
  const SparseOperator Hf = build_hamiltonian(free_p, s);
  const QuantumState rot = evolve(psi0, Hf, 3e-6, 1e-12);
  const std::array<double, 4> w = oracle_frequencies(free_p);
  for (int m = 0; m < 4; ++m) {
    // free evolution only rotates phases; occupations are constant
    ModePair pair{static_cast<Mode>(m), static_cast<Mode>((m + 1) % 4)};
    if (pair.first > pair.second) std::swap(pair.first, pair.second);
    const double n_before = pair_moments(psi0, pair, w, 0.0).n_x;
    const double n_after = pair_moments(rot, pair, w, 3e-6).n_x;
    CHECK(std::abs(n_before - n_after) < 1e-10);
  }
}

TEST_CASE("unitarity and conservation along a scaled trajectory") {
  const RamanParams p = validate_params(paper_params());
  const FockSpace s = build_space({10, 10, 5, 7});
  const SparseOperator H = build_hamiltonian(p, s);
  const CoherentInputs a = CoherentInputs::from_magnitudes(1.0, 0.8, 0.01, 0.5, 0.0);
  QuantumState psi = coherent_state(a, s, nullptr, 1e-5);
  const auto [q1_0, q2_0] = conserved(psi);
  double t = 0.0;
  for (int step = 0; step < 8; ++step) {
    psi = evolve(psi, H, 1.25e-7);
    t += 1.25e-7;
    CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
  }
  const auto [q1, q2] = conserved(psi);
  CHECK(std::abs(q1 - q1_0) < 1e-8);
  CHECK(std::abs(q2 - q2_0) < 1e-8);
}

TEST_CASE("pinned oracle cross-check against an independent implementation") {
  // Reference values from a scipy expm_multiply evolution of the same
  // truncated Hamiltonian at cutoffs (8, 8, 4, 6), t = 5e-7,
  // alphas = (1.0 e^{-0.7 i}, 0.8, 0.01, 0.5), co-rotating comparison frame.
  const RamanParams p = validate_params(paper_params());
  const FockSpace s = build_space({8, 8, 4, 6});
  const SparseOperator H = build_hamiltonian(p, s);
  const CoherentInputs a =
      CoherentInputs::from_magnitudes(1.0, 0.8, 0.01, 0.5, 0.7);
  double tail = 0.0;
  QuantumState psi = coherent_state(a, s, &tail, 1e-5);
  CHECK(tail < 2e-6);
  psi = evolve(psi, H, 5e-7);
  const std::array<double, 4> w = oracle_frequencies(p);
  auto wv = [&](int pair_idx, Criterion c) {
    return oracle_witness(kAllPairs[pair_idx], c, psi, w, 5e-7);
  };
  CHECK(onear(wv(0, Criterion::HZ1), 0.0012941597486331169));
  CHECK(onear(wv(0, Criterion::HZ2), 0.0045032351871953091));
  CHECK(onear(wv(0, Criterion::Duan), 0.0099982956291382319));
  CHECK(onear(wv(1, Criterion::HZ1), 0.0056012845706806692));
  CHECK(onear(wv(1, Criterion::HZ2), 0.00062171481405145709));
  CHECK(onear(wv(1, Criterion::Duan), 0.0074833262029711193));
  CHECK(onear(wv(2, Criterion::HZ1), -0.0004585652897423631));
  CHECK(onear(wv(2, Criterion::HZ2), 0.00077559403476012978));
  CHECK(onear(wv(2, Criterion::Duan), 0.001267338098245252));
  CHECK(onear(wv(3, Criterion::HZ1), 0.0075290795426328546));
  CHECK(onear(wv(3, Criterion::HZ2), -0.0034949556228204507));
  CHECK(onear(wv(3, Criterion::Duan), 0.011309984068545352));
  CHECK(onear(wv(4, Criterion::HZ1), 0.00049892964115313965));
  CHECK(onear(wv(4, Criterion::HZ2), 0.00074357829448212787));
  CHECK(onear(wv(4, Criterion::Duan), 0.0050027678693209121));
  CHECK(onear(wv(5, Criterion::HZ1), 0.00076993185485668334));
  CHECK(onear(wv(5, Criterion::HZ2), 0.00077660677645435198));
  CHECK(onear(wv(5, Criterion::Duan), 0.0060262958762271864));
}

TEST_CASE("truncation convergence: witnesses stable under cutoff + 4") {
  const RamanParams p = validate_params(paper_params());
  const CoherentInputs a =
      CoherentInputs::from_magnitudes(1.0, 0.8, 0.01, 0.5, 0.0);
  const double t = 5e-7;
  auto run = [&](std::array<int, 4> cut) {
    const FockSpace s = build_space(cut);
    const SparseOperator H = build_hamiltonian(p, s);
    QuantumState psi = coherent_state(a, s, nullptr, 1e-4);
    psi = evolve(psi, H, t);
    const std::array<double, 4> w = oracle_frequencies(p);
    std::vector<double> out;
    for (const auto& pair : kAllPairs) {
      for (Criterion c : {Criterion::HZ1, Criterion::HZ2, Criterion::Duan}) {
        out.push_back(oracle_witness(pair, c, psi, w, t));
      }
    }
    return out;
  };
  const auto lo = run({9, 9, 6, 7});
  const auto hi = run({13, 13, 10, 11});
  for (size_t k = 0; k < lo.size(); ++k) {
    CHECK(std::abs(lo[k] - hi[k]) < 0.01 * std::max(1e-3, std::abs(hi[k])));
  }
}
