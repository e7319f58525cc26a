// fock.hpp
//
// Brute-force oracle: exact unitary evolution of the initial coherent product
// state under the full Hamiltonian
//   H = sum_m w_m n_m + g (a b^dag c^dag + h.c.) + chi (a c d^dag + h.c.)
// in a truncated four-mode Fock space, plus every moment the witnesses need.
// No perturbation theory anywhere on this path.
//
// Truncation: ladder terms that would exceed a cutoff are dropped (projector
// truncation), which keeps H exactly Hermitian and the evolution unitary.
//
// CoRotating comparisons: the oracle assigns w_b = w_c = 0, w_a = -d_omega1,
// w_d = -(d_omega1 + d_omega2) and rotates each mode's moments by e^{+i w_m t}
// per annihilation operator before witness assembly, so only the detunings
// enter the comparison against the closed forms.
//
// Basis ordering: flat index is lexicographic in (n_a, n_b, n_c, n_d) with
// n_d fastest, i.e. flat = ((n_a*(cb+1) + n_b)*(cc+1) + n_c)*(cd+1) + n_d.
#pragma once

#include <Eigen/SparseCore>
#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "raman/params.hpp"
#include "raman/witness.hpp"

namespace raman {

struct FockSpace {
  std::array<int, 4> cutoffs{};  // n_max per mode
  std::array<int, 4> dims{};     // cutoff + 1
  std::int64_t dim = 0;

  std::int64_t flat_index(int na, int nb, int nc, int nd) const {
    return ((static_cast<std::int64_t>(na) * dims[1] + nb) * dims[2] + nc) *
               dims[3] +
           nd;
  }
  std::array<int, 4> multi_index(std::int64_t flat) const {
    std::array<int, 4> n;
    n[3] = static_cast<int>(flat % dims[3]);
    flat /= dims[3];
    n[2] = static_cast<int>(flat % dims[2]);
    flat /= dims[2];
    n[1] = static_cast<int>(flat % dims[1]);
    n[0] = static_cast<int>(flat / dims[1]);
    return n;
  }
};

struct QuantumState {
  Eigen::VectorXcd amplitudes;
  const FockSpace* space = nullptr;

  double norm() const { return amplitudes.norm(); }
};

struct SparseOperator {
  std::int64_t dimension = 0;
  Eigen::SparseMatrix<cplx> matrix;
};

// Builds the truncated space. Throws DimensionTooLarge above max_dim.
FockSpace build_space(const std::array<int, 4>& cutoffs,
                      std::int64_t max_dim = 1 << 21);

// Oracle mode frequencies for the given frame (see header comment).
std::array<double, 4> oracle_frequencies(const RamanParams& p);

// Assembles H with projector truncation; exactly Hermitian.
SparseOperator build_hamiltonian(const RamanParams& p, const FockSpace& s);

// Truncated normalized coherent product state. tail_mass is the discarded
// probability 1 - (pre-normalization norm)^2. Throws TailMassTooLarge above
// the bound.
QuantumState coherent_state(const CoherentInputs& a, const FockSpace& s,
                            double* tail_mass = nullptr,
                            double tail_bound = 1e-10);

// Propagates by e^{-iHt} with a Lanczos (Krylov) propagator; local error
// controlled to tol in state norm per step. Throws ToleranceNotMet.
QuantumState evolve(const QuantumState& state, const SparseOperator& H,
                    double t, double tol = 1e-10);

// All moments a pairwise witness needs, already rotated to the co-rotating
// frame (each annihilation operator of mode m contributes e^{+i w_m t}).
struct PairMoments {
  double n_x = 0.0;      // <N_x>
  double n_y = 0.0;      // <N_y>
  double n_xy = 0.0;     // <N_x N_y>
  cplx mean_x;           // <x>
  cplx mean_y;           // <y>
  cplx xy_dag;           // <x y^dag>
  cplx xy;               // <x y>
};

PairMoments pair_moments(const QuantumState& state, ModePair pair,
                         const std::array<double, 4>& omega, double t);

// Witness from exact moments: HZ1, HZ2 directly; Duan via the quadrature
// variances of u = x_x + x_y, v = p_x + p_y, i.e.
// D = 2[<Dx^dag Dx> + <Dy^dag Dy> + 2 Re <Dx Dy^dag>].
double oracle_witness(ModePair pair, Criterion crit, const QuantumState& state,
                      const std::array<double, 4>& omega, double t);

}  // namespace raman
