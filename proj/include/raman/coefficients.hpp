// coefficients.hpp
//
// The 28 time-dependent complex coefficients f1-f8, g1-g6, h1-h8, l1-l6 of the
// second-order Heisenberg operator solution, evaluated exactly as written.
//
// Frame convention: in the CoRotating frame the per-mode phase factors
// e^{-i w_m t} are dropped (f1 = g1 = h1 = l1 = 1); in the Absolute frame
// every coefficient of mode m carries the extra factor e^{-i w_m t}.
//
// Identities holding bit-exactly by construction:
//   f6 = f5, f8 = -f7, g6 = -g5, h6 = -h5, h8 = -h7, l6 = l5.
// At t = 0 the set is the exact identity (f1 = g1 = h1 = l1 = 1, others 0).
#pragma once

#include <array>

#include "raman/params.hpp"

namespace raman {

struct CoefficientSet {
  double t = 0.0;
  // 1-based storage: index 0 unused so that f[1] means f1 as written.
  std::array<cplx, 9> f{};   // pump mode a
  std::array<cplx, 7> gc{};  // Stokes mode b
  std::array<cplx, 9> h{};   // phonon mode c
  std::array<cplx, 7> l{};   // anti-Stokes mode d
};

// Evaluates all 28 coefficients at time t (seconds). p must be validated.
CoefficientSet compute_coefficients(const RamanParams& p, double t);

}  // namespace raman
