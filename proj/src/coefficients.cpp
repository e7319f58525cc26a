// coefficients.cpp
//
// Direct evaluation of the 28 second-order coefficient functions. The paired
// coefficients (f6, f8, g6, h6, h8, l6) are assigned from their partners so
// the identities hold bit-exactly.

#include "raman/coefficients.hpp"

#include <cmath>

namespace raman {

namespace {

inline cplx expi(double x) { return std::exp(cplx(0.0, x)); }

}  // namespace

CoefficientSet compute_coefficients(const RamanParams& p, double t) {
  const double g = p.g;
  const double chi = p.chi;
  const double d1 = p.d_omega1;
  const double d2 = p.d_omega2;
  const cplx i(0.0, 1.0);

  CoefficientSet c;
  c.t = t;
  auto& f = c.f;
  auto& gc = c.gc;
  auto& h = c.h;
  auto& l = c.l;

  // pump mode a
  f[1] = 1.0;
  f[2] = (g / d1) * (expi(-d1 * t) - 1.0);
  f[3] = -(chi / d2) * (expi(d2 * t) - 1.0);
  // Grouped so the constant parts cancel structurally and f4(0) = 0 exactly.
  f[4] = -(chi * g) * ((expi(-(d1 - d2) * t) - 1.0) / (d1 - d2) *
                           (1.0 / d1 + 1.0 / d2) +
                       (expi(d2 * t) - expi(-d1 * t)) / (d1 * d2));
  f[5] = (g * g / (d1 * d1)) * (expi(-d1 * t) - 1.0) + i * g * g * t / d1;
  f[6] = f[5];
  f[7] = (chi * chi / (d2 * d2)) * (expi(d2 * t) - 1.0) - i * chi * chi * t / d2;
  f[8] = -f[7];

  // Stokes mode b
  gc[1] = 1.0;
  gc[2] = -(g / d1) * (expi(d1 * t) - 1.0);
  gc[3] = (chi * g / (d2 * (d1 - d2))) * (expi((d1 - d2) * t) - 1.0) -
          (chi * g / (d2 * d1)) * (expi(d1 * t) - 1.0);
  gc[4] = (chi * g / (d2 * (d1 + d2))) * (expi((d1 + d2) * t) - 1.0) -
          (chi * g / (d2 * d1)) * (expi(d1 * t) - 1.0);
  gc[5] = (g * g / (d1 * d1)) * (expi(d1 * t) - 1.0) - i * g * g * t / d1;
  gc[6] = -gc[5];

  // phonon mode c
  h[1] = 1.0;
  h[2] = -(g / d1) * (expi(d1 * t) - 1.0);
  h[3] = -(chi / d2) * (expi(d2 * t) - 1.0);
  // Grouped so the constant parts cancel structurally and h4(0) = 0 exactly.
  h[4] = (chi * g) * ((expi((d1 + d2) * t) - 1.0) / (d1 + d2) *
                          (1.0 / d2 - 1.0 / d1) +
                      (expi(d2 * t) - expi(d1 * t)) / (d1 * d2));
  h[5] = -(g * g / (d1 * d1)) * (expi(d1 * t) - 1.0) + i * g * g * t / d1;
  h[6] = -h[5];
  h[7] = -(chi * chi / (d2 * d2)) * (expi(d2 * t) - 1.0) +
         i * chi * chi * t / d2;
  h[8] = -h[7];

  // anti-Stokes mode d
  l[1] = 1.0;
  l[2] = (chi / d2) * (expi(-d2 * t) - 1.0);
  l[3] = (chi * g / (d1 * (d1 - d2))) * (expi((d1 - d2) * t) - 1.0) +
         (chi * g / (d2 * d1)) * (expi(-d2 * t) - 1.0);
  l[4] = (chi * g / (d1 * (d1 + d2))) * (expi(-(d1 + d2) * t) - 1.0) -
         (chi * g / (d2 * d1)) * (expi(-d2 * t) - 1.0);
  l[5] = i * chi * chi * t / d2 + (chi * chi / (d2 * d2)) * (expi(-d2 * t) - 1.0);
  l[6] = l[5];

  if (p.frame == Frame::Absolute) {
    // Each mode's coefficients carry the free-evolution phase e^{-i w_m t}.
    const cplx pa = expi(-p.omega[0] * t);
    const cplx pb = expi(-p.omega[1] * t);
    const cplx pc = expi(-p.omega[2] * t);
    const cplx pd = expi(-p.omega[3] * t);
    for (int k = 1; k <= 8; ++k) f[k] *= pa;
    for (int k = 1; k <= 6; ++k) gc[k] *= pb;
    for (int k = 1; k <= 8; ++k) h[k] *= pc;
    for (int k = 1; k <= 6; ++k) l[k] *= pd;
  }
  return c;
}

}  // namespace raman
