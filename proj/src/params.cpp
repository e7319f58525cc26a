// params.cpp
//
// Parameter and input validation; process classification and specialization.

#include "raman/params.hpp"

#include <cmath>
#include <sstream>

namespace raman {

RamanParams validate_params(const RamanParams& p) {
  const double eps = p.eps_det();
  if (p.d_omega1 == 0.0 || p.d_omega2 == 0.0) {
    throw RamanError(ErrorCode::ZeroDetuning,
                     "both detunings must be nonzero");
  }
  if (std::abs(p.d_omega1 - p.d_omega2) <= eps ||
      std::abs(p.d_omega1 + p.d_omega2) <= eps) {
    std::ostringstream msg;
    msg << "detunings are degenerate: |d_omega1 -+ d_omega2| <= " << eps;
    throw RamanError(ErrorCode::DegenerateDetunings, msg.str());
  }
  if (p.frame == Frame::Absolute) {
    const double d1 = p.omega[1] + p.omega[2] - p.omega[0];
    const double d2 = p.omega[0] + p.omega[2] - p.omega[3];
    if (std::abs(d1 - p.d_omega1) > eps || std::abs(d2 - p.d_omega2) > eps) {
      throw RamanError(ErrorCode::InconsistentFrequencies,
                       "absolute mode frequencies do not reproduce the "
                       "declared detunings");
    }
  }
  return p;
}

Process classify_process(const CoherentInputs& a) {
  const bool pump = std::abs(a.alpha1) != 0.0;
  const int seeded = (std::abs(a.alpha2) != 0.0 ? 1 : 0) +
                     (std::abs(a.alpha3) != 0.0 ? 1 : 0) +
                     (std::abs(a.alpha4) != 0.0 ? 1 : 0);
  if (pump && seeded == 0) return Process::Spontaneous;
  if (pump && seeded == 1) return Process::PartiallySpontaneous;
  return Process::Stimulated;
}

CoherentInputs specialize(const CoherentInputs& a, Process process) {
  if (process == Process::Stimulated) return a;
  if (std::abs(a.alpha1) == 0.0) {
    throw RamanError(ErrorCode::ZeroPump,
                     "spontaneous/partial specialization requires alpha1 != 0");
  }
  CoherentInputs out = a;
  if (process == Process::Spontaneous) {
    out.alpha2 = out.alpha3 = out.alpha4 = cplx(0.0, 0.0);
    return out;
  }
  // PartiallySpontaneous: keep the pump and the largest seeded amplitude.
  const double m2 = std::abs(a.alpha2);
  const double m3 = std::abs(a.alpha3);
  const double m4 = std::abs(a.alpha4);
  if (m2 >= m3 && m2 >= m4) {
    out.alpha3 = out.alpha4 = cplx(0.0, 0.0);
  } else if (m3 >= m4) {
    out.alpha2 = out.alpha4 = cplx(0.0, 0.0);
  } else {
    out.alpha2 = out.alpha3 = cplx(0.0, 0.0);
  }
  return out;
}

}  // namespace raman
