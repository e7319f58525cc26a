// params.hpp
//
// Physical configuration of the four-mode Raman process and the initial
// coherent product state. Modes: a = pump, b = Stokes, c = phonon (vibration),
// d = anti-Stokes. All frequencies and couplings are angular frequencies in
// rad/s; hbar = 1 throughout.
//
// Invariants enforced by validate_params:
//   - both detunings nonzero,
//   - |d_omega1 -+ d_omega2| > eps_det (denominators of the second-order
//     coefficients),
//   - in the Absolute frame the supplied mode frequencies must reproduce the
//     two detuning definitions to within eps_det.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace raman {

using cplx = std::complex<double>;

enum class ErrorCode {
  ZeroDetuning,
  DegenerateDetunings,
  InconsistentFrequencies,
  ZeroPump,
  EmptyGrid,
  DimensionTooLarge,
  TailMassTooLarge,
  ToleranceNotMet,
  ParseError,
  ValidationError,
  IoError,
};

class RamanError : public std::runtime_error {
 public:
  RamanError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class Frame { CoRotating, Absolute };

struct RamanParams {
  double g = 1e5;         // Stokes coupling, rad/s
  double chi = 1e5;       // anti-Stokes coupling, rad/s
  double d_omega1 = 1e5;  // detuning w_b + w_c - w_a, rad/s
  double d_omega2 = 1.9e5;  // detuning w_a + w_c - w_d, rad/s
  Frame frame = Frame::CoRotating;
  // Mode frequencies (w_a, w_b, w_c, w_d); used only in the Absolute frame.
  std::array<double, 4> omega{0.0, 0.0, 0.0, 0.0};

  double eps_det() const {
    return 1e-6 * std::max(std::abs(d_omega1), std::abs(d_omega2));
  }
};

// Validates detuning and frame invariants; returns p unchanged on success.
// Throws RamanError with ZeroDetuning, DegenerateDetunings or
// InconsistentFrequencies.
RamanParams validate_params(const RamanParams& p);

enum class Process { Spontaneous, PartiallySpontaneous, Stimulated };

struct CoherentInputs {
  cplx alpha1;  // pump; alpha1 = |alpha1| e^{-i phi}
  cplx alpha2;  // Stokes
  cplx alpha3;  // phonon
  cplx alpha4;  // anti-Stokes

  double phi() const { return -std::arg(alpha1); }

  static CoherentInputs from_magnitudes(double m1, double m2, double m3,
                                        double m4, double phi) {
    return CoherentInputs{m1 * std::exp(cplx(0.0, -phi)), cplx(m2, 0.0),
                          cplx(m3, 0.0), cplx(m4, 0.0)};
  }
};

// Classifies the process from which amplitudes are nonzero.
Process classify_process(const CoherentInputs& a);

// Zeroes the amplitudes appropriate to the requested process:
// Spontaneous keeps only the pump, PartiallySpontaneous keeps the pump and
// the largest of alpha2..alpha4, Stimulated is the identity. Throws ZeroPump
// for spontaneous/partial with alpha1 = 0.
CoherentInputs specialize(const CoherentInputs& a, Process process);

}  // namespace raman
