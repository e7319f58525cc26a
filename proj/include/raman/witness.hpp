// witness.hpp
//
// Closed-form pairwise entanglement witnesses for the four-mode Raman process.
// A negative value certifies entanglement (sufficiency only) under
//   HZ1:  <N_x N_y> - |<x y^dag>|^2 < 0
//   HZ2:  <N_x><N_y> - |<x y>|^2 < 0
//   Duan: <(Du)^2> + <(Dv)^2> - 2 < 0, u = x_x + x_y, v = p_x + p_y
//
// Two assembly readings are provided:
//   PaperLiteral     - coefficient products transcribed verbatim from the
//                      source closed forms; the default for scans and the
//                      classification table.
//   SecondOrderExact - independently derived full second-order expansion of
//                      the same moment combinations (machine-generated); used
//                      by the oracle-comparison harness. Discrepancies between
//                      the two readings indict the transcription source, and
//                      are logged by the harness rather than silently fixed.
//
// The Duan diagonal terms admit a |f3| vs |f3|^2 reading; both are available
// behind F3Reading, default Squared (dimensional consistency; the oracle
// arbitrates).
#pragma once

#include <vector>

#include "raman/coefficients.hpp"
#include "raman/params.hpp"

namespace raman {

enum class Mode { A, B, C, D };  // pump, Stokes, phonon, anti-Stokes

struct ModePair {
  Mode first;
  Mode second;
};

// The six unordered pairs, in canonical order ab, ac, ad, bc, bd, cd.
inline constexpr std::array<ModePair, 6> kAllPairs{{
    {Mode::A, Mode::B}, {Mode::A, Mode::C}, {Mode::A, Mode::D},
    {Mode::B, Mode::C}, {Mode::B, Mode::D}, {Mode::C, Mode::D},
}};

const char* pair_name(ModePair pair);
ModePair pair_from_name(const std::string& name);

enum class Criterion { HZ1, HZ2, Duan };
const char* criterion_name(Criterion c);

enum class Reading { PaperLiteral, SecondOrderExact };
enum class F3Reading { Squared, Linear };

struct WitnessOptions {
  Reading reading = Reading::PaperLiteral;
  F3Reading f3 = F3Reading::Squared;
};

struct WitnessSample {
  ModePair pair;
  Criterion criterion;
  double t = 0.0;
  double phi = 0.0;
  double value = 0.0;
  Process process = Process::Stimulated;
};

// Witness values assembled from a precomputed coefficient set.
double hz1_witness(ModePair pair, const CoefficientSet& c,
                   const CoherentInputs& a, WitnessOptions opt = {});
double hz2_witness(ModePair pair, const CoefficientSet& c,
                   const CoherentInputs& a, WitnessOptions opt = {});
double duan_witness(ModePair pair, const CoefficientSet& c,
                    const CoherentInputs& a, WitnessOptions opt = {});

// Convenience overloads evaluating the coefficients at t first.
double hz1_witness(ModePair pair, const RamanParams& p, const CoherentInputs& a,
                   double t, WitnessOptions opt = {});
double hz2_witness(ModePair pair, const RamanParams& p, const CoherentInputs& a,
                   double t, WitnessOptions opt = {});
double duan_witness(ModePair pair, const RamanParams& p,
                    const CoherentInputs& a, double t, WitnessOptions opt = {});

double evaluate_witness(ModePair pair, Criterion crit, const CoefficientSet& c,
                        const CoherentInputs& a, WitnessOptions opt = {});

// Grid classification. Entangled iff min over the grid < -delta with
// delta = 1e-6 * max(1, max |value| over grid).
struct Classification {
  bool entangled = false;
  double min_value = 0.0;
  double min_t = 0.0;
  double delta = 0.0;
};

Classification classify(ModePair pair, Criterion crit, const RamanParams& p,
                        const CoherentInputs& a,
                        const std::vector<double>& t_grid,
                        WitnessOptions opt = {});

}  // namespace raman
