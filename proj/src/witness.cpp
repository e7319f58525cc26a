// witness.cpp
//
// Literal closed-form witness assembly, reading dispatch, and grid
// classification. The PaperLiteral bodies transcribe the printed coefficient
// products verbatim; the SecondOrderExact bodies live in witness_exact.cpp.

#include "raman/witness.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace raman {

namespace {

using std::abs;
using std::conj;
using std::norm;  // |z|^2

struct Alphas {
  cplx a1, a2, a3, a4;
};

inline Alphas unpack(const CoherentInputs& a) {
  return {a.alpha1, a.alpha2, a.alpha3, a.alpha4};
}

// Discards the imaginary residue of an assembled expression after checking
// it is negligible relative to the magnitude. Cross terms are assembled as
// z + conj(z), so the residue is structurally zero.
inline double take_real(cplx v) {
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v))) {
    throw RamanError(ErrorCode::ToleranceNotMet,
                     "witness assembly left a non-negligible imaginary part");
  }
  return v.real();
}

int pair_key(ModePair pair) {
  return static_cast<int>(pair.first) * 4 + static_cast<int>(pair.second);
}

constexpr int kAB = 0 * 4 + 1;
constexpr int kAC = 0 * 4 + 2;
constexpr int kAD = 0 * 4 + 3;
constexpr int kBC = 1 * 4 + 2;
constexpr int kBD = 1 * 4 + 3;
constexpr int kCD = 2 * 4 + 3;

double hz1_literal(ModePair pair, const CoefficientSet& c,
                   const CoherentInputs& a) {
  const auto [a1, a2, a3, a4] = unpack(a);
  const double A1 = norm(a1), A2 = norm(a2), A3 = norm(a3), A4 = norm(a4);
  const auto& f = c.f;
  const auto& g = c.gc;
  const auto& h = c.h;
  const auto& l = c.l;
  switch (pair_key(pair)) {
    case kAB:
      return norm(f[3]) * A2 * A4 + norm(g[2]) * (A1 * A1 - A1 * A2);
    case kBC: {
      const double diag = norm(g[2]) * (3.0 * A1 * A3 + 3.0 * A1 * A2 + A1 -
                                        A2 * A3) +
                          norm(h[3]) * A2 * A4;
      const cplx cross = conj(h[1]) * h[2] * a1 * conj(a2) * conj(a3) +
                         2.0 * conj(g[4]) * g[1] * a2 * a3 * a3 * conj(a4) +
                         h[2] * conj(h[3]) * a1 * a1 * conj(a2) * conj(a4);
      return take_real(diag + cross + conj(cross));
    }
    case kAD:
      return norm(f[3]) * (A3 + A4 * A4 + A1 * A3 - A1 * A4) -
             norm(l[2]) * (A3 + A1 * A3);
    case kBD: {
      const cplx cross = conj(l[1]) * l[3] * a1 * a1 * conj(a2) * conj(a4);
      return take_real(norm(g[2]) * A1 * A4 + cross + conj(cross));
    }
    case kCD:
      return norm(l[2]) * (2.0 * A1 + 2.0 * A1 * A4 - 2.0 * A4 - A4 * A4 -
                           A3 * A4) +
             norm(h[2]) * A1 * A4;
    case kAC: {
      const double diag =
          norm(f[2]) * (2.0 * A1 + A1 * A1 + A1 * A3 - 4.0 * A2 -
                        2.0 * A1 * A2 - 2.0 * A2 * A3) +
          norm(f[3]) * (A4 + 3.0 * A3 * A4 + 3.0 * A1 * A4 - A1 * A3);
      const cplx cross = conj(f[1]) * f[3] * conj(a1) * conj(a3) * a4 +
                         conj(h[2]) * h[3] * conj(a1) * conj(a1) * a2 * a4 +
                         conj(f[2]) * f[3] * conj(a2) * conj(a3) * conj(a3) * a4;
      return take_real(diag + cross + conj(cross));
    }
  }
  return 0.0;
}

double hz2_literal(ModePair pair, const CoefficientSet& c,
                   const CoherentInputs& a) {
  const auto [a1, a2, a3, a4] = unpack(a);
  const double A1 = norm(a1), A2 = norm(a2), A3 = norm(a3), A4 = norm(a4);
  const auto& f = c.f;
  const auto& g = c.gc;
  const auto& h = c.h;
  const auto& l = c.l;
  switch (pair_key(pair)) {
    case kAB: {
      const cplx cross =
          (conj(g[1]) * g[6] + conj(f[1]) * f[2] * conj(g[1]) * g[2]) * A1 * A2;
      return take_real(norm(g[2]) * A1 * A1 + norm(f[3]) * A2 * A4 - cross -
                       conj(cross));
    }
    case kBC: {
      const double diag = norm(g[2]) * A1 * A3 - norm(h[2]) * (1.0 + A2) * A1 +
                          norm(h[3]) * A2 * A4;
      const cplx cross =
          conj(h[1]) * h[2] * a1 * conj(a2) * conj(a3) +
          (h[1] * conj(h[4]) + g[1] * conj(g[2]) * h[1] * conj(h[3])) * a2 *
              a3 * a3 * conj(a4) +
          conj(h[2]) * h[3] * conj(a1) * conj(a1) * a2 * a4 +
          conj(h[1]) * h[6] * A2 * A3 +
          g[1] * conj(g[2]) * conj(h[1]) * h[2] * A1 * A3;
      return take_real(diag - cross - conj(cross));
    }
    case kAD: {
      const cplx cross = conj(l[1]) * l[6] * A1 * A4;
      return take_real(norm(f[3]) * A4 * A4 - cross - conj(cross));
    }
    case kBD: {
      const cplx cross = conj(l[1]) * l[3] * a1 * a1 * conj(a2) * conj(a4);
      return take_real(norm(g[2]) * A1 * A4 - cross - conj(cross));
    }
    case kCD: {
      const cplx cross = conj(l[1]) * l[5] * A3 * A4;
      return take_real(norm(h[2]) * A1 * A4 + norm(h[3]) * A4 * A4 - cross -
                       conj(cross));
    }
    case kAC: {
      const double diag = norm(h[2]) * A1 * A1 - norm(h[3]) * (A4 + A1 * A4) +
                          norm(f[3]) * A3 * A4;
      const cplx cross =
          conj(h[1]) * h[3] * conj(a1) * conj(a3) * a4 +
          conj(h[1]) * h[8] * A1 * A3 +
          conj(h[2]) * h[3] * conj(a1) * conj(a1) * a2 * a4 -
          conj(h[1]) * h[5] * A1 * A3 +
          conj(f[1]) * f[2] * conj(h[3]) * h[1] * a2 * a3 * a3 * conj(a4) +
          conj(f[1]) * f[3] * conj(h[3]) * h[1] * A3 * A4;
      return take_real(diag - cross - conj(cross));
    }
  }
  return 0.0;
}

double duan_literal(ModePair pair, const CoefficientSet& c,
                    const CoherentInputs& a, F3Reading f3_reading) {
  const auto [a1, a2, a3, a4] = unpack(a);
  const double A1 = norm(a1), A3 = norm(a3), A4 = norm(a4);
  const auto& f = c.f;
  const auto& g = c.gc;
  const auto& h = c.h;
  const auto& l = c.l;
  const double F3 =
      f3_reading == F3Reading::Squared ? norm(f[3]) : abs(f[3]);
  double diag = 0.0;
  cplx cross(0.0, 0.0);
  switch (pair_key(pair)) {
    case kAB:
      diag = F3 * A4 + norm(g[2]) * A1;
      cross = (f[1] * conj(g[6]) + f[5] * conj(g[1])) * a1 * conj(a2) +
              (2.0 * f[1] * conj(g[3]) + f[4] * conj(g[1]) +
               f[3] * conj(g[2])) *
                  conj(a1) * a4;
      break;
    case kAC:
      diag = F3 * A4 + norm(h[2]) * A1 + norm(h[3]) * A4;
      cross = (f[1] * conj(h[5]) + f[6] * conj(h[1]) + f[3] * conj(h[3]) +
               f[7] * conj(h[1]) + f[1] * conj(h[8])) *
              a1 * conj(a3);
      break;
    case kBC:
      diag = norm(g[2]) * A1 + norm(h[2]) * A1 + norm(h[3]) * A4;
      cross = (g[1] * conj(h[6]) + g[5] * conj(h[1]) + g[2] * conj(h[2])) *
              conj(a3) * a2;
      break;
    case kAD:
      diag = F3 * A4;
      cross = (f[1] * conj(l[2]) + f[3] * conj(l[1])) * conj(a3) +
              (2.0 * f[1] * conj(l[3]) + f[4] * conj(l[1]) +
               f[2] * conj(l[2])) *
                  conj(a1) * a2 +
              f[8] * conj(l[1]) * a1 * conj(a4);
      break;
    case kCD:
      diag = norm(h[2]) * A1 + norm(h[3]) * A4;
      cross = (2.0 * l[4] * conj(h[1]) + l[2] * conj(h[2]) +
               l[1] * conj(h[4])) *
                  a2 * a3 +
              (l[5] * conj(h[1]) + l[1] * conj(h[7])) * conj(a3) * a4;
      break;
    case kBD:
      diag = norm(g[2]) * A1;
      cross = (l[4] * conj(g[1]) + l[2] * conj(g[2]) + l[1] * conj(g[4])) *
              a3 * a3;
      break;
  }
  return take_real(2.0 * (diag + 0.5 * (cross + conj(cross))));
}

}  // namespace

// SecondOrderExact bodies (machine-generated), defined in witness_exact.cpp.
double hz1_exact(ModePair pair, const CoefficientSet& c,
                 const CoherentInputs& a);
double hz2_exact(ModePair pair, const CoefficientSet& c,
                 const CoherentInputs& a);
double duan_exact(ModePair pair, const CoefficientSet& c,
                  const CoherentInputs& a);

const char* pair_name(ModePair pair) {
  switch (pair_key(pair)) {
    case kAB: return "ab";
    case kAC: return "ac";
    case kAD: return "ad";
    case kBC: return "bc";
    case kBD: return "bd";
    case kCD: return "cd";
  }
  return "??";
}

ModePair pair_from_name(const std::string& name) {
  for (const auto& p : kAllPairs) {
    if (name == pair_name(p)) return p;
  }
  throw RamanError(ErrorCode::ValidationError, "unknown mode pair: " + name);
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::HZ1: return "hz1";
    case Criterion::HZ2: return "hz2";
    case Criterion::Duan: return "duan";
  }
  return "??";
}

double hz1_witness(ModePair pair, const CoefficientSet& c,
                   const CoherentInputs& a, WitnessOptions opt) {
  return opt.reading == Reading::PaperLiteral ? hz1_literal(pair, c, a)
                                              : hz1_exact(pair, c, a);
}

double hz2_witness(ModePair pair, const CoefficientSet& c,
                   const CoherentInputs& a, WitnessOptions opt) {
  return opt.reading == Reading::PaperLiteral ? hz2_literal(pair, c, a)
                                              : hz2_exact(pair, c, a);
}

double duan_witness(ModePair pair, const CoefficientSet& c,
                    const CoherentInputs& a, WitnessOptions opt) {
  return opt.reading == Reading::PaperLiteral
             ? duan_literal(pair, c, a, opt.f3)
             : duan_exact(pair, c, a);
}

double hz1_witness(ModePair pair, const RamanParams& p, const CoherentInputs& a,
                   double t, WitnessOptions opt) {
  return hz1_witness(pair, compute_coefficients(p, t), a, opt);
}

double hz2_witness(ModePair pair, const RamanParams& p, const CoherentInputs& a,
                   double t, WitnessOptions opt) {
  return hz2_witness(pair, compute_coefficients(p, t), a, opt);
}

double duan_witness(ModePair pair, const RamanParams& p,
                    const CoherentInputs& a, double t, WitnessOptions opt) {
  return duan_witness(pair, compute_coefficients(p, t), a, opt);
}

double evaluate_witness(ModePair pair, Criterion crit, const CoefficientSet& c,
                        const CoherentInputs& a, WitnessOptions opt) {
  switch (crit) {
    case Criterion::HZ1: return hz1_witness(pair, c, a, opt);
    case Criterion::HZ2: return hz2_witness(pair, c, a, opt);
    case Criterion::Duan: return duan_witness(pair, c, a, opt);
  }
  return 0.0;
}

Classification classify(ModePair pair, Criterion crit, const RamanParams& p,
                        const CoherentInputs& a,
                        const std::vector<double>& t_grid, WitnessOptions opt) {
  if (t_grid.empty()) {
    throw RamanError(ErrorCode::EmptyGrid, "classification grid is empty");
  }
  Classification out;
  out.min_value = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (double t : t_grid) {
    const double v = evaluate_witness(pair, crit, compute_coefficients(p, t),
                                      a, opt);
    max_abs = std::max(max_abs, std::abs(v));
    if (v < out.min_value) {
      out.min_value = v;
      out.min_t = t;
    }
  }
  out.delta = 1e-6 * std::max(1.0, max_abs);
  out.entangled = out.min_value < -out.delta;
  return out;
}

}  // namespace raman
