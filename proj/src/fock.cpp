// fock.cpp
//
// Truncated Fock-space construction, Hamiltonian assembly, coherent-state
// preparation, Lanczos time evolution and moment evaluation.
//
// The propagator is an adaptive Krylov (Lanczos) scheme: per substep a basis
// of dimension <= kMaxKrylov is built with full reorthogonalization (the
// spaces here are small enough that the extra dot products are cheap and buy
// exact orthogonality), the tridiagonal projection is exponentiated by dense
// symmetric eigendecomposition, and the standard a-posteriori remainder
// estimate controls the substep size.

#include "raman/fock.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace raman {

namespace {

constexpr int kMaxKrylov = 40;

// Applies the annihilation operator of one mode: (a_m psi)(n) =
// sqrt(n_m + 1) psi(n with n_m + 1); the top level maps outside the space
// and is dropped (projector truncation).
Eigen::VectorXcd apply_annihilation(const QuantumState& state, int mode) {
  const FockSpace& s = *state.space;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.dim);
  std::int64_t stride = 1;
  for (int m = 3; m > mode; --m) stride *= s.dims[m];
  for (std::int64_t i = 0; i < s.dim; ++i) {
    const int n = static_cast<int>((i / stride) % s.dims[mode]);
    if (n + 1 < s.dims[mode]) {
      out[i] = std::sqrt(static_cast<double>(n + 1)) *
               state.amplitudes[i + stride];
    }
  }
  return out;
}

int mode_index(Mode m) { return static_cast<int>(m); }

}  // namespace

FockSpace build_space(const std::array<int, 4>& cutoffs, std::int64_t max_dim) {
  FockSpace s;
  s.cutoffs = cutoffs;
  std::int64_t dim = 1;
  for (int m = 0; m < 4; ++m) {
    if (cutoffs[m] < 0) {
      throw RamanError(ErrorCode::ValidationError, "cutoffs must be >= 0");
    }
    s.dims[m] = cutoffs[m] + 1;
    dim *= s.dims[m];
    if (dim > max_dim) {
      throw RamanError(ErrorCode::DimensionTooLarge,
                       "truncated space exceeds the configured memory bound");
    }
  }
  s.dim = dim;
  return s;
}

std::array<double, 4> oracle_frequencies(const RamanParams& p) {
  if (p.frame == Frame::Absolute) return p.omega;
  // CoRotating: w_b = w_c = 0, the detunings fix the rest.
  const double wa = -p.d_omega1;
  const double wd = wa - p.d_omega2;
  return {wa, 0.0, 0.0, wd};
}

SparseOperator build_hamiltonian(const RamanParams& p, const FockSpace& s) {
  const std::array<double, 4> w = oracle_frequencies(p);
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<size_t>(3 * s.dim));
  for (std::int64_t i = 0; i < s.dim; ++i) {
    const auto n = s.multi_index(i);
    // free part
    const double diag =
        w[0] * n[0] + w[1] * n[1] + w[2] * n[2] + w[3] * n[3];
    if (diag != 0.0) trip.emplace_back(i, i, cplx(diag, 0.0));
    // g * a b^dag c^dag : (n_a, n_b, n_c) -> (n_a - 1, n_b + 1, n_c + 1)
    if (p.g != 0.0 && n[0] >= 1 && n[1] + 1 < s.dims[1] &&
        n[2] + 1 < s.dims[2]) {
      const double amp = p.g * std::sqrt(static_cast<double>(n[0]) *
                                         (n[1] + 1.0) * (n[2] + 1.0));
      const std::int64_t j = s.flat_index(n[0] - 1, n[1] + 1, n[2] + 1, n[3]);
      trip.emplace_back(j, i, cplx(amp, 0.0));
      trip.emplace_back(i, j, cplx(amp, 0.0));  // h.c.
    }
    // chi * a c d^dag : (n_a, n_c, n_d) -> (n_a - 1, n_c - 1, n_d + 1)
    if (p.chi != 0.0 && n[0] >= 1 && n[2] >= 1 && n[3] + 1 < s.dims[3]) {
      const double amp = p.chi * std::sqrt(static_cast<double>(n[0]) * n[2] *
                                           (n[3] + 1.0));
      const std::int64_t j = s.flat_index(n[0] - 1, n[1], n[2] - 1, n[3] + 1);
      trip.emplace_back(j, i, cplx(amp, 0.0));
      trip.emplace_back(i, j, cplx(amp, 0.0));  // h.c.
    }
  }
  SparseOperator H;
  H.dimension = s.dim;
  H.matrix.resize(s.dim, s.dim);
  H.matrix.setFromTriplets(trip.begin(), trip.end());
  return H;
}

QuantumState coherent_state(const CoherentInputs& a, const FockSpace& s,
                            double* tail_mass, double tail_bound) {
  const std::array<cplx, 4> alpha{a.alpha1, a.alpha2, a.alpha3, a.alpha4};
  std::array<std::vector<cplx>, 4> mode_vec;
  for (int m = 0; m < 4; ++m) {
    mode_vec[m].resize(s.dims[m]);
    cplx amp = std::exp(-0.5 * std::norm(alpha[m]));
    for (int n = 0; n < s.dims[m]; ++n) {
      mode_vec[m][n] = amp;
      amp *= alpha[m] / std::sqrt(n + 1.0);
    }
  }
  QuantumState psi;
  psi.space = &s;
  psi.amplitudes.resize(s.dim);
  for (std::int64_t i = 0; i < s.dim; ++i) {
    const auto n = s.multi_index(i);
    psi.amplitudes[i] = mode_vec[0][n[0]] * mode_vec[1][n[1]] *
                        mode_vec[2][n[2]] * mode_vec[3][n[3]];
  }
  const double pre_norm2 = psi.amplitudes.squaredNorm();
  const double tail = 1.0 - pre_norm2;
  if (tail_mass) *tail_mass = tail;
  if (tail > tail_bound) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "coherent-state tail mass %.3g exceeds bound %.3g "
                  "(raise the cutoffs or the bound)",
                  tail, tail_bound);
    throw RamanError(ErrorCode::TailMassTooLarge, msg);
  }
  psi.amplitudes /= std::sqrt(pre_norm2);
  return psi;
}

QuantumState evolve(const QuantumState& state, const SparseOperator& H,
                    double t, double tol) {
  QuantumState out = state;
  if (t == 0.0 || state.amplitudes.size() == 0) return out;

  const std::int64_t dim = H.dimension;
  const int m_max = static_cast<int>(std::min<std::int64_t>(kMaxKrylov, dim));
  double remaining = t;
  double dt = t;
  int halvings = 0;

  while (remaining > 0.0) {
    dt = std::min(dt, remaining);
    const double beta0 = out.amplitudes.norm();
    // Lanczos basis with full reorthogonalization.
    std::vector<Eigen::VectorXcd> V;
    V.reserve(m_max + 1);
    V.push_back(out.amplitudes / beta0);
    Eigen::VectorXd alpha_d(m_max), beta_d(m_max);
    int m = 0;
    bool happy = false;
    for (; m < m_max; ++m) {
      Eigen::VectorXcd w = H.matrix * V[m];
      const double a_m = std::real(V[m].dot(w));
      alpha_d[m] = a_m;
      w -= a_m * V[m];
      if (m > 0) w -= beta_d[m - 1] * V[m - 1];
      for (const auto& v : V) w -= v.dot(w) * v;  // reorthogonalize
      const double b_m = w.norm();
      beta_d[m] = b_m;
      if (b_m < 1e-14 * std::abs(beta0)) {
        happy = true;  // invariant subspace reached: result exact
        ++m;
        break;
      }
      V.push_back(w / b_m);
    }
    // exp(-i T dt) e1 via dense symmetric eigendecomposition of T.
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
      T(k, k) = alpha_d[k];
      if (k + 1 < m) T(k, k + 1) = T(k + 1, k) = beta_d[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    Eigen::VectorXcd phases(m);
    for (int k = 0; k < m; ++k) {
      phases[k] = std::exp(cplx(0.0, -es.eigenvalues()[k] * dt));
    }
    const Eigen::VectorXd e1_coeff = es.eigenvectors().row(0).transpose();
    Eigen::VectorXcd small = es.eigenvectors() *
                             (phases.array() * e1_coeff.cast<cplx>().array())
                                 .matrix();
    // Remainder bound: the truncation defect is beta_m v_{m+1} e_m^T u(tau),
    // so the substep error is <= beta_m * dt * max|u_m|, estimated at the
    // endpoint. Budget: the run tolerance prorated by dt/t.
    const double err_est =
        happy ? 0.0
              : beta0 * beta_d[m - 1] * std::abs(small[m - 1]) * std::abs(dt);
    if (!happy && err_est > tol * (dt / t) && dt > t * 1e-12) {
      dt *= 0.5;
      if (++halvings > 60) {
        throw RamanError(ErrorCode::ToleranceNotMet,
                         "Krylov propagator failed to meet tolerance");
      }
      continue;
    }
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim);
    for (int k = 0; k < m; ++k) next += (beta0 * small[k]) * V[k];
    out.amplitudes = next;
    remaining -= dt;
    dt *= 2.0;  // retry larger substeps; clamped to `remaining` at loop top
  }
  const double drift = std::abs(out.amplitudes.norm() - 1.0);
  if (drift > 1e-9) {
    throw RamanError(ErrorCode::ToleranceNotMet,
                     "state norm drifted by " + std::to_string(drift));
  }
  return out;
}

PairMoments pair_moments(const QuantumState& state, ModePair pair,
                         const std::array<double, 4>& omega, double t) {
  const int x = mode_index(pair.first);
  const int y = mode_index(pair.second);
  const Eigen::VectorXcd ax = apply_annihilation(state, x);
  const Eigen::VectorXcd ay = apply_annihilation(state, y);
  QuantumState tmp;
  tmp.space = state.space;
  tmp.amplitudes = ay;
  const Eigen::VectorXcd axay = apply_annihilation(tmp, x);

  // Rotation phases: each annihilation operator of mode m picks e^{+i w_m t}.
  const cplx px = std::exp(cplx(0.0, omega[x] * t));
  const cplx py = std::exp(cplx(0.0, omega[y] * t));

  PairMoments mo;
  mo.n_x = ax.squaredNorm();
  mo.n_y = ay.squaredNorm();
  mo.n_xy = axay.squaredNorm();
  mo.mean_x = state.amplitudes.dot(ax) * px;
  mo.mean_y = state.amplitudes.dot(ay) * py;
  // <x y^dag> = <a_y psi | a_x psi> for distinct modes.
  mo.xy_dag = ay.dot(ax) * px * std::conj(py);
  mo.xy = state.amplitudes.dot(axay) * px * py;
  return mo;
}

double oracle_witness(ModePair pair, Criterion crit, const QuantumState& state,
                      const std::array<double, 4>& omega, double t) {
  const PairMoments mo = pair_moments(state, pair, omega, t);
  switch (crit) {
    case Criterion::HZ1:
      return mo.n_xy - std::norm(mo.xy_dag);
    case Criterion::HZ2:
      return mo.n_x * mo.n_y - std::norm(mo.xy);
    case Criterion::Duan: {
      const double dxx = mo.n_x - std::norm(mo.mean_x);
      const double dyy = mo.n_y - std::norm(mo.mean_y);
      const cplx dxyd = mo.xy_dag - mo.mean_x * std::conj(mo.mean_y);
      return 2.0 * (dxx + dyy + 2.0 * dxyd.real());
    }
  }
  return 0.0;
}

}  // namespace raman
