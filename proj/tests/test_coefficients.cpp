// test_coefficients.cpp
//
// model-core: parameter validation, the t = 0 identity boundary, the appendix
// pair identities, unit-modulus and frame-relation properties, and a pinned
// reference point computed with an independent implementation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "raman/coefficients.hpp"

using namespace raman;

namespace {

bool cnear(cplx a, cplx b, double tol = 1e-13) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

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
  // keep detunings non-degenerate
  p.d_omega2 = p.d_omega1 * (1.3 + mag(rng));
  return p;
}

}  // namespace

TEST_CASE("validate_params accepts the paper point") {
  CHECK_NOTHROW(validate_params(paper_params()));
}

TEST_CASE("validate_params rejects zero detuning") {
  RamanParams p = paper_params();
  p.d_omega2 = 0.0;
  CHECK_THROWS_WITH_AS(validate_params(p), doctest::Contains("nonzero"),
                       RamanError);
}

TEST_CASE("validate_params rejects degenerate detunings") {
  RamanParams p = paper_params();
  p.d_omega2 = p.d_omega1;  // denominator of f4 vanishes
  CHECK_THROWS_AS(validate_params(p), RamanError);
  p.d_omega2 = -p.d_omega1;  // denominator of h4 vanishes
  CHECK_THROWS_AS(validate_params(p), RamanError);
  // just outside the eps_det guard is fine
  p.d_omega2 = p.d_omega1 * 1.001;
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("validate_params checks absolute-frame consistency") {
  RamanParams p = paper_params();
  p.frame = Frame::Absolute;
  p.omega = {1e8, 2e8, 3e8, 4e8};  // detunings do not match
  CHECK_THROWS_AS(validate_params(p), RamanError);
  // consistent assignment: w_b, w_c free, w_a and w_d fixed by detunings
  p.omega[1] = 2e8;
  p.omega[2] = 3e8;
  p.omega[0] = p.omega[1] + p.omega[2] - p.d_omega1;
  p.omega[3] = p.omega[0] + p.omega[2] - p.d_omega2;
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("t = 0 gives the exact identity coefficient set") {
  for (Frame frame : {Frame::CoRotating, Frame::Absolute}) {
    RamanParams p = paper_params();
    p.frame = frame;
    if (frame == Frame::Absolute) {
      p.omega = {1e8 + 2e8 - p.d_omega1, 1e8, 2e8, 0.0};
      p.omega[3] = p.omega[0] + p.omega[2] - p.d_omega2;
    }
    const CoefficientSet c = compute_coefficients(p, 0.0);
    CHECK(c.f[1] == cplx(1.0, 0.0));
    CHECK(c.gc[1] == cplx(1.0, 0.0));
    CHECK(c.h[1] == cplx(1.0, 0.0));
    CHECK(c.l[1] == cplx(1.0, 0.0));
    for (int k = 2; k <= 8; ++k) CHECK(c.f[k] == cplx(0.0, 0.0));
    for (int k = 2; k <= 6; ++k) CHECK(c.gc[k] == cplx(0.0, 0.0));
    for (int k = 2; k <= 8; ++k) CHECK(c.h[k] == cplx(0.0, 0.0));
    for (int k = 2; k <= 6; ++k) CHECK(c.l[k] == cplx(0.0, 0.0));
  }
}

TEST_CASE("pinned reference point") {
  // Values computed with an independent implementation (complex arithmetic
  // evaluated term by term at g = chi = 1e5, d1 = 1e5, d2 = 1.9e5,
  // t = 7.3e-7, co-rotating frame).
  const CoefficientSet c = compute_coefficients(paper_params(), 7.3e-7);
  CHECK(cnear(c.f[2], cplx(-0.0026633169501247833, -0.072935181106738162)));
  CHECK(cnear(c.f[3], cplx(0.0050544392220107006, -0.072766166472541499)));
  CHECK(cnear(c.f[4], cplx(-6.1717148159834423e-06, 0.00018780805613680528)));
  CHECK(cnear(c.f[5], cplx(-0.0026633169501247833, 6.4818893261833765e-05)));
  CHECK(cnear(c.f[7], cplx(-0.0026602311694793163, -0.00012307027760973671)));
  CHECK(cnear(c.gc[2], cplx(0.0026633169501247833, -0.072935181106738162)));
  CHECK(cnear(c.gc[3], cplx(0.002663423409293591, 6.4804903241802436e-06)));
  CHECK(cnear(c.gc[4], cplx(-0.0026499566304656543, -0.00025222773752031635)));
  CHECK(cnear(c.gc[5], cplx(-0.0026633169501247833, -6.4818893261833765e-05)));
  CHECK(cnear(c.h[2], cplx(0.0026633169501247833, -0.072935181106738162)));
  CHECK(cnear(c.h[3], cplx(0.0050544392220107006, -0.072766166472541499)));
  CHECK(cnear(c.h[4], cplx(-6.1613044669561745e-06, 5.7990329571628674e-05)));
  CHECK(cnear(c.h[5], cplx(0.0026633169501247833, 6.4818893261833765e-05)));
  CHECK(cnear(c.h[7], cplx(0.0026602311694793163, 0.00012307027760973671)));
  CHECK(cnear(c.l[2], cplx(-0.0050544392220107006, -0.072766166472541499)));
  CHECK(cnear(c.l[3], cplx(-0.0026572516944776605, 0.000181327565812614)));
  CHECK(cnear(c.l[4], cplx(-0.002643795325998826, 0.00031021806709194411)));
  CHECK(cnear(c.l[5], cplx(-0.0026602311694793163, 0.00012307027760973671)));
}

TEST_CASE("|g2|^2 matches the closed expression at the documented point") {
  // |g2|^2 = 4 g^2 sin^2(d1 t / 2) / d1^2 at g = 1e5, d1 = 1e5, t = 1e-6.
  const CoefficientSet c = compute_coefficients(paper_params(), 1e-6);
  const double expected = 4.0 * std::pow(std::sin(0.05), 2);
  CHECK(std::abs(std::norm(c.gc[2]) - expected) < 1e-15);
  CHECK(std::norm(c.gc[2]) == doctest::Approx(9.9917e-3).epsilon(1e-4));
}

TEST_CASE("pair identities over 1000 random samples") {
  std::mt19937 rng(20260823);
  std::uniform_real_distribution<double> time(0.0, 1e-6);
  for (int s = 0; s < 1000; ++s) {
    const RamanParams p = validate_params(random_params(rng));
    const CoefficientSet c = compute_coefficients(p, time(rng));
    // assigned from their partners, so bit-exact
    CHECK(c.f[6] == c.f[5]);
    CHECK(c.f[8] == -c.f[7]);
    CHECK(c.gc[6] == -c.gc[5]);
    CHECK(c.h[6] == -c.h[5]);
    CHECK(c.h[8] == -c.h[7]);
    CHECK(c.l[6] == c.l[5]);
  }
}

TEST_CASE("unit modulus and second-order smallness over random samples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> time(0.0, 1e-6);
  for (int s = 0; s < 200; ++s) {
    RamanParams p = validate_params(random_params(rng));
    // stay inside the declared validity range gt <= 0.1
    const double t = std::min(time(rng), 0.1 / std::max(p.g, p.chi));
    const CoefficientSet c = compute_coefficients(p, t);
    CHECK(std::abs(std::abs(c.f[1]) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(c.gc[1]) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(c.h[1]) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(c.l[1]) - 1.0) < 1e-12);
    for (int k = 2; k <= 8; ++k) CHECK(std::abs(c.f[k]) <= 10.0);
    for (int k = 2; k <= 6; ++k) CHECK(std::abs(c.gc[k]) <= 10.0);
    for (int k = 2; k <= 8; ++k) CHECK(std::abs(c.h[k]) <= 10.0);
    for (int k = 2; k <= 6; ++k) CHECK(std::abs(c.l[k]) <= 10.0);
  }
}

TEST_CASE("frame relation: absolute = corotating x e^{-i w_m t}") {
  RamanParams co = paper_params();
  RamanParams ab = paper_params();
  ab.frame = Frame::Absolute;
  ab.omega = {3e8 + 2e8 - ab.d_omega1, 3e8, 2e8, 0.0};
  ab.omega[3] = ab.omega[0] + ab.omega[2] - ab.d_omega2;
  const double t = 6.1e-7;
  const CoefficientSet cc = compute_coefficients(co, t);
  const CoefficientSet ca = compute_coefficients(validate_params(ab), t);
  const cplx pa = std::exp(cplx(0.0, -ab.omega[0] * t));
  const cplx pb = std::exp(cplx(0.0, -ab.omega[1] * t));
  const cplx pc = std::exp(cplx(0.0, -ab.omega[2] * t));
  const cplx pd = std::exp(cplx(0.0, -ab.omega[3] * t));
  for (int k = 1; k <= 8; ++k) CHECK(cnear(ca.f[k], cc.f[k] * pa));
  for (int k = 1; k <= 6; ++k) CHECK(cnear(ca.gc[k], cc.gc[k] * pb));
  for (int k = 1; k <= 8; ++k) CHECK(cnear(ca.h[k], cc.h[k] * pc));
  for (int k = 1; k <= 6; ++k) CHECK(cnear(ca.l[k], cc.l[k] * pd));
}
