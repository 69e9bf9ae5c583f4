#pragma once

#include <string>
#include <utility>
#include <vector>

#include "groupwave/multiplier.hpp"

namespace groupwave {

/// Wave problem data: initial displacement x0, initial velocity y0, and the
/// real character b defining d = b². Both initial data are λ-polynomials,
/// which lie in every smoothness class F^n(G), so no further membership
/// check applies.
struct WaveProblem {
  WaveProblem(RealCharacter character, AlgebraElement x0, AlgebraElement y0);

  RealCharacter character;
  AlgebraElement x0;
  AlgebraElement y0;
};

/// Snapshot of the evolution: u(t), the analytic derivative u'(t), an
/// optional PDE residual filled in by the verifier (0 otherwise), and
/// conditioning notes (off-kernel divisors |b(g)| < 1e-8).
struct WaveState {
  double t = 0.0;
  AlgebraElement u{GroupId::IntZ};
  AlgebraElement u_prime{GroupId::IntZ};
  double residual_l2 = 0.0;
  std::vector<std::string> notes;
};

/// Evolution assembled from the operator calculus:
///   u(t) = t·S_b(y0) + (M_t(x0)+M_{-t}(x0))/2 + (M_t(T_b y0)-M_{-t}(T_b y0))/(2i)
/// with u'(t) from the same calculus applied to δ_b(x0) and δ_b(T_b y0).
WaveState evolve_operator_form(const WaveProblem& p, double t);

/// Evolution computed coefficientwise:
///   on ker(b):  u^(g) = x0^(g) + t·y0^(g),              u'^(g) = y0^(g)
///   off ker(b): u^(g) = cos(tb)x0^(g) + sin(tb)/b·y0^(g),
///               u'^(g) = -b·sin(tb)x0^(g) + cos(tb)y0^(g)
WaveState evolve_coefficient_form(const WaveProblem& p, double t);

/// l2 norm of the centered second difference of u minus H_d(u(t)), at step
/// h, using the coefficient form. Requires t > h > 0.
double pde_residual(const WaveProblem& p, double t, double h);

/// ( ||u(h) - x0||_2, ||u'(h) - y0||_2 ).
std::pair<double, double> initial_condition_residuals(const WaveProblem& p,
                                                      double h);

/// |D²_h w_g(t) + b(g)² w_g(t)| for the tracked coefficient
/// w_g(t) = u(t)^(g).
double coefficient_ode_residual(const WaveProblem& p, const GroupElement& g,
                                double t, double h);

/// E(t) = ||u'(t)||_2² + ||δ_b(u(t))||_2²; constant along the evolution.
double energy(const WaveProblem& p, const WaveState& state);

}  // namespace groupwave
