#include "groupwave/wave.hpp"

#include <cmath>
#include <set>

#include "groupwave/errors.hpp"

namespace groupwave {

WaveProblem::WaveProblem(RealCharacter character_in, AlgebraElement x0_in,
                         AlgebraElement y0_in)
    : character(std::move(character_in)),
      x0(std::move(x0_in)),
      y0(std::move(y0_in)) {
  if (x0.group() != character.group() || y0.group() != character.group()) {
    throw SemanticError("wave problem data must share one group");
  }
}

namespace {

void collect_conditioning_notes(const WaveProblem& p, WaveState& state) {
  std::set<std::string> seen;
  auto scan = [&](const AlgebraElement& x) {
    for (const auto& [g, c] : x.coefficients()) {
      Rational b = p.character.value(g);
      if (!b.is_zero() && std::abs(b.to_double()) < 1e-8) {
        std::string note = "ill-conditioned divisor b(" + to_text(g) +
                           ") = " + b.to_string();
        if (seen.insert(note).second) state.notes.push_back(note);
      }
    }
  };
  scan(p.x0);
  scan(p.y0);
}

void require_nonnegative_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw SemanticError("wave evolution requires t >= 0");
  }
}

}  // namespace

WaveState evolve_operator_form(const WaveProblem& p, double t) {
  require_nonnegative_time(t);
  const RealCharacter& b = p.character;
  const Complex half(0.5, 0.0);
  const Complex inv_two_i(0.0, -0.5);  // 1/(2i)

  AlgebraElement t_y0 = t_b(b, p.y0);
  AlgebraElement u = Complex(t, 0.0) * s_b(b, p.y0) +
                     half * (m_t(b, t, p.x0) + m_t(b, -t, p.x0)) +
                     inv_two_i * (m_t(b, t, t_y0) - m_t(b, -t, t_y0));

  // u' from the term-by-term derivatives in the operator calculus:
  //   u1' = S_b(y0), u2' = (M_t - M_{-t})(δ_b x0)/2,
  //   u3' = (M_t + M_{-t})(δ_b T_b y0)/(2i).
  AlgebraElement dx0 = delta_b(b, p.x0);
  AlgebraElement dty0 = delta_b(b, t_y0);
  AlgebraElement u_prime = s_b(b, p.y0) +
                           half * (m_t(b, t, dx0) - m_t(b, -t, dx0)) +
                           inv_two_i * (m_t(b, t, dty0) + m_t(b, -t, dty0));

  WaveState state;
  state.t = t;
  state.u = std::move(u);
  state.u_prime = std::move(u_prime);
  collect_conditioning_notes(p, state);
  return state;
}

namespace {

/// Shared coefficient recipe; `derivative` selects u'(t) over u(t).
AlgebraElement coefficient_evolution(const WaveProblem& p, double t,
                                     bool derivative) {
  AlgebraElement out(p.character.group());
  std::set<GroupElement> support;
  for (const auto& [g, c] : p.x0.coefficients()) support.insert(g);
  for (const auto& [g, c] : p.y0.coefficients()) support.insert(g);

  for (const GroupElement& g : support) {
    Complex x0c = p.x0.coefficient(g);
    Complex y0c = p.y0.coefficient(g);
    Rational bg = p.character.value(g);
    Complex value;
    if (bg.is_zero()) {
      value = derivative ? y0c : x0c + t * y0c;
    } else {
      double bf = bg.to_double();
      double arg = t * bf;
      double c = std::cos(arg);
      double s = std::sin(arg);
      value = derivative ? (-bf * s) * x0c + c * y0c
                         : c * x0c + (s / bf) * y0c;
    }
    out.add_term(g, value);
  }
  return out;
}

}  // namespace

WaveState evolve_coefficient_form(const WaveProblem& p, double t) {
  require_nonnegative_time(t);
  WaveState state;
  state.t = t;
  state.u = coefficient_evolution(p, t, false);
  state.u_prime = coefficient_evolution(p, t, true);
  collect_conditioning_notes(p, state);
  return state;
}

double pde_residual(const WaveProblem& p, double t, double h) {
  if (!(t > h && h > 0.0)) throw SemanticError("pde residual needs t > h > 0");
  AlgebraElement u_minus = evolve_coefficient_form(p, t - h).u;
  AlgebraElement u_mid = evolve_coefficient_form(p, t).u;
  AlgebraElement u_plus = evolve_coefficient_form(p, t + h).u;
  Complex inv_h2(1.0 / (h * h), 0.0);
  AlgebraElement second_difference =
      inv_h2 * (u_plus - Complex(2.0, 0.0) * u_mid + u_minus);
  return l2_norm(second_difference - h_d(p.character, u_mid));
}

std::pair<double, double> initial_condition_residuals(const WaveProblem& p,
                                                      double h) {
  if (!(h > 0.0)) throw SemanticError("initial residuals need h > 0");
  WaveState state = evolve_coefficient_form(p, h);
  return {l2_norm(state.u - p.x0), l2_norm(state.u_prime - p.y0)};
}

double coefficient_ode_residual(const WaveProblem& p, const GroupElement& g,
                                double t, double h) {
  if (!(t > h && h > 0.0)) {
    throw SemanticError("coefficient ode residual needs t > h > 0");
  }
  Complex w_minus = evolve_coefficient_form(p, t - h).u.coefficient(g);
  Complex w_mid = evolve_coefficient_form(p, t).u.coefficient(g);
  Complex w_plus = evolve_coefficient_form(p, t + h).u.coefficient(g);
  double bf = p.character.value_as_double(g);
  Complex second_difference = (w_plus - 2.0 * w_mid + w_minus) / (h * h);
  return std::abs(second_difference + (bf * bf) * w_mid);
}

double energy(const WaveProblem& p, const WaveState& state) {
  double du = l2_norm(delta_b(p.character, state.u));
  double v = l2_norm(state.u_prime);
  return v * v + du * du;
}

}  // namespace groupwave
