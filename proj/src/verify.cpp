#include "groupwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <set>

#include "groupwave/circle.hpp"
#include "groupwave/sampling.hpp"

namespace groupwave {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using TbFn = std::function<AlgebraElement(const RealCharacter&,
                                          const AlgebraElement&)>;

/// Negative-control fixture: treats kernel elements as if b(g) = 1, which
/// breaks T_b S_b = S_b T_b = 0.
AlgebraElement corrupted_t_b(const RealCharacter& b, const AlgebraElement& x) {
  AlgebraElement out(x.group());
  for (const auto& [g, c] : x.coefficients()) {
    Rational value = b.value(g);
    double divisor = value.is_zero() ? 1.0 : value.to_double();
    out.add_term(g, c / divisor);
  }
  return out;
}

struct Tracker {
  double max_residual = 0.0;
  long trials = 0;
  bool ok = true;
  std::string detail;

  void check(double residual, double tolerance, const std::string& label) {
    ++trials;
    max_residual = std::max(max_residual, residual);
    if (!(residual <= tolerance)) {
      ok = false;
      if (detail.empty()) {
        detail = label + ": residual " + std::to_string(residual) +
                 " > tolerance " + std::to_string(tolerance);
      }
    }
  }

  void expect(bool condition, const std::string& label) {
    ++trials;
    if (!condition) {
      ok = false;
      max_residual = std::max(max_residual, 1.0);
      if (detail.empty()) detail = label;
    }
  }

  FamilyResult result(const std::string& name) const {
    FamilyResult r;
    r.name = name;
    r.status = ok ? "pass" : "fail";
    r.max_residual = max_residual;
    r.trials = trials;
    r.detail = detail;
    return r;
  }
};

Rng family_rng(const VerifyOptions& options, std::string_view name) {
  return Rng(options.seed ^ fnv1a(name));
}

AlgebraElement test_polynomial(GroupId id, Rng& rng) {
  return random_algebra_element(id, rng, 12, 0.05, 1.0);
}

std::set<GroupElement> joint_support(const WaveProblem& p) {
  std::set<GroupElement> support;
  for (const auto& [g, c] : p.x0.coefficients()) support.insert(g);
  for (const auto& [g, c] : p.y0.coefficients()) support.insert(g);
  return support;
}

/// Upper bound on |w_g(s)| for s in [0, horizon].
double coefficient_amplitude(const WaveProblem& p, const GroupElement& g,
                             double horizon) {
  double x = std::abs(p.x0.coefficient(g));
  double y = std::abs(p.y0.coefficient(g));
  Rational b = p.character.value(g);
  if (b.is_zero()) return x + horizon * y;
  return x + std::min(horizon, 1.0 / std::abs(b.to_double())) * y;
}

double amplitude_l2(const WaveProblem& p, double horizon) {
  double sum = 0.0;
  for (const GroupElement& g : joint_support(p)) {
    double a = coefficient_amplitude(p, g, horizon);
    sum += a * a;
  }
  return std::sqrt(sum);
}

/// Cancellation-noise allowance for a centered second difference at step h:
/// each evaluation carries a few ulps of its coefficient amplitude, and the
/// division by h² amplifies them.
double fd_noise_allowance(double amplitude, double h) {
  return 16.0 * kEps * amplitude / (h * h);
}

FamilyResult run_group_axioms(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "group_axioms");
  for (GroupId id : kAllGroups) {
    for (int trial = 0; trial < 250; ++trial) {
      GroupElement a = random_element(id, rng);
      GroupElement b = random_element(id, rng);
      GroupElement c = random_element(id, rng);
      t.expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
               "associativity violated on " + std::string(group_name(id)));
      GroupElement e = GroupElement::identity(id);
      t.expect(multiply(a, e) == a && multiply(e, a) == a,
               "identity law violated");
      t.expect(multiply(a, inverse(a)) == e && multiply(inverse(a), a) == e,
               "inverse law violated");
      t.expect(parse_element(id, to_text(a)) == a,
               "text round trip failed for '" + to_text(a) + "'");
    }
    std::set<std::string> texts;
    for (const GroupElement& g : ball(id, id == GroupId::DirectSumZ ? 4 : 5)) {
      t.expect(texts.insert(to_text(g)).second,
               "encoding not injective on ball");
    }
  }
  return t.result("group_axioms");
}

FamilyResult run_character_homomorphism(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "character_homomorphism");
  for (GroupId id : kAllGroups) {
    for (const RealCharacter& b : characters_under_test(id)) {
      for (int trial = 0; trial < 200; ++trial) {
        GroupElement g = random_element(id, rng);
        GroupElement h = random_element(id, rng);
        t.expect(b.value(multiply(g, h)) == b.value(g) + b.value(h),
                 "character additivity violated on " +
                     std::string(group_name(id)));
      }
    }
  }
  return t.result("character_homomorphism");
}

FamilyResult run_fourier_cross_check(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "fourier_cross_check");
  for (GroupId id : kAllGroups) {
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = test_polynomial(id, rng);
      GroupElement g = rng.coin() ? random_element(id, rng)
                                  : x.coefficients().begin()->first;
      Complex via_trace = trace(convolve(x, star(AlgebraElement::lambda(g))));
      t.check(std::abs(via_trace - fourier_coefficient(x, g)), 1e-14,
              "fourier coefficient identity");
    }
  }
  return t.result("fourier_cross_check");
}

FamilyResult run_operator_identities(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "operator_identities");
  TbFn tb = options.corrupt_t_b
                ? TbFn(corrupted_t_b)
                : TbFn([](const RealCharacter& b, const AlgebraElement& x) {
                    return t_b(b, x);
                  });
  constexpr double kTol = 1e-12;
  for (GroupId id : kAllGroups) {
    for (const RealCharacter& b : characters_under_test(id)) {
      for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement x = test_polynomial(id, rng);
        double time = -3.0 + 6.0 * rng.unit();

        auto md = [&](const AlgebraElement& v) { return m_t(b, time, v); };
        auto db = [&](const AlgebraElement& v) { return delta_b(b, v); };
        auto sb = [&](const AlgebraElement& v) { return s_b(b, v); };
        auto tbf = [&](const AlgebraElement& v) { return tb(b, v); };

        // Pairwise commutation of {delta_b, M_t, T_b, S_b}.
        t.check(max_coefficient_distance(db(md(x)), md(db(x))), kTol,
                "delta_b and m_t commute");
        t.check(max_coefficient_distance(db(tbf(x)), tbf(db(x))), kTol,
                "delta_b and t_b commute");
        t.check(max_coefficient_distance(db(sb(x)), sb(db(x))), kTol,
                "delta_b and s_b commute");
        t.check(max_coefficient_distance(md(tbf(x)), tbf(md(x))), kTol,
                "m_t and t_b commute");
        t.check(max_coefficient_distance(md(sb(x)), sb(md(x))), kTol,
                "m_t and s_b commute");
        t.check(max_coefficient_distance(tbf(sb(x)), sb(tbf(x))), kTol,
                "t_b and s_b commute");

        // M_t S_b = S_b M_t = S_b.
        t.check(max_coefficient_distance(md(sb(x)), sb(x)), kTol,
                "m_t s_b equals s_b");

        // delta_b S_b = S_b delta_b = 0.
        t.check(l2_norm(db(sb(x))), kTol, "delta_b s_b vanishes");
        t.check(l2_norm(sb(db(x))), kTol, "s_b delta_b vanishes");

        // T_b S_b = S_b T_b = 0.
        t.check(l2_norm(tbf(sb(x))), kTol, "t_b s_b vanishes");
        t.check(l2_norm(sb(tbf(x))), kTol, "s_b t_b vanishes");

        // delta_b T_b = T_b delta_b = i·(off-kernel restriction).
        AlgebraElement expected(id);
        for (const auto& [g, c] : x.coefficients()) {
          if (!b.in_kernel(g)) expected.add_term(g, Complex(0.0, 1.0) * c);
        }
        t.check(max_coefficient_distance(db(tbf(x)), expected), kTol,
                "delta_b t_b is i off kernel");
        t.check(max_coefficient_distance(tbf(db(x)), expected), kTol,
                "t_b delta_b is i off kernel");

        // h_d agrees with the double application of the generator.
        t.check(max_coefficient_distance(h_d(b, x), db(db(x))), 1e-14,
                "h_d equals delta_b twice");
      }
    }
  }
  return t.result("operator_identities");
}

FamilyResult run_one_parameter_laws(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "one_parameter_laws");
  constexpr double kTol = 1e-12;
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = test_polynomial(id, rng);
      AlgebraElement y = test_polynomial(id, rng);
      double s = -3.0 + 6.0 * rng.unit();
      double time = -3.0 + 6.0 * rng.unit();

      t.expect(m_t(b, 0.0, x) == x, "m_0 must be the identity exactly");
      t.check(max_coefficient_distance(m_t(b, s, m_t(b, time, x)),
                                       m_t(b, s + time, x)),
              kTol, "m_s m_t equals m_{s+t}");
      t.check(max_coefficient_distance(
                  m_t(b, time, convolve(x, y)),
                  convolve(m_t(b, time, x), m_t(b, time, y))),
              kTol, "m_t is multiplicative");
      t.check(max_coefficient_distance(m_t(b, time, star(x)),
                                       star(m_t(b, time, x))),
              kTol, "m_t commutes with star");
      t.check(std::abs(l2_norm(m_t(b, time, x)) - l2_norm(x)), kTol,
              "m_t preserves the l2 norm");
    }
  }
  return t.result("one_parameter_laws");
}

WaveProblem random_problem(GroupId id, const RealCharacter& b, Rng& rng) {
  return WaveProblem(b, test_polynomial(id, rng),
                     rng.coin() ? test_polynomial(id, rng)
                                : AlgebraElement(id));
}

FamilyResult run_form_equivalence(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "form_equivalence");
  const double times[] = {0.0, 0.1, 1.0, std::numbers::pi, 50.0};
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 50; ++trial) {
      WaveProblem p = random_problem(id, b, rng);
      for (double time : times) {
        WaveState op = evolve_operator_form(p, time);
        WaveState co = evolve_coefficient_form(p, time);
        t.check(max_coefficient_distance(op.u, co.u), 1e-12,
                "evolution forms agree on u");
        t.check(max_coefficient_distance(op.u_prime, co.u_prime), 1e-12,
                "evolution forms agree on u'");
      }
    }
  }
  return t.result("form_equivalence");
}

FamilyResult run_kernel_decomposition(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "kernel_decomposition");
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 50; ++trial) {
      WaveProblem p = random_problem(id, b, rng);
      double time = 10.0 * rng.unit();
      WaveState state = evolve_coefficient_form(p, time);

      AlgebraElement affine = s_b(b, p.x0) + Complex(time, 0.0) * s_b(b, p.y0);
      t.expect(s_b(b, state.u) == affine,
               "kernel part of u(t) must evolve affinely");

      double off_kernel = l2_norm(state.u - s_b(b, state.u));
      t.check(off_kernel, l2_norm(p.x0) + l2_norm(t_b(b, p.y0)) + 1e-12,
              "off-kernel part bounded uniformly in t");

      for (const auto& [g, c] : state.u.coefficients()) {
        t.expect(!(p.x0.coefficient(g) == Complex(0.0, 0.0) &&
                   p.y0.coefficient(g) == Complex(0.0, 0.0)),
                 "support of u(t) escaped the initial data");
      }
    }
  }
  return t.result("kernel_decomposition");
}

FamilyResult run_energy_conservation(const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "energy_conservation");
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 10; ++trial) {
      WaveProblem p = random_problem(id, b, rng);
      double reference = energy(p, evolve_coefficient_form(p, 0.0));
      double scale = std::max(reference, 1e-300);
      for (int sample = 0; sample < 50; ++sample) {
        double time = 0.2 * (sample + 1);
        double e = energy(p, evolve_coefficient_form(p, time));
        t.check(std::abs(e - reference) / scale, 1e-10,
                "energy drifted along the evolution");
      }
    }
  }
  return t.result("energy_conservation");
}

/// Taylor bound for the centered-difference PDE residual: the fourth time
/// derivative of each coefficient is bounded by b^4·(|x0^| + |y0^|/|b|).
double pde_taylor_bound(const WaveProblem& p, double h) {
  double sum = 0.0;
  for (const GroupElement& g : joint_support(p)) {
    Rational b = p.character.value(g);
    if (b.is_zero()) continue;
    double bf = std::abs(b.to_double());
    double amplitude = std::abs(p.x0.coefficient(g)) +
                       std::abs(p.y0.coefficient(g)) / bf;
    double term = bf * bf * bf * bf * amplitude;
    sum += term * term;
  }
  return h * h / 12.0 * std::sqrt(sum);
}

FamilyResult run_pde_residual(const WaveProblem& configured,
                              const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "pde_residual");
  std::vector<WaveProblem> problems{configured};
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 10; ++trial) {
      problems.push_back(random_problem(id, b, rng));
    }
  }
  for (const WaveProblem& p : problems) {
    const double h = 1e-3;
    const double time = 1.0;
    double amplitude = amplitude_l2(p, time + h);
    double coarse = pde_residual(p, time, h);
    double fine = pde_residual(p, time, h / 2.0);
    t.check(coarse,
            pde_taylor_bound(p, h) * 1.001 + fd_noise_allowance(amplitude, h),
            "pde residual exceeded its Taylor bound");
    // Richardson only where the fine residual clears the noise floor.
    if (fine > 32.0 * fd_noise_allowance(amplitude, h / 2.0)) {
      double ratio = coarse / fine;
      t.expect(ratio > 3.6 && ratio < 4.4,
               "Richardson ratio " + std::to_string(ratio) +
                   " outside [3.6, 4.4]");
    }
  }
  return t.result("pde_residual");
}

FamilyResult run_coefficient_ode(const WaveProblem& configured,
                                 const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "coefficient_ode");
  std::vector<WaveProblem> problems{configured};
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 10; ++trial) {
      problems.push_back(random_problem(id, b, rng));
    }
  }
  for (const WaveProblem& p : problems) {
    const double h = 1e-3;
    const double time = 0.7;
    for (const GroupElement& g : joint_support(p)) {
      double residual = coefficient_ode_residual(p, g, time, h);
      double amplitude = coefficient_amplitude(p, g, time + h);
      double noise = fd_noise_allowance(amplitude, h);
      Rational b = p.character.value(g);
      if (b.is_zero()) {
        t.check(residual, noise, "kernel coefficient ODE residual");
        continue;
      }
      double bf = std::abs(b.to_double());
      double bound = h * h / 12.0 * bf * bf * bf * bf * amplitude;
      t.check(residual, bound * 1.001 + noise,
              "coefficient ODE residual exceeded its Taylor bound");
    }
  }
  return t.result("coefficient_ode");
}

FamilyResult run_initial_conditions(const WaveProblem& configured,
                                    const VerifyOptions& options) {
  Tracker t;
  Rng rng = family_rng(options, "initial_conditions");
  std::vector<WaveProblem> problems{configured};
  for (GroupId id : kAllGroups) {
    const RealCharacter b = default_character(id);
    for (int trial = 0; trial < 10; ++trial) {
      problems.push_back(random_problem(id, b, rng));
    }
  }
  for (const WaveProblem& p : problems) {
    const double h = 1e-6;
    auto [displacement, velocity] = initial_condition_residuals(p, h);
    double sum_u = 0.0;
    double sum_v = 0.0;
    for (const auto& [g, c] : p.x0.coefficients()) {
      double bf = std::abs(p.character.value_as_double(g));
      double term_u = h * h * bf * bf / 2.0 * std::abs(c);
      double term_v = h * bf * bf * std::abs(c);
      sum_u += term_u * term_u;
      sum_v += term_v * term_v;
    }
    for (const auto& [g, c] : p.y0.coefficients()) {
      double bf = std::abs(p.character.value_as_double(g));
      double term_u = h * std::abs(c);
      double term_v = h * h * bf * bf / 2.0 * std::abs(c);
      sum_u += term_u * term_u;
      sum_v += term_v * term_v;
    }
    // The flat slack covers trig evaluation ulps where the O(h) terms are
    // below double resolution.
    t.check(displacement, std::sqrt(sum_u) * 1.001 + 1e-13,
            "u(h) drifted from x0 faster than O(h)");
    t.check(velocity, std::sqrt(sum_v) * 1.001 + 1e-13,
            "u'(h) drifted from y0 faster than O(h)");
  }
  return t.result("initial_conditions");
}

FamilyResult run_classical_recovery(const WaveProblem& configured,
                                    const VerifyOptions& options) {
  if (configured.character.group() != GroupId::IntZ ||
      configured.character.kind() != RealCharacter::Kind::IdOnZ) {
    FamilyResult r;
    r.name = "classical_recovery";
    r.status = "skipped";
    r.detail = "group not IntZ";
    return r;
  }
  Tracker t;
  Rng rng = family_rng(options, "classical_recovery");
  CircleGrid grid(1024);
  const double times[] = {0.0, 0.5, 1.0, std::numbers::pi, 10.0};
  std::vector<WaveProblem> problems{configured};
  for (int trial = 0; trial < 10; ++trial) {
    problems.push_back(
        random_problem(GroupId::IntZ, RealCharacter::id_on_z(), rng));
  }
  for (const WaveProblem& p : problems) {
    for (double time : times) {
      t.check(compare_solver_to_classical(p, time, grid), 1e-10,
              "solver diverged from the classical series");
    }
  }
  return t.result("classical_recovery");
}

}  // namespace

std::vector<FamilyResult> run_verification(const WaveProblem& configured,
                                           const VerifyOptions& options) {
  std::vector<std::function<FamilyResult()>> jobs;
  if (options.run_identities) {
    jobs.push_back([&] { return run_group_axioms(options); });
    jobs.push_back([&] { return run_character_homomorphism(options); });
    jobs.push_back([&] { return run_fourier_cross_check(options); });
    jobs.push_back([&] { return run_operator_identities(options); });
    jobs.push_back([&] { return run_one_parameter_laws(options); });
    jobs.push_back([&] { return run_form_equivalence(options); });
    jobs.push_back([&] { return run_kernel_decomposition(options); });
    jobs.push_back([&] { return run_energy_conservation(options); });
  }
  if (options.run_pde) {
    jobs.push_back([&] { return run_pde_residual(configured, options); });
    jobs.push_back([&] { return run_coefficient_ode(configured, options); });
  }
  if (options.run_initial) {
    jobs.push_back([&] { return run_initial_conditions(configured, options); });
  }
  if (options.run_classical) {
    jobs.push_back([&] { return run_classical_recovery(configured, options); });
  }

  std::vector<FamilyResult> results(jobs.size());
  if (options.threads > 1) {
    std::vector<std::future<FamilyResult>> futures;
    futures.reserve(jobs.size());
    for (auto& job : jobs) {
      futures.push_back(std::async(std::launch::async, job));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
      results[i] = futures[i].get();
    }
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
  }
  std::sort(results.begin(), results.end(),
            [](const FamilyResult& a, const FamilyResult& b) {
              return a.name < b.name;
            });
  return results;
}

}  // namespace groupwave
