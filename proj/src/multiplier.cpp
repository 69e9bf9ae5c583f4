#include "groupwave/multiplier.hpp"

#include <cmath>

#include "groupwave/errors.hpp"

namespace groupwave {

MultiplierSymbol MultiplierSymbol::exp(RealCharacter character, double t) {
  if (!std::isfinite(t)) throw SemanticError("exp multiplier needs finite t");
  MultiplierSymbol s(Kind::Exp, std::move(character));
  s.t_ = t;
  return s;
}

MultiplierSymbol MultiplierSymbol::generator(RealCharacter character) {
  return MultiplierSymbol(Kind::Generator, std::move(character));
}

MultiplierSymbol MultiplierSymbol::inverse_off_kernel(RealCharacter character) {
  return MultiplierSymbol(Kind::InverseOffKernel, std::move(character));
}

MultiplierSymbol MultiplierSymbol::kernel_projector(RealCharacter character) {
  return MultiplierSymbol(Kind::KernelProjector, std::move(character));
}

MultiplierSymbol MultiplierSymbol::laplacian(RealCharacter character) {
  return MultiplierSymbol(Kind::Laplacian, std::move(character));
}

MultiplierSymbol MultiplierSymbol::custom(RealCharacter character, CustomFn fn,
                                          double bound) {
  // MA(G) membership requires a bounded symbol; an unbounded one has no
  // associated operator, so reject it here.
  if (!(std::isfinite(bound) && bound >= 0.0)) {
    throw SemanticError("custom multiplier must declare a finite bound");
  }
  if (!fn) throw SemanticError("custom multiplier needs a function");
  MultiplierSymbol s(Kind::Custom, std::move(character));
  s.custom_ = std::move(fn);
  return s;
}

Complex MultiplierSymbol::evaluate(const GroupElement& g,
                                   MultiplierDiagnostics* diagnostics) const {
  switch (kind_) {
    case Kind::Exp: {
      double arg = t_ * character_.value_as_double(g);
      if (std::abs(arg) > 1e12 && diagnostics != nullptr) {
        diagnostics->trig_precision_warning = true;
      }
      return Complex(std::cos(arg), std::sin(arg));
    }
    case Kind::Generator:
      return Complex(0.0, character_.value_as_double(g));
    case Kind::InverseOffKernel: {
      // Kernel membership is the exact-rational test; only genuinely
      // nonzero values reach the float division.
      Rational b = character_.value(g);
      if (b.is_zero()) return Complex(0.0, 0.0);
      return Complex(1.0 / b.to_double(), 0.0);
    }
    case Kind::KernelProjector:
      return character_.in_kernel(g) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    case Kind::Laplacian: {
      double b = character_.value_as_double(g);
      return Complex(-b * b, 0.0);
    }
    case Kind::Custom:
      return custom_(g);
  }
  throw SemanticError("unknown multiplier kind");
}

AlgebraElement apply(const MultiplierSymbol& symbol, const AlgebraElement& x,
                     MultiplierDiagnostics* diagnostics) {
  if (symbol.character().group() != x.group()) {
    throw SemanticError("multiplier character and element group mismatch");
  }
  AlgebraElement out(x.group());
  for (const auto& [g, c] : x.coefficients()) {
    out.add_term(g, symbol.evaluate(g, diagnostics) * c);
  }
  return out;
}

AlgebraElement m_t(const RealCharacter& b, double t, const AlgebraElement& x,
                   MultiplierDiagnostics* diagnostics) {
  return apply(MultiplierSymbol::exp(b, t), x, diagnostics);
}

AlgebraElement delta_b(const RealCharacter& b, const AlgebraElement& x) {
  return apply(MultiplierSymbol::generator(b), x);
}

AlgebraElement t_b(const RealCharacter& b, const AlgebraElement& x) {
  return apply(MultiplierSymbol::inverse_off_kernel(b), x);
}

AlgebraElement s_b(const RealCharacter& b, const AlgebraElement& x) {
  return apply(MultiplierSymbol::kernel_projector(b), x);
}

AlgebraElement h_d(const RealCharacter& b, const AlgebraElement& x) {
  return apply(MultiplierSymbol::laplacian(b), x);
}

}  // namespace groupwave
