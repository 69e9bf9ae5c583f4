#pragma once

#include <functional>
#include <optional>

#include "groupwave/algebra.hpp"
#include "groupwave/character.hpp"

namespace groupwave {

/// Diagnostics accumulated while applying a multiplier; callers that do not
/// care pass nullptr.
struct MultiplierDiagnostics {
  /// Set when |t·b(g)| exceeded 1e12, where trig argument reduction has
  /// lost all digits.
  bool trig_precision_warning = false;
};

/// A bounded scalar symbol on G applied coefficientwise. Houses the
/// one-parameter group symbol e^{i t b(g)}, the generator symbol i·b(g),
/// the off-kernel divider 1/b(g), the kernel projector, and the Laplacian
/// symbol -b(g)^2. Custom symbols must declare a finite bound.
class MultiplierSymbol {
 public:
  enum class Kind {
    Exp,
    Generator,
    InverseOffKernel,
    KernelProjector,
    Laplacian,
    Custom,
  };

  using CustomFn = std::function<Complex(const GroupElement&)>;

  static MultiplierSymbol exp(RealCharacter character, double t);
  static MultiplierSymbol generator(RealCharacter character);
  static MultiplierSymbol inverse_off_kernel(RealCharacter character);
  static MultiplierSymbol kernel_projector(RealCharacter character);
  static MultiplierSymbol laplacian(RealCharacter character);
  static MultiplierSymbol custom(RealCharacter character, CustomFn fn,
                                 double bound);

  Kind kind() const { return kind_; }
  const RealCharacter& character() const { return character_; }
  double time() const { return t_; }

  Complex evaluate(const GroupElement& g,
                   MultiplierDiagnostics* diagnostics = nullptr) const;

 private:
  MultiplierSymbol(Kind kind, RealCharacter character)
      : kind_(kind), character_(std::move(character)) {}

  Kind kind_;
  RealCharacter character_;
  double t_ = 0.0;
  CustomFn custom_;
};

/// M_φ: output coefficient at g is φ(g)·x^(g); support shrinks where the
/// symbol vanishes.
AlgebraElement apply(const MultiplierSymbol& symbol, const AlgebraElement& x,
                     MultiplierDiagnostics* diagnostics = nullptr);

/// M_t^b, one member of the *-automorphism group: coefficients scaled by
/// e^{i t b(g)}. Preserves the support exactly and the l2 norm up to
/// rounding; M_0^b is the identity.
AlgebraElement m_t(const RealCharacter& b, double t, const AlgebraElement& x,
                   MultiplierDiagnostics* diagnostics = nullptr);

/// Generator of {M_t^b}: coefficient at g becomes i·b(g)·x^(g).
AlgebraElement delta_b(const RealCharacter& b, const AlgebraElement& x);

/// Off-kernel divider: x^(g)/b(g) off ker(b), exactly 0 on ker(b). Kernel
/// membership is the exact-rational zero test, never a float epsilon.
AlgebraElement t_b(const RealCharacter& b, const AlgebraElement& x);

/// Kernel projector: restriction of the coefficients to ker(b).
AlgebraElement s_b(const RealCharacter& b, const AlgebraElement& x);

/// Laplacian analogue H_d = δ_b∘δ_b with d = b²: coefficient at g becomes
/// -b(g)²·x^(g).
AlgebraElement h_d(const RealCharacter& b, const AlgebraElement& x);

}  // namespace groupwave
