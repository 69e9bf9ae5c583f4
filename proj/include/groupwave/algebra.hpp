#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groupwave/group.hpp"

namespace groupwave {

using Complex = std::complex<double>;

/// Finitely supported x = sum_g x^(g) λ(g) in C(G), stored as its Fourier
/// coefficient map. Coefficients with modulus below the prune threshold are
/// dropped; the threshold is effectively an exact-zero test so that the
/// cancellations produced by the kernel/off-kernel operators stay visible
/// in the support.
class AlgebraElement {
 public:
  using Coefficients = std::map<GroupElement, Complex>;
  using Term = std::pair<GroupElement, Complex>;

  static constexpr double kPruneThreshold = 1e-300;

  explicit AlgebraElement(GroupId id) : id_(id) {}

  /// Coefficients of repeated keys are summed; zeros pruned.
  static AlgebraElement from_terms(GroupId id, std::span<const Term> terms);
  static AlgebraElement from_terms(GroupId id,
                                   std::initializer_list<Term> terms);
  /// λ(g), the basis unitary.
  static AlgebraElement lambda(const GroupElement& g);

  GroupId group() const { return id_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  /// Stored coefficient, or 0 when g is outside the support. Equals
  /// trace(convolve(x, star(lambda(g)))).
  Complex coefficient(const GroupElement& g) const;

  AlgebraElement& add_term(const GroupElement& g, Complex c);

  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator*(Complex scale, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  GroupId id_;
  Coefficients coeffs_;
};

/// (x·y)^(k) = sum_{g·h=k} x^(g) y^(h), over the finite support pairs.
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);

/// Involution: (x*)^(g) = conj(x^(g^{-1})).
AlgebraElement star(const AlgebraElement& x);

/// Canonical tracial state: tau(x) = x^(e).
Complex trace(const AlgebraElement& x);

Complex fourier_coefficient(const AlgebraElement& x, const GroupElement& g);

double l2_norm(const AlgebraElement& x);
double l1_norm(const AlgebraElement& x);

/// Coefficientwise max distance on the union support; the comparison metric
/// used throughout the identity suites.
double max_coefficient_distance(const AlgebraElement& a,
                                const AlgebraElement& b);

/// "re+imi * element" terms joined by "; "; the zero element is "".
std::string to_text(const AlgebraElement& x);
AlgebraElement parse_algebra_element(GroupId id, std::string_view text);

}  // namespace groupwave
