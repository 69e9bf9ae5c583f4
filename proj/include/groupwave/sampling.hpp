#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "groupwave/algebra.hpp"
#include "groupwave/character.hpp"

namespace groupwave {

/// Deterministic random source. Doubles are derived from raw engine bits so
/// that streams do not depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double unit() { return (next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Stable 64-bit name hash for deriving per-family seeds.
std::uint64_t fnv1a(std::string_view text);

GroupElement random_element(GroupId id, Rng& rng);

/// Random complex number with modulus in [min_modulus, max_modulus].
Complex random_coefficient(Rng& rng, double min_modulus, double max_modulus);

/// Random λ-polynomial with support <= max_support and coefficient moduli
/// in [min_modulus, max_modulus].
AlgebraElement random_algebra_element(GroupId id, Rng& rng, int max_support,
                                      double min_modulus, double max_modulus);

/// Like random_algebra_element but keeps only support with |b(g)| <= bound.
AlgebraElement random_algebra_element_with_bounded_character(
    GroupId id, const RealCharacter& b, Rng& rng, int max_support,
    double min_modulus, double max_modulus, double bound);

/// An element with |b(g)| in [lo, hi]: random draws first, then a
/// deterministic per-group fallback suited to the built-in characters.
std::optional<GroupElement> element_with_character_in(GroupId id,
                                                      const RealCharacter& b,
                                                      Rng& rng, double lo,
                                                      double hi);

/// The built-in character of each group.
RealCharacter default_character(GroupId id);

/// Built-in character plus one fixed custom character per group; the pairs
/// exercised by the identity suites.
std::vector<RealCharacter> characters_under_test(GroupId id);

constexpr GroupId kAllGroups[] = {GroupId::IntZ, GroupId::DirectSumZ,
                                  GroupId::HeisenbergZ, GroupId::FreeGroup2};

}  // namespace groupwave
