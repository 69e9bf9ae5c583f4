#include "groupwave/sampling.hpp"

#include <cmath>
#include <numbers>

#include "groupwave/errors.hpp"

namespace groupwave {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : text) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

GroupElement random_element(GroupId id, Rng& rng) {
  switch (id) {
    case GroupId::IntZ:
      return GroupElement::int_z(rng.range(-6, 6));
    case GroupId::DirectSumZ: {
      GroupElement::DirectSumEntries entries;
      int count = static_cast<int>(rng.range(0, 3));
      for (int i = 0; i < count; ++i) {
        entries.emplace_back(static_cast<std::int32_t>(rng.range(1, 6)),
                             rng.range(-5, 5));
      }
      return GroupElement::direct_sum(std::move(entries));
    }
    case GroupId::HeisenbergZ:
      return GroupElement::heisenberg(rng.range(-5, 5), rng.range(-5, 5),
                                      rng.range(-5, 5));
    case GroupId::FreeGroup2: {
      GroupElement::Word word;
      int length = static_cast<int>(rng.range(0, 6));
      for (int i = 0; i < length; ++i) {
        word.push_back(static_cast<Letter>(rng.range(0, 3)));
      }
      return GroupElement::free_word(std::move(word));
    }
  }
  throw SemanticError("unknown group id");
}

Complex random_coefficient(Rng& rng, double min_modulus, double max_modulus) {
  double modulus = min_modulus + (max_modulus - min_modulus) * rng.unit();
  double phase = 2.0 * std::numbers::pi * rng.unit();
  return Complex(modulus * std::cos(phase), modulus * std::sin(phase));
}

AlgebraElement random_algebra_element(GroupId id, Rng& rng, int max_support,
                                      double min_modulus, double max_modulus) {
  AlgebraElement x(id);
  int support = static_cast<int>(rng.range(1, max_support));
  for (int i = 0; i < support; ++i) {
    x.add_term(random_element(id, rng),
               random_coefficient(rng, min_modulus, max_modulus));
  }
  return x;
}

AlgebraElement random_algebra_element_with_bounded_character(
    GroupId id, const RealCharacter& b, Rng& rng, int max_support,
    double min_modulus, double max_modulus, double bound) {
  AlgebraElement x(id);
  int support = static_cast<int>(rng.range(1, max_support));
  for (int i = 0; i < support; ++i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      GroupElement g = random_element(id, rng);
      if (std::abs(b.value_as_double(g)) <= bound) {
        x.add_term(g, random_coefficient(rng, min_modulus, max_modulus));
        break;
      }
    }
  }
  return x;
}

std::optional<GroupElement> element_with_character_in(GroupId id,
                                                      const RealCharacter& b,
                                                      Rng& rng, double lo,
                                                      double hi) {
  for (int attempt = 0; attempt < 512; ++attempt) {
    GroupElement g = random_element(id, rng);
    double value = std::abs(b.value_as_double(g));
    if (value >= lo && value <= hi) return g;
  }
  std::vector<GroupElement> fallbacks;
  switch (id) {
    case GroupId::IntZ:
      for (std::int64_t n = 1; n <= 8; ++n) {
        fallbacks.push_back(GroupElement::int_z(n));
      }
      break;
    case GroupId::DirectSumZ:
      for (std::int64_t v = 1; v <= 16; ++v) {
        fallbacks.push_back(GroupElement::direct_sum({{1, v}}));
      }
      break;
    case GroupId::HeisenbergZ:
      for (std::int64_t l = 1; l <= 8; ++l) {
        fallbacks.push_back(GroupElement::heisenberg(l, 0, 0));
      }
      break;
    case GroupId::FreeGroup2:
      for (int n = 1; n <= 8; ++n) {
        fallbacks.push_back(GroupElement::free_word(
            GroupElement::Word(static_cast<std::size_t>(n), Letter::X)));
      }
      break;
  }
  for (const GroupElement& g : fallbacks) {
    double value = std::abs(b.value_as_double(g));
    if (value >= lo && value <= hi) return g;
  }
  return std::nullopt;
}

RealCharacter default_character(GroupId id) {
  switch (id) {
    case GroupId::IntZ: return RealCharacter::id_on_z();
    case GroupId::DirectSumZ: return RealCharacter::dyadic_on_direct_sum();
    case GroupId::HeisenbergZ: return RealCharacter::upper_left_on_heisenberg();
    case GroupId::FreeGroup2: return RealCharacter::exponent_sum_x_on_f2();
  }
  throw SemanticError("unknown group id");
}

std::vector<RealCharacter> characters_under_test(GroupId id) {
  std::vector<RealCharacter> out{default_character(id)};
  switch (id) {
    case GroupId::IntZ:
      out.push_back(RealCharacter::custom(id, {{"1", Rational(2, 3)}}));
      break;
    case GroupId::DirectSumZ:
      out.push_back(RealCharacter::custom(
          id, {{"1:1", Rational(1, 1)}, {"3:1", Rational(-1, 2)}}));
      break;
    case GroupId::HeisenbergZ:
      out.push_back(RealCharacter::custom(
          id, {{"[1,0,0]", Rational(1, 2)}, {"[0,0,1]", Rational(-1, 3)}}));
      break;
    case GroupId::FreeGroup2:
      out.push_back(RealCharacter::custom(
          id, {{"x", Rational(1, 3)}, {"y", Rational(-2, 1)}}));
      break;
  }
  return out;
}

}  // namespace groupwave
