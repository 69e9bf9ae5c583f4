#include "groupwave/character.hpp"

#include "groupwave/errors.hpp"

namespace groupwave {

RealCharacter RealCharacter::id_on_z() {
  return RealCharacter(GroupId::IntZ, Kind::IdOnZ);
}

RealCharacter RealCharacter::dyadic_on_direct_sum() {
  return RealCharacter(GroupId::DirectSumZ, Kind::DyadicOnDirectSum);
}

RealCharacter RealCharacter::upper_left_on_heisenberg() {
  return RealCharacter(GroupId::HeisenbergZ, Kind::UpperLeftOnHeisenberg);
}

RealCharacter RealCharacter::exponent_sum_x_on_f2() {
  return RealCharacter(GroupId::FreeGroup2, Kind::ExponentSumXOnF2);
}

namespace {

bool is_standard_generator(const GroupElement& g) {
  switch (g.group()) {
    case GroupId::IntZ:
      return g.int_value() == 1;
    case GroupId::DirectSumZ: {
      const auto& e = g.direct_sum_entries();
      return e.size() == 1 && e[0].second == 1;
    }
    case GroupId::HeisenbergZ: {
      const auto& t = g.heisenberg_triple();
      std::int64_t ones = 0;
      for (auto c : t) {
        if (c == 1) ++ones;
        else if (c != 0) return false;
      }
      return ones == 1;
    }
    case GroupId::FreeGroup2: {
      const auto& w = g.word();
      return w.size() == 1 && (w[0] == Letter::X || w[0] == Letter::Y);
    }
  }
  return false;
}

}  // namespace

RealCharacter RealCharacter::custom(
    GroupId group, const std::map<std::string, Rational>& table) {
  RealCharacter c(group, Kind::Custom);
  bool nonzero = false;
  for (const auto& [key, value] : table) {
    GroupElement g = parse_element(group, key);
    if (!is_standard_generator(g)) {
      throw SemanticError("custom character key is not a generator: '" + key +
                          "'");
    }
    if (group == GroupId::HeisenbergZ && g.heisenberg_triple()[1] == 1 &&
        !value.is_zero()) {
      // [0,1,0] is the commutator of [1,0,0] and [0,0,1]; a homomorphism
      // into (R,+) must kill it.
      throw SemanticError(
          "custom character on heisenberg_z must send the commutator "
          "generator [0,1,0] to 0");
    }
    if (!value.is_zero()) nonzero = true;
    c.table_.emplace(std::move(g), value);
  }
  if (!nonzero) {
    throw SemanticError("character must be nonzero on the generating set");
  }
  return c;
}

std::string_view RealCharacter::kind_name() const {
  switch (kind_) {
    case Kind::IdOnZ: return "id_on_z";
    case Kind::DyadicOnDirectSum: return "dyadic_on_direct_sum";
    case Kind::UpperLeftOnHeisenberg: return "upper_left_on_heisenberg";
    case Kind::ExponentSumXOnF2: return "exponent_sum_x_on_f2";
    case Kind::Custom: return "custom";
  }
  return "unknown";
}

RealCharacter::Kind RealCharacter::parse_kind_name(std::string_view name) {
  if (name == "id_on_z") return Kind::IdOnZ;
  if (name == "dyadic_on_direct_sum") return Kind::DyadicOnDirectSum;
  if (name == "upper_left_on_heisenberg") return Kind::UpperLeftOnHeisenberg;
  if (name == "exponent_sum_x_on_f2") return Kind::ExponentSumXOnF2;
  if (name == "custom") return Kind::Custom;
  throw SemanticError("unknown character kind: '" + std::string(name) + "'");
}

namespace {

Rational dyadic_value(const GroupElement& g) {
  // b((a_i)) = sum_i a_i / 2^i
  Rational sum;
  for (const auto& [index, value] : g.direct_sum_entries()) {
    if (index > 62) {
      throw std::overflow_error("dyadic character index too large");
    }
    sum += Rational(value, std::int64_t{1} << index);
  }
  return sum;
}

std::pair<std::int64_t, std::int64_t> exponent_sums(const GroupElement& g) {
  std::int64_t ex = 0;
  std::int64_t ey = 0;
  for (Letter l : g.word()) {
    switch (l) {
      case Letter::X: ++ex; break;
      case Letter::XInv: --ex; break;
      case Letter::Y: ++ey; break;
      case Letter::YInv: --ey; break;
    }
  }
  return {ex, ey};
}

}  // namespace

Rational RealCharacter::value(const GroupElement& g) const {
  if (g.group() != group_) {
    throw SemanticError("character applied to element of the wrong group");
  }
  switch (kind_) {
    case Kind::IdOnZ:
      return Rational::from_int(g.int_value());
    case Kind::DyadicOnDirectSum:
      return dyadic_value(g);
    case Kind::UpperLeftOnHeisenberg:
      return Rational::from_int(g.heisenberg_triple()[0]);
    case Kind::ExponentSumXOnF2:
      return Rational::from_int(exponent_sums(g).first);
    case Kind::Custom:
      break;
  }
  auto lookup = [this](const GroupElement& generator) {
    auto it = table_.find(generator);
    return it == table_.end() ? Rational() : it->second;
  };
  switch (group_) {
    case GroupId::IntZ:
      return g.int_value() * lookup(GroupElement::int_z(1));
    case GroupId::DirectSumZ: {
      Rational sum;
      for (const auto& [index, value] : g.direct_sum_entries()) {
        sum += value * lookup(GroupElement::direct_sum({{index, 1}}));
      }
      return sum;
    }
    case GroupId::HeisenbergZ: {
      const auto& t = g.heisenberg_triple();
      return t[0] * lookup(GroupElement::heisenberg(1, 0, 0)) +
             t[2] * lookup(GroupElement::heisenberg(0, 0, 1));
    }
    case GroupId::FreeGroup2: {
      auto [ex, ey] = exponent_sums(g);
      return ex * lookup(GroupElement::free_word({Letter::X})) +
             ey * lookup(GroupElement::free_word({Letter::Y}));
    }
  }
  throw SemanticError("unknown group id");
}

}  // namespace groupwave
