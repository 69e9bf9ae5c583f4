#pragma once

#include <map>
#include <string>

#include "groupwave/group.hpp"
#include "groupwave/rational.hpp"

namespace groupwave {

/// A real character: a nonzero homomorphism b: G -> (R,+) with
/// exact-rational values. Values stay exact so that membership in ker(b)
/// is decided without floating-point ambiguity.
///
/// Custom characters are given on the positive generators and extended by
/// the homomorphism property; on HeisenbergZ the commutator generator
/// [0,1,0] must be sent to zero, which is validated at construction.
class RealCharacter {
 public:
  enum class Kind {
    IdOnZ,
    DyadicOnDirectSum,
    UpperLeftOnHeisenberg,
    ExponentSumXOnF2,
    Custom,
  };

  static RealCharacter id_on_z();
  static RealCharacter dyadic_on_direct_sum();
  static RealCharacter upper_left_on_heisenberg();
  static RealCharacter exponent_sum_x_on_f2();
  /// Table keys are generator element texts ("1"; "3:1"; "[1,0,0]"; "x").
  static RealCharacter custom(GroupId group,
                              const std::map<std::string, Rational>& table);

  GroupId group() const { return group_; }
  Kind kind() const { return kind_; }
  std::string_view kind_name() const;
  static Kind parse_kind_name(std::string_view name);

  Rational value(const GroupElement& g) const;
  double value_as_double(const GroupElement& g) const {
    return value(g).to_double();
  }
  bool in_kernel(const GroupElement& g) const { return value(g).is_zero(); }

  /// Generator table (empty for the built-in kinds).
  const std::map<GroupElement, Rational>& custom_table() const {
    return table_;
  }

  friend bool operator==(const RealCharacter&, const RealCharacter&) = default;

 private:
  RealCharacter(GroupId group, Kind kind) : group_(group), kind_(kind) {}

  GroupId group_;
  Kind kind_;
  std::map<GroupElement, Rational> table_;
};

}  // namespace groupwave
