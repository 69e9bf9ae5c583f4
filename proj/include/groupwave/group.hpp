#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace groupwave {

enum class GroupId { IntZ, DirectSumZ, HeisenbergZ, FreeGroup2 };

std::string_view group_name(GroupId id);
GroupId parse_group_name(std::string_view name);

/// Letters of F2 in canonical order; the order fixes the shortlex
/// enumeration used by ball() and element comparison.
enum class Letter : std::uint8_t { X = 0, XInv = 1, Y = 2, YInv = 3 };

inline Letter letter_inverse(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

/// Canonically encoded element of one of the four built-in groups.
///
/// Encodings are unique per element: equality and ordering of the payload
/// coincide with equality of group elements, so values are directly usable
/// as map keys. All values are immutable after construction; free words are
/// reduced eagerly by the factory.
class GroupElement {
 public:
  /// Sorted (index >= 1, nonzero value) pairs.
  using DirectSumEntries = std::vector<std::pair<std::int32_t, std::int64_t>>;
  /// [l, m, n] matrix coordinates.
  using HeisenbergTriple = std::array<std::int64_t, 3>;
  using Word = std::vector<Letter>;

  static GroupElement identity(GroupId id);
  static GroupElement int_z(std::int64_t n);
  /// Entries are normalized: values summed per index, zeros dropped, sorted.
  static GroupElement direct_sum(DirectSumEntries entries);
  static GroupElement heisenberg(std::int64_t l, std::int64_t m, std::int64_t n);
  /// The word is freely reduced on construction.
  static GroupElement free_word(Word letters);

  GroupId group() const { return id_; }
  bool is_identity() const;

  std::int64_t int_value() const;
  const DirectSumEntries& direct_sum_entries() const;
  const HeisenbergTriple& heisenberg_triple() const;
  const Word& word() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Total order: group id, then numeric/lexicographic payload order,
  /// shortlex for free words.
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b);

 private:
  using Payload =
      std::variant<std::int64_t, DirectSumEntries, HeisenbergTriple, Word>;
  GroupElement(GroupId id, Payload payload)
      : id_(id), payload_(std::move(payload)) {}

  GroupId id_ = GroupId::IntZ;
  Payload payload_ = std::int64_t{0};
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// All elements of word length <= radius w.r.t. the fixed generating sets
/// (IntZ: {±1}; DirectSumZ: {±e_i, i <= radius}; HeisenbergZ: the six
/// elementary coordinate moves; F2: the four letters), deduplicated and in
/// canonical order. The DirectSumZ generator set grows with the radius
/// because the group is not finitely generated; the ball is a finite
/// compression choice, not a group-theoretic construct.
std::vector<GroupElement> ball(GroupId id, int radius);

/// Stable textual form: IntZ "3"; DirectSumZ "1:2,4:-1"; HeisenbergZ
/// "[1,0,-2]"; FreeGroup2 "x y^-1 x". The identity is written "e" except
/// for IntZ where it is "0".
std::string to_text(const GroupElement& g);

/// Strict parser for the textual form; rejects non-canonical input
/// (unreduced words, zero entries, unsorted indices).
GroupElement parse_element(GroupId id, std::string_view text);

}  // namespace groupwave
