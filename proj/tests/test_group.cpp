#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "groupwave/errors.hpp"
#include "groupwave/group.hpp"
#include "groupwave/sampling.hpp"

using namespace groupwave;

namespace {

// Independent 3x3 integer matrix oracle for the Heisenberg coordinates
// [l,m,n] <-> [[1,l,m],[0,1,n],[0,0,1]].
struct Mat3 {
  std::int64_t a[3][3];
};

Mat3 to_matrix(const GroupElement& g) {
  const auto& t = g.heisenberg_triple();
  return Mat3{{{1, t[0], t[1]}, {0, 1, t[2]}, {0, 0, 1}}};
}

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::int64_t sum = 0;
      for (int k = 0; k < 3; ++k) sum += x.a[i][k] * y.a[k][j];
      out.a[i][j] = sum;
    }
  }
  return out;
}

// Adjugate = inverse for det-1 integer matrices.
Mat3 mat_adjugate(const Mat3& m) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3;
      int r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3;
      int c1 = (j + 2) % 3;
      out.a[j][i] =
          m.a[r0][c0] * m.a[r1][c1] - m.a[r0][c1] * m.a[r1][c0];
    }
  }
  return out;
}

GroupElement from_matrix(const Mat3& m) {
  REQUIRE(m.a[0][0] == 1);
  REQUIRE(m.a[1][1] == 1);
  REQUIRE(m.a[2][2] == 1);
  REQUIRE(m.a[1][0] == 0);
  REQUIRE(m.a[2][0] == 0);
  REQUIRE(m.a[2][1] == 0);
  return GroupElement::heisenberg(m.a[0][1], m.a[0][2], m.a[1][2]);
}

// Brute-force free reduction, independent of the library word code.
std::string reduce_string(const std::string& word) {
  std::string out;
  auto inverse_of = [](char c) -> char {
    switch (c) {
      case 'a': return 'A';
      case 'A': return 'a';
      case 'b': return 'B';
      default: return 'b';
    }
  };
  for (char c : word) {
    if (!out.empty() && out.back() == inverse_of(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::size_t brute_force_f2_ball_size(int radius) {
  std::set<std::string> seen{""};
  std::vector<std::string> frontier{""};
  const std::string letters = "aAbB";
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<std::string> next;
    for (const std::string& w : frontier) {
      for (char c : letters) {
        std::string reduced = reduce_string(w + c);
        if (seen.insert(reduced).second) next.push_back(reduced);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

GroupElement word_of(std::initializer_list<Letter> letters) {
  return GroupElement::free_word(GroupElement::Word(letters));
}

}  // namespace

TEST_CASE("identities") {
  CHECK(GroupElement::identity(GroupId::IntZ) == GroupElement::int_z(0));
  CHECK(GroupElement::identity(GroupId::HeisenbergZ) ==
        GroupElement::heisenberg(0, 0, 0));
  CHECK(GroupElement::identity(GroupId::FreeGroup2).word().empty());
  for (GroupId id : kAllGroups) {
    CHECK(GroupElement::identity(id).is_identity());
  }
}

TEST_CASE("heisenberg multiplication matches the matrix oracle") {
  GroupElement a = GroupElement::heisenberg(1, 0, 0);
  GroupElement b = GroupElement::heisenberg(0, 0, 1);
  CHECK(multiply(a, b) == GroupElement::heisenberg(1, 1, 1));

  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement x = random_element(GroupId::HeisenbergZ, rng);
    GroupElement y = random_element(GroupId::HeisenbergZ, rng);
    CHECK(multiply(x, y) == from_matrix(mat_mul(to_matrix(x), to_matrix(y))));
  }
}

TEST_CASE("heisenberg inversion matches the adjugate oracle") {
  Rng rng(2025);
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement x = random_element(GroupId::HeisenbergZ, rng);
    CHECK(inverse(x) == from_matrix(mat_adjugate(to_matrix(x))));
  }
  GroupElement inverted = inverse(GroupElement::heisenberg(3, 5, -2));
  const auto& t = inverted.heisenberg_triple();
  CHECK(t[0] == -3);
  CHECK(t[1] == 3 * (-2) - 5);
  CHECK(t[2] == 2);
}

TEST_CASE("heisenberg is noncommutative") {
  GroupElement a = GroupElement::heisenberg(1, 0, 0);
  GroupElement b = GroupElement::heisenberg(0, 0, 1);
  CHECK(multiply(a, b) != multiply(b, a));
}

TEST_CASE("free words reduce and invert") {
  GroupElement xy = word_of({Letter::X, Letter::Y});
  GroupElement yinv_x = word_of({Letter::YInv, Letter::X});
  CHECK(multiply(xy, yinv_x) == word_of({Letter::X, Letter::X}));

  GroupElement w = word_of({Letter::X, Letter::Y, Letter::XInv});
  CHECK(inverse(w) == word_of({Letter::X, Letter::YInv, Letter::XInv}));

  CHECK(GroupElement::free_word({Letter::X, Letter::XInv}).is_identity());
}

TEST_CASE("direct sum entries cancel") {
  GroupElement a = GroupElement::direct_sum({{1, 1}});
  GroupElement b = GroupElement::direct_sum({{1, -1}});
  CHECK(multiply(a, b).is_identity());
  CHECK(inverse(GroupElement::int_z(5)) == GroupElement::int_z(-5));
}

TEST_CASE("group laws hold on random triples") {
  Rng rng(7);
  for (GroupId id : kAllGroups) {
    GroupElement e = GroupElement::identity(id);
    for (int trial = 0; trial < 1000; ++trial) {
      GroupElement a = random_element(id, rng);
      GroupElement b = random_element(id, rng);
      GroupElement c = random_element(id, rng);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, e) == a);
      CHECK(multiply(e, a) == a);
      CHECK(multiply(a, inverse(a)) == e);
    }
  }
}

TEST_CASE("balls enumerate in canonical order") {
  std::vector<GroupElement> z2 = ball(GroupId::IntZ, 2);
  REQUIRE(z2.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(z2[i] == GroupElement::int_z(i - 2));

  std::vector<GroupElement> f1 = ball(GroupId::FreeGroup2, 1);
  REQUIRE(f1.size() == 5);
  CHECK(f1[0].is_identity());
  CHECK(f1[1] == word_of({Letter::X}));
  CHECK(f1[2] == word_of({Letter::XInv}));
  CHECK(f1[3] == word_of({Letter::Y}));
  CHECK(f1[4] == word_of({Letter::YInv}));
}

TEST_CASE("free group ball sizes match brute-force enumeration") {
  for (int radius = 0; radius <= 5; ++radius) {
    std::size_t expected = brute_force_f2_ball_size(radius);
    CHECK(ball(GroupId::FreeGroup2, radius).size() == expected);
    // Closed form for the 4-regular tree: 2·3^r - 1.
    std::size_t closed_form = 1;
    std::size_t power = 1;
    for (int i = 0; i < radius; ++i) power *= 3;
    closed_form = 2 * power - 1;
    CHECK(expected == closed_form);
  }
}

TEST_CASE("balls are deduplicated and sorted") {
  for (GroupId id : kAllGroups) {
    std::vector<GroupElement> b = ball(id, 3);
    CHECK(std::is_sorted(b.begin(), b.end()));
    CHECK(std::adjacent_find(b.begin(), b.end()) == b.end());
    CHECK(std::binary_search(b.begin(), b.end(), GroupElement::identity(id)));
  }
}

TEST_CASE("textual forms round trip and stay injective") {
  CHECK(to_text(GroupElement::int_z(3)) == "3");
  CHECK(to_text(GroupElement::direct_sum({{4, -1}, {1, 2}})) == "1:2,4:-1");
  CHECK(to_text(GroupElement::heisenberg(1, 0, -2)) == "[1,0,-2]");
  CHECK(to_text(word_of({Letter::X, Letter::YInv, Letter::X})) == "x y^-1 x");
  CHECK(to_text(GroupElement::identity(GroupId::FreeGroup2)) == "e");

  Rng rng(11);
  for (GroupId id : kAllGroups) {
    for (int trial = 0; trial < 300; ++trial) {
      GroupElement g = random_element(id, rng);
      CHECK(parse_element(id, to_text(g)) == g);
    }
    std::set<std::string> texts;
    for (const GroupElement& g : ball(id, id == GroupId::DirectSumZ ? 4 : 6)) {
      CHECK(texts.insert(to_text(g)).second);
    }
  }
}

TEST_CASE("parsers reject non-canonical input") {
  CHECK_THROWS_AS(parse_element(GroupId::FreeGroup2, "x x^-1"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::DirectSumZ, "1:0"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::DirectSumZ, "4:1,1:2"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::DirectSumZ, "1:1,1:2"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::DirectSumZ, "0:3"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::IntZ, "03"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::IntZ, "1.5"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::HeisenbergZ, "[1,2]"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::FreeGroup2, "z"), SemanticError);
  CHECK_THROWS_AS(parse_element(GroupId::FreeGroup2, ""), SemanticError);
}

TEST_CASE("group mismatch is rejected") {
  CHECK_THROWS_AS(
      multiply(GroupElement::int_z(1), GroupElement::heisenberg(1, 0, 0)),
      SemanticError);
}
