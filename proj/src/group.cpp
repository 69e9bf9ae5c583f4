#include "groupwave/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "groupwave/errors.hpp"

namespace groupwave {

namespace {

std::int64_t parse_i64_strict(std::string_view s, const char* what) {
  // Canonical integer literal: optional '-', no leading zeros except "0".
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw SemanticError(std::string("invalid ") + what + ": '" +
                        std::string(s) + "'");
  }
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.size() > 1 && digits.front() == '0') {
    throw SemanticError(std::string("non-canonical ") + what + ": '" +
                        std::string(s) + "'");
  }
  return v;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

std::string_view group_name(GroupId id) {
  switch (id) {
    case GroupId::IntZ: return "int_z";
    case GroupId::DirectSumZ: return "direct_sum_z";
    case GroupId::HeisenbergZ: return "heisenberg_z";
    case GroupId::FreeGroup2: return "free_group_2";
  }
  return "unknown";
}

GroupId parse_group_name(std::string_view name) {
  if (name == "int_z") return GroupId::IntZ;
  if (name == "direct_sum_z") return GroupId::DirectSumZ;
  if (name == "heisenberg_z") return GroupId::HeisenbergZ;
  if (name == "free_group_2") return GroupId::FreeGroup2;
  throw SemanticError("unknown group: '" + std::string(name) + "'");
}

GroupElement GroupElement::identity(GroupId id) {
  switch (id) {
    case GroupId::IntZ: return int_z(0);
    case GroupId::DirectSumZ: return direct_sum({});
    case GroupId::HeisenbergZ: return heisenberg(0, 0, 0);
    case GroupId::FreeGroup2: return free_word({});
  }
  throw SemanticError("unknown group id");
}

GroupElement GroupElement::int_z(std::int64_t n) {
  return GroupElement(GroupId::IntZ, n);
}

GroupElement GroupElement::direct_sum(DirectSumEntries entries) {
  std::map<std::int32_t, std::int64_t> acc;
  for (const auto& [index, value] : entries) {
    if (index < 1) throw SemanticError("direct sum index must be >= 1");
    acc[index] += value;
  }
  DirectSumEntries normalized;
  for (const auto& [index, value] : acc) {
    if (value != 0) normalized.emplace_back(index, value);
  }
  return GroupElement(GroupId::DirectSumZ, std::move(normalized));
}

GroupElement GroupElement::heisenberg(std::int64_t l, std::int64_t m,
                                      std::int64_t n) {
  return GroupElement(GroupId::HeisenbergZ, HeisenbergTriple{l, m, n});
}

GroupElement GroupElement::free_word(Word letters) {
  Word reduced;
  reduced.reserve(letters.size());
  for (Letter l : letters) {
    if (!reduced.empty() && reduced.back() == letter_inverse(l)) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }
  return GroupElement(GroupId::FreeGroup2, std::move(reduced));
}

bool GroupElement::is_identity() const {
  return *this == identity(id_);
}

std::int64_t GroupElement::int_value() const {
  if (id_ != GroupId::IntZ) throw SemanticError("element is not in int_z");
  return std::get<std::int64_t>(payload_);
}

const GroupElement::DirectSumEntries& GroupElement::direct_sum_entries() const {
  if (id_ != GroupId::DirectSumZ)
    throw SemanticError("element is not in direct_sum_z");
  return std::get<DirectSumEntries>(payload_);
}

const GroupElement::HeisenbergTriple& GroupElement::heisenberg_triple() const {
  if (id_ != GroupId::HeisenbergZ)
    throw SemanticError("element is not in heisenberg_z");
  return std::get<HeisenbergTriple>(payload_);
}

const GroupElement::Word& GroupElement::word() const {
  if (id_ != GroupId::FreeGroup2)
    throw SemanticError("element is not in free_group_2");
  return std::get<Word>(payload_);
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.id_ <=> b.id_; c != 0) return c;
  switch (a.id_) {
    case GroupId::IntZ:
      return std::get<std::int64_t>(a.payload_) <=>
             std::get<std::int64_t>(b.payload_);
    case GroupId::DirectSumZ:
      return std::get<GroupElement::DirectSumEntries>(a.payload_) <=>
             std::get<GroupElement::DirectSumEntries>(b.payload_);
    case GroupId::HeisenbergZ:
      return std::get<GroupElement::HeisenbergTriple>(a.payload_) <=>
             std::get<GroupElement::HeisenbergTriple>(b.payload_);
    case GroupId::FreeGroup2: {
      // Shortlex: length first, then letters.
      const auto& wa = std::get<GroupElement::Word>(a.payload_);
      const auto& wb = std::get<GroupElement::Word>(b.payload_);
      if (auto c = wa.size() <=> wb.size(); c != 0) return c;
      return wa <=> wb;
    }
  }
  return std::strong_ordering::equal;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.group() != b.group()) {
    throw SemanticError("group mismatch in multiply");
  }
  switch (a.group()) {
    case GroupId::IntZ:
      return GroupElement::int_z(a.int_value() + b.int_value());
    case GroupId::DirectSumZ: {
      GroupElement::DirectSumEntries merged = a.direct_sum_entries();
      const auto& rhs = b.direct_sum_entries();
      merged.insert(merged.end(), rhs.begin(), rhs.end());
      return GroupElement::direct_sum(std::move(merged));
    }
    case GroupId::HeisenbergZ: {
      // [l,m,n]·[l',m',n'] = [l+l', m+m'+l·n', n+n']
      const auto& x = a.heisenberg_triple();
      const auto& y = b.heisenberg_triple();
      return GroupElement::heisenberg(x[0] + y[0], x[1] + y[1] + x[0] * y[2],
                                      x[2] + y[2]);
    }
    case GroupId::FreeGroup2: {
      GroupElement::Word w = a.word();
      w.insert(w.end(), b.word().begin(), b.word().end());
      return GroupElement::free_word(std::move(w));
    }
  }
  throw SemanticError("unknown group id");
}

GroupElement inverse(const GroupElement& a) {
  switch (a.group()) {
    case GroupId::IntZ:
      return GroupElement::int_z(-a.int_value());
    case GroupId::DirectSumZ: {
      GroupElement::DirectSumEntries entries = a.direct_sum_entries();
      for (auto& [index, value] : entries) value = -value;
      return GroupElement::direct_sum(std::move(entries));
    }
    case GroupId::HeisenbergZ: {
      // [l,m,n]^{-1} = [-l, l·n - m, -n]
      const auto& x = a.heisenberg_triple();
      return GroupElement::heisenberg(-x[0], x[0] * x[2] - x[1], -x[2]);
    }
    case GroupId::FreeGroup2: {
      const auto& w = a.word();
      GroupElement::Word out;
      out.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(letter_inverse(*it));
      }
      return GroupElement::free_word(std::move(out));
    }
  }
  throw SemanticError("unknown group id");
}

namespace {

void enumerate_direct_sum(int index, int max_index, int budget,
                          GroupElement::DirectSumEntries& current,
                          std::vector<GroupElement>& out) {
  if (index > max_index) {
    out.push_back(GroupElement::direct_sum(current));
    return;
  }
  for (int value = -budget; value <= budget; ++value) {
    if (value != 0) current.emplace_back(index, value);
    enumerate_direct_sum(index + 1, max_index,
                         budget - static_cast<int>(std::abs(value)), current,
                         out);
    if (value != 0) current.pop_back();
  }
}

std::vector<GroupElement> bfs_ball(GroupId id,
                                   const std::vector<GroupElement>& generators,
                                   int radius) {
  std::set<GroupElement> seen;
  std::vector<GroupElement> frontier{GroupElement::identity(id)};
  seen.insert(frontier.front());
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        GroupElement h = multiply(g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<GroupElement> ball(GroupId id, int radius) {
  if (radius < 0) throw SemanticError("ball radius must be >= 0");
  switch (id) {
    case GroupId::IntZ: {
      std::vector<GroupElement> out;
      for (std::int64_t n = -radius; n <= radius; ++n) {
        out.push_back(GroupElement::int_z(n));
      }
      return out;
    }
    case GroupId::DirectSumZ: {
      std::vector<GroupElement> out;
      GroupElement::DirectSumEntries current;
      enumerate_direct_sum(1, radius, radius, current, out);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case GroupId::HeisenbergZ: {
      std::vector<GroupElement> generators;
      for (int axis = 0; axis < 3; ++axis) {
        for (int sign : {1, -1}) {
          std::int64_t c[3] = {0, 0, 0};
          c[axis] = sign;
          generators.push_back(GroupElement::heisenberg(c[0], c[1], c[2]));
        }
      }
      return bfs_ball(id, generators, radius);
    }
    case GroupId::FreeGroup2: {
      std::vector<GroupElement> generators{
          GroupElement::free_word({Letter::X}),
          GroupElement::free_word({Letter::XInv}),
          GroupElement::free_word({Letter::Y}),
          GroupElement::free_word({Letter::YInv})};
      return bfs_ball(id, generators, radius);
    }
  }
  throw SemanticError("unknown group id");
}

namespace {

std::string_view letter_name(Letter l) {
  switch (l) {
    case Letter::X: return "x";
    case Letter::XInv: return "x^-1";
    case Letter::Y: return "y";
    case Letter::YInv: return "y^-1";
  }
  return "?";
}

Letter parse_letter(std::string_view token) {
  if (token == "x") return Letter::X;
  if (token == "x^-1") return Letter::XInv;
  if (token == "y") return Letter::Y;
  if (token == "y^-1") return Letter::YInv;
  throw SemanticError("invalid free-group letter: '" + std::string(token) + "'");
}

}  // namespace

std::string to_text(const GroupElement& g) {
  switch (g.group()) {
    case GroupId::IntZ:
      return std::to_string(g.int_value());
    case GroupId::DirectSumZ: {
      const auto& entries = g.direct_sum_entries();
      if (entries.empty()) return "e";
      std::string out;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(entries[i].first);
        out += ':';
        out += std::to_string(entries[i].second);
      }
      return out;
    }
    case GroupId::HeisenbergZ: {
      const auto& t = g.heisenberg_triple();
      return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + "]";
    }
    case GroupId::FreeGroup2: {
      const auto& w = g.word();
      if (w.empty()) return "e";
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += letter_name(w[i]);
      }
      return out;
    }
  }
  throw SemanticError("unknown group id");
}

GroupElement parse_element(GroupId id, std::string_view text) {
  text = trimmed(text);
  if (text.empty()) throw SemanticError("empty group element text");
  switch (id) {
    case GroupId::IntZ:
      return GroupElement::int_z(parse_i64_strict(text, "int_z element"));
    case GroupId::DirectSumZ: {
      if (text == "e") return GroupElement::identity(id);
      GroupElement::DirectSumEntries entries;
      std::int32_t last_index = 0;
      for (auto part : split(text, ',')) {
        part = trimmed(part);
        auto colon = part.find(':');
        if (colon == std::string_view::npos) {
          throw SemanticError("direct sum entry must be index:value, got '" +
                              std::string(part) + "'");
        }
        std::int64_t index =
            parse_i64_strict(part.substr(0, colon), "direct sum index");
        std::int64_t value =
            parse_i64_strict(part.substr(colon + 1), "direct sum value");
        if (index < 1) {
          throw SemanticError("direct sum index must be >= 1, got " +
                              std::to_string(index));
        }
        if (value == 0) {
          throw SemanticError("direct sum stores no zero entries");
        }
        if (index <= last_index) {
          throw SemanticError("direct sum indices must be strictly increasing");
        }
        last_index = static_cast<std::int32_t>(index);
        entries.emplace_back(last_index, value);
      }
      return GroupElement::direct_sum(std::move(entries));
    }
    case GroupId::HeisenbergZ: {
      if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw SemanticError("heisenberg element must be [l,m,n], got '" +
                            std::string(text) + "'");
      }
      auto parts = split(text.substr(1, text.size() - 2), ',');
      if (parts.size() != 3) {
        throw SemanticError("heisenberg element must have three coordinates");
      }
      std::int64_t c[3];
      for (int i = 0; i < 3; ++i) {
        c[i] = parse_i64_strict(trimmed(parts[i]), "heisenberg coordinate");
      }
      return GroupElement::heisenberg(c[0], c[1], c[2]);
    }
    case GroupId::FreeGroup2: {
      if (text == "e") return GroupElement::identity(id);
      GroupElement::Word word;
      std::size_t pos = 0;
      while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        auto end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        Letter l = parse_letter(text.substr(pos, end - pos));
        if (!word.empty() && word.back() == letter_inverse(l)) {
          throw SemanticError("free-group word is not reduced: '" +
                              std::string(text) + "'");
        }
        word.push_back(l);
        pos = end;
      }
      if (word.empty()) throw SemanticError("empty free-group word; use 'e'");
      return GroupElement::free_word(std::move(word));
    }
  }
  throw SemanticError("unknown group id");
}

}  // namespace groupwave
