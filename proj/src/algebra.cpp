#include "groupwave/algebra.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "groupwave/errors.hpp"

namespace groupwave {

AlgebraElement AlgebraElement::from_terms(GroupId id,
                                          std::span<const Term> terms) {
  AlgebraElement x(id);
  for (const auto& [g, c] : terms) x.add_term(g, c);
  return x;
}

AlgebraElement AlgebraElement::from_terms(GroupId id,
                                          std::initializer_list<Term> terms) {
  return from_terms(id, std::span<const Term>(terms.begin(), terms.size()));
}

AlgebraElement AlgebraElement::lambda(const GroupElement& g) {
  AlgebraElement x(g.group());
  x.add_term(g, Complex(1.0, 0.0));
  return x;
}

Complex AlgebraElement::coefficient(const GroupElement& g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

AlgebraElement& AlgebraElement::add_term(const GroupElement& g, Complex c) {
  if (g.group() != id_) {
    throw SemanticError("mixed groups in algebra element");
  }
  auto [it, inserted] = coeffs_.try_emplace(g, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) coeffs_.erase(it);
  return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group() != b.group()) throw SemanticError("group mismatch in sum");
  AlgebraElement out = a;
  for (const auto& [g, c] : b.coeffs_) out.add_term(g, c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group() != b.group())
    throw SemanticError("group mismatch in difference");
  AlgebraElement out = a;
  for (const auto& [g, c] : b.coeffs_) out.add_term(g, -c);
  return out;
}

AlgebraElement operator*(Complex scale, const AlgebraElement& a) {
  AlgebraElement out(a.group());
  for (const auto& [g, c] : a.coeffs_) out.add_term(g, scale * c);
  return out;
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.group() != y.group())
    throw SemanticError("group mismatch in convolution");
  AlgebraElement out(x.group());
  for (const auto& [g, cg] : x.coefficients()) {
    for (const auto& [h, ch] : y.coefficients()) {
      out.add_term(multiply(g, h), cg * ch);
    }
  }
  return out;
}

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement out(x.group());
  for (const auto& [g, c] : x.coefficients()) {
    out.add_term(inverse(g), std::conj(c));
  }
  return out;
}

Complex trace(const AlgebraElement& x) {
  return x.coefficient(GroupElement::identity(x.group()));
}

Complex fourier_coefficient(const AlgebraElement& x, const GroupElement& g) {
  return x.coefficient(g);
}

double l2_norm(const AlgebraElement& x) {
  double sum = 0.0;
  for (const auto& [g, c] : x.coefficients()) sum += std::norm(c);
  return std::sqrt(sum);
}

double l1_norm(const AlgebraElement& x) {
  double sum = 0.0;
  for (const auto& [g, c] : x.coefficients()) sum += std::abs(c);
  return sum;
}

double max_coefficient_distance(const AlgebraElement& a,
                                const AlgebraElement& b) {
  if (a.group() != b.group())
    throw SemanticError("group mismatch in coefficient distance");
  double worst = 0.0;
  for (const auto& [g, c] : a.coefficients()) {
    worst = std::max(worst, std::abs(c - b.coefficient(g)));
  }
  for (const auto& [g, c] : b.coefficients()) {
    worst = std::max(worst, std::abs(c - a.coefficient(g)));
  }
  return worst;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  std::string owned(s);
  char* end = nullptr;
  double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || owned.empty()) {
    throw SemanticError("invalid float literal: '" + owned + "'");
  }
  return v;
}

Complex parse_complex(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw SemanticError("empty coefficient");
  if (s.back() != 'i') return Complex(parse_double(s), 0.0);
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the sign of the imaginary part: the last '+'/'-' that is not
  // an exponent sign and not the leading sign.
  for (std::size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      double re = parse_double(body.substr(0, i));
      std::string_view imag = body.substr(i);
      double im = (imag == "+")   ? 1.0
                  : (imag == "-") ? -1.0
                                  : parse_double(imag);
      return Complex(re, im);
    }
  }
  // Pure imaginary: "2i", "i", "-i".
  if (body.empty() || body == "+") return Complex(0.0, 1.0);
  if (body == "-") return Complex(0.0, -1.0);
  return Complex(0.0, parse_double(body));
}

}  // namespace

std::string to_text(const AlgebraElement& x) {
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.coefficients()) {
    if (!first) out += "; ";
    first = false;
    out += format_complex(c);
    out += " * ";
    out += to_text(g);
  }
  return out;
}

AlgebraElement parse_algebra_element(GroupId id, std::string_view text) {
  AlgebraElement x(id);
  std::string_view rest = trim(text);
  if (rest.empty() || rest == "0") return x;
  while (!rest.empty()) {
    auto semi = rest.find(';');
    std::string_view term = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{}
                                          : rest.substr(semi + 1);
    term = trim(term);
    if (term.empty()) throw SemanticError("empty term in algebra element");
    auto starp = term.find('*');
    if (starp == std::string_view::npos) {
      throw SemanticError("algebra term must be 'coeff * element', got '" +
                          std::string(term) + "'");
    }
    Complex c = parse_complex(trim(term.substr(0, starp)));
    GroupElement g = parse_element(id, trim(term.substr(starp + 1)));
    x.add_term(g, c);
  }
  return x;
}

}  // namespace groupwave
