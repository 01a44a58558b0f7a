#include "bellhopf/hopf_text.hpp"

#include <algorithm>
#include <cctype>

#include "bellhopf/errors.hpp"

namespace bellhopf {

namespace {

class HopfParser {
 public:
  explicit HopfParser(std::string_view text) : text_(text) {}

  HopfElement parse() {
    skip_space();
    if (at_end()) throw ParseError("empty Hopf element", pos_);
    HopfElement out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [m, c] = term();
      out.add_term(m, negative ? Rational(-c) : c);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> term() {
    Monomial m;
    Rational c(1);
    factor(m, c);
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(m, c);
    }
    return {m, c};
  }

  void factor(Monomial& m, Rational& c) {
    skip_space();
    if (at_end()) throw ParseError("expected a factor", pos_);
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      Integer num{std::string(digits())};
      Integer den(1);
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_);
        den = Integer(std::string(digits()));
        if (den == 0) throw ParseError("zero denominator", start);
      }
      Rational q(num, den);
      q.canonicalize();
      c *= q;
    } else if (ch == 'e') {
      ++pos_;
    } else if (ch == 'y') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected letter index after 'y'", pos_);
      const std::size_t at = pos_;
      const unsigned long index = std::stoul(std::string(digits()));
      if (index == 0) throw ParseError("letter index must be >= 1", at);
      unsigned long power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
        power = std::stoul(std::string(digits()));
      }
      m = m * Monomial::letter(static_cast<Monomial::Letter>(index), static_cast<unsigned>(power));
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 9) throw ParseError("number too long", start);
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HopfElement parse_hopf_element(std::string_view text) { return HopfParser(text).parse(); }

std::string to_string(const HopfElement& a) {
  if (a.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(a.begin(), a.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& l, const auto& r) { return l.first.weight() < r.first.weight(); });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (m.is_unit()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += to_string(mag) + '*' + to_string(m);
    }
  }
  return out;
}

std::string to_string(const TensorElement& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : t) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + ' ';
    out += to_string(key.first) + " (x) " + to_string(key.second);
  }
  return out;
}

}  // namespace bellhopf
