#include "bellhopf/boson_text.hpp"

#include <cctype>

#include "bellhopf/errors.hpp"

namespace bellhopf {

namespace {

constexpr std::size_t kMaxParsedWords = 1u << 20;

class BosonParser {
 public:
  explicit BosonParser(std::string_view text) : text_(text) {}

  BosonExpression parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    BosonExpression e = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return e;
  }

 private:
  BosonExpression expr() {
    skip_space();
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
    }
    BosonExpression out;
    for (;;) {
      BosonExpression t = term();
      if (negative) t *= Rational(-1);
      out += t;
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

  BosonExpression term() {
    BosonExpression out = factor();
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
      } else if (!starts_factor(peek())) {
        break;
      }
      out = product(out, factor());
      if (out.size() > kMaxParsedWords) throw ResourceLimitError("expression expands to too many words");
    }
    return out;
  }

  BosonExpression factor() {
    BosonExpression base = primary();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
      const std::size_t at = pos_;
      const auto n = std::stoul(std::string(digits()));
      if (n > 4096) throw ParseError("exponent too large", at);
      base = power(base, static_cast<unsigned>(n), kMaxParsedWords);
    }
    return base;
  }

  BosonExpression primary() {
    skip_space();
    if (at_end()) throw ParseError("expected 'a', 'ad', a number or '('", pos_);
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      BosonExpression inner = expr();
      skip_space();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
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
      return BosonExpression(BosonWord{}, q);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "a") return BosonExpression(BosonWord{BosonLetter::annihilate});
      if (name == "ad") return BosonExpression(BosonWord{BosonLetter::create});
      throw ParseError("unknown operator '" + std::string(name) + "' (expected 'a' or 'ad')", start);
    }
    throw ParseError(std::string("unexpected '") + ch + "'", pos_);
  }

  static bool starts_factor(char ch) {
    return ch == '(' || std::isalpha(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch));
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
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

// "3/2 ad a" style term; `body` is empty for the identity word.
void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = c < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = abs(c);
  if (body.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += body;
  } else {
    out += to_string(mag) + ' ' + body;
  }
}

std::string power_text(const char* name, unsigned k) {
  std::string s(name);
  if (k > 1) s += '^' + std::to_string(k);
  return s;
}

}  // namespace

BosonExpression parse_boson_expression(std::string_view text) { return BosonParser(text).parse(); }

std::string to_string(const BosonWord& word) {
  if (word.empty()) return "1";
  std::string out;
  const auto letters = word.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += power_text(letters[i] == BosonLetter::create ? "ad" : "a", static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

std::string to_string(const BosonExpression& expr) {
  if (expr.empty()) return "0";
  std::string out;
  for (const auto& [word, c] : expr) append_term(out, c, word.empty() ? std::string() : to_string(word));
  return out;
}

std::string to_string(const NormalOrderedForm& form) {
  if (form.empty()) return "0";
  std::string out;
  for (auto it = form.terms().rbegin(); it != form.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string body;
    if (mono.create) body += power_text("ad", mono.create);
    if (mono.annihilate) body += (body.empty() ? "" : " ") + power_text("a", mono.annihilate);
    append_term(out, c, body);
  }
  return out;
}

}  // namespace bellhopf
