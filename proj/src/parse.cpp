#include <cctype>
#include <string>

#include "autrel/error.hpp"
#include "autrel/polynomial.hpp"

namespace autrel {

namespace {

// expr   := ['+'|'-'] term { ('+'|'-') term }
// term   := power { '*' power }
// power  := atom [ '^' digits ]
// atom   := number | variable | '(' expr ')'
// number := digits [ '/' digits ]
// variable := 'x' digits | 'x{' digits '}'
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (peek() == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", den_start);
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_start);
        num += '/' + den;
      }
      return Polynomial::constant(nvars_, parse_rational(num));
    }
    if (c == 'x') {
      ++pos_;
      std::string digits;
      if (peek() == '{') {
        ++pos_;
        digits = read_digits();
        if (peek() != '}') throw ParseError("expected '}'", pos_);
        ++pos_;
      } else {
        digits = read_digits();
      }
      if (digits.empty() || digits.size() > 6) throw ParseError("expected variable index", start + 1);
      unsigned long index = std::stoul(digits);
      if (index < 1 || index > nvars_) {
        throw ParseError("variable x" + digits + " out of range for " + std::to_string(nvars_) + " variables",
                         start);
      }
      return Polynomial::variable(nvars_, index - 1);
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string variable_name(std::size_t index) {
  std::size_t k = index + 1;
  return k < 10 ? "x" + std::to_string(k) : "x{" + std::to_string(k) + "}";
}

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw DimensionError("polynomial ring needs at least one variable");
  return Parser(text, nvars).run();
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(i);
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

}  // namespace autrel
