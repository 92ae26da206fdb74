// Recursive-descent parser for the polynomial input language:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ('x'|'y') ('^' uint)?
//   coeff  := int | int '/' uint | '(' coeff ')'
// Whitespace is insignificant. Output is always in canonical form.
#include "slopecert/errors.hpp"
#include "slopecert/sparse_poly.hpp"

#include <cctype>

namespace slopecert {

namespace {

constexpr uint32_t kMaxExponent = 1u << 20;

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  SparsePoly run() {
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", 0);
    SparsePoly acc;
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    acc = acc + parse_term(negate);
    skip_ws();
    while (!eof()) {
      char op = peek();
      if (op != '+' && op != '-')
        throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      acc = acc + parse_term(op == '-');
      skip_ws();
    }
    return acc.canonical();
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  SparsePoly parse_term(bool negate) {
    skip_ws();
    if (eof()) throw ParseError("expected term", pos_);
    Rat coeff(1);
    uint32_t xe = 0, ye = 0;
    bool saw_anything = false;
    char c = peek();
    if (c == 'x' || c == 'y') {
      parse_factor(xe, ye);
      saw_anything = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
               c == '-') {
      coeff = parse_coeff();
      saw_anything = true;
    } else {
      throw ParseError("expected coefficient or variable", pos_);
    }
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      skip_ws();
      char v = peek();
      if (v != 'x' && v != 'y')
        throw ParseError("expected variable after '*'", pos_);
      parse_factor(xe, ye);
      skip_ws();
    }
    if (!saw_anything) throw ParseError("empty term", pos_);
    if (negate) coeff = -coeff;
    return SparsePoly::term(coeff, xe, ye);
  }

  void parse_factor(uint32_t& xe, uint32_t& ye) {
    char v = peek();
    ++pos_;
    uint32_t e = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      e = parse_uint();
    }
    uint64_t cur = (v == 'x' ? xe : ye) + uint64_t(e);
    if (cur > kMaxExponent) throw ParseError("exponent overflow", pos_);
    if (v == 'x') {
      xe = static_cast<uint32_t>(cur);
    } else {
      ye = static_cast<uint32_t>(cur);
    }
  }

  Rat parse_coeff() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Rat inner = parse_coeff();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    Int num = parse_int();
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      Int den = parse_unsigned_int();
      if (den == 0) throw ParseError("zero denominator", at);
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }

  Int parse_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    Int v = parse_unsigned_int();
    return neg ? Int(-v) : v;
  }

  Int parse_unsigned_int() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", pos_);
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(s_[pos_++]);
    }
    return Int(digits);
  }

  uint32_t parse_uint() {
    size_t at = pos_;
    Int v = parse_unsigned_int();
    if (v > kMaxExponent) throw ParseError("exponent overflow", at);
    return static_cast<uint32_t>(v.get_ui());
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace slopecert
