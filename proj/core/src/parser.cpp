#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "coamap/errors.hpp"
#include "coamap/lpoly.hpp"

namespace coamap {

namespace {

struct Token {
  enum Kind { Number, Decimal, Var, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::size_t pos;
  std::string text;  // digits for Number/Decimal, name for Ident, index digits for Var
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      std::size_t p = i_;
      if (i_ >= s_.size()) {
        out.push_back({Token::End, p, ""});
        break;
      }
      char c = s_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(lex_number(p));
      } else if (c == 'z') {
        ++i_;
        std::string idx;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) idx += s_[i_++];
        out.push_back({Token::Var, p, idx});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
        out.push_back({Token::Ident, p, name});
      } else {
        ++i_;
        switch (c) {
          case '+': out.push_back({Token::Plus, p, "+"}); break;
          case '-': out.push_back({Token::Minus, p, "-"}); break;
          case '*': out.push_back({Token::Star, p, "*"}); break;
          case '^': out.push_back({Token::Caret, p, "^"}); break;
          case '/': out.push_back({Token::Slash, p, "/"}); break;
          case '(': out.push_back({Token::LParen, p, "("}); break;
          case ')': out.push_back({Token::RParen, p, ")"}); break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", p);
        }
      }
    }
    return out;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  Token lex_number(std::size_t p) {
    std::string digits;
    bool is_decimal = false;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (i_ < s_.size() && s_[i_] == '.') {
      is_decimal = true;
      digits += s_[i_++];
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    }
    // Scientific notation, only when the 'e' is actually an exponent.
    if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
      std::size_t j = i_ + 1;
      if (j < s_.size() && (s_[j] == '+' || s_[j] == '-')) ++j;
      if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
        is_decimal = true;
        while (i_ < j) digits += s_[i_++];
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
      }
    }
    return {is_decimal ? Token::Decimal : Token::Number, p, digits};
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

// Scalar value accumulated while multiplying coefficient factors.
struct ScalarAcc {
  double modulus = 1.0;
  Angle angle;     // sum of factor angles, exact while possible
  bool zero = false;

  void mul_rational(const Rat& r) {
    if (r == 0) {
      zero = true;
      return;
    }
    modulus *= std::abs(to_double(r));
    if (r < 0) angle = angle + Angle::pi();
  }
  void mul_double(double d) {
    if (d == 0.0) {
      zero = true;
      return;
    }
    modulus *= std::abs(d);
    if (d < 0) angle = angle + Angle::pi();
  }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, int n) : toks_(std::move(toks)), n_(n) {}

  LaurentPolynomial parse() {
    LaurentPolynomial f;
    f.n = n_;
    bool negative = false;
    if (peek().kind == Token::Minus) {
      negative = true;
      advance();
    } else if (peek().kind == Token::Plus) {
      advance();
    }
    while (true) {
      f.terms.push_back(parse_term(negative));
      if (peek().kind == Token::End) break;
      if (peek().kind == Token::Plus) {
        negative = false;
        advance();
      } else if (peek().kind == Token::Minus) {
        negative = true;
        advance();
      } else {
        throw ParseError("expected '+', '-' or end of input", peek().pos);
      }
    }
    if (f.term_count() < 2)
      throw InputError("polynomial must have at least two terms");
    for (int a = 0; a < f.term_count(); ++a)
      for (int b = a + 1; b < f.term_count(); ++b)
        if (f.terms[a].exponent == f.terms[b].exponent)
          throw InputError("duplicate exponent between terms " + std::to_string(a + 1) + " and " +
                           std::to_string(b + 1) + " (duplicates are an error, not merged)");
    return f;
  }

 private:
  const Token& peek(int k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& advance() { return toks_[i_++]; }
  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
    advance();
  }

  Rat parse_rational_tail(const Token& first) {
    Int num(first.text, 10);
    if (peek().kind == Token::Slash && peek(1).kind == Token::Number) {
      advance();
      Int den(advance().text, 10);
      if (den == 0) throw ParseError("division by zero in rational", first.pos);
      return make_rat(num, den);
    }
    return Rat(num);
  }

  long parse_signed_integer() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      advance();
    } else if (peek().kind == Token::Plus) {
      advance();
    }
    if (peek().kind != Token::Number) throw ParseError("expected integer", peek().pos);
    long v = std::stol(advance().text);
    return neg ? -v : v;
  }

  // e^( [q*]pi*i ) exact, or e^( x*i ) float radians.
  Angle parse_polar_angle() {
    expect(Token::Caret, "'^' after e");
    expect(Token::LParen, "'(' after e^");
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      advance();
    } else if (peek().kind == Token::Plus) {
      advance();
    }
    Angle result;
    if (peek().kind == Token::Ident && peek().text == "pi") {
      advance();
      expect(Token::Star, "'*' after pi");
      expect_ident("i");
      result = Angle::pi();
    } else if (peek().kind == Token::Number) {
      Token num = advance();
      Rat q = parse_rational_tail(num);
      expect(Token::Star, "'*' in polar angle");
      if (peek().kind == Token::Ident && peek().text == "pi") {
        advance();
        expect(Token::Star, "'*' after pi");
        expect_ident("i");
        result = Angle::pi_units(q);
      } else {
        expect_ident("i");
        result = Angle::radians(to_double(q));
      }
    } else if (peek().kind == Token::Decimal) {
      double x = std::stod(advance().text);
      expect(Token::Star, "'*' in polar angle");
      expect_ident("i");
      result = Angle::radians(x);
    } else {
      throw ParseError("expected angle expression", peek().pos);
    }
    expect(Token::RParen, "')'");
    return neg ? -result : result;
  }

  void expect_ident(const char* name) {
    if (peek().kind != Token::Ident || peek().text != name)
      throw ParseError(std::string("expected '") + name + "'", peek().pos);
    advance();
  }

  // Cartesian a + b*i inside parentheses; returns scalar with exact
  // angle when it is one of the eight syntactically exact directions.
  void parse_parenthesized_complex(ScalarAcc& acc, std::size_t open_pos) {
    Rat re(0), im(0);
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      advance();
    } else if (peek().kind == Token::Plus) {
      advance();
    }
    while (true) {
      Rat value(1);
      bool has_i = false;
      if (peek().kind == Token::Ident && peek().text == "i") {
        advance();
        has_i = true;
      } else if (peek().kind == Token::Number) {
        Token num = advance();
        value = parse_rational_tail(num);
        if (peek().kind == Token::Star && peek(1).kind == Token::Ident && peek(1).text == "i") {
          advance();
          advance();
          has_i = true;
        }
      } else {
        throw ParseError("expected rational or i in complex literal", peek().pos);
      }
      if (neg) value = -value;
      (has_i ? im : re) += value;
      if (peek().kind == Token::RParen) {
        advance();
        break;
      }
      if (peek().kind == Token::Plus) {
        neg = false;
        advance();
      } else if (peek().kind == Token::Minus) {
        neg = true;
        advance();
      } else {
        throw ParseError("expected '+', '-' or ')' in complex literal", peek().pos);
      }
    }
    if (re == 0 && im == 0) throw ParseError("zero coefficient", open_pos);
    double a = to_double(re), b = to_double(im);
    acc.modulus *= std::hypot(a, b);
    Angle dir;
    if (im == 0) {
      dir = re > 0 ? Angle::zero() : Angle::pi();
    } else if (re == 0) {
      dir = Angle::pi_units(im > 0 ? 1 : -1, 2);
    } else if (abs(re.get_num()) * im.get_den() == abs(im.get_num()) * re.get_den()) {
      // |re| == |im|: a diagonal direction.
      long num = (re > 0) ? (im > 0 ? 1 : -1) : (im > 0 ? 3 : -3);
      dir = Angle::pi_units(num, 4);
    } else {
      dir = Angle::radians(std::atan2(b, a));
    }
    acc.angle = acc.angle + dir;
  }

  Term parse_term(bool negative) {
    ScalarAcc acc;
    if (negative) acc.angle = Angle::pi();
    std::vector<Int> exponent(n_, Int(0));
    bool saw_factor = false;
    bool saw_var = false;
    std::size_t term_pos = peek().pos;
    while (true) {
      const Token& t = peek();
      switch (t.kind) {
        case Token::Number: {
          Token num = advance();
          acc.mul_rational(parse_rational_tail(num));
          break;
        }
        case Token::Decimal:
          acc.mul_double(std::stod(advance().text));
          break;
        case Token::Var: {
          Token var = advance();
          int index;
          if (var.text.empty()) {
            if (n_ != 1)
              throw ParseError("variable 'z' without index requires n = 1", var.pos);
            index = 1;
          } else {
            index = std::stoi(var.text);
          }
          if (index < 1) throw ParseError("variable index must be at least 1", var.pos);
          if (index > n_)
            throw InputError("variable z" + std::to_string(index) + " exceeds n = " +
                             std::to_string(n_));
          long e = 1;
          if (peek().kind == Token::Caret) {
            advance();
            e = parse_signed_integer();
          }
          exponent[index - 1] += Int(e);
          saw_var = true;
          break;
        }
        case Token::Ident:
          if (t.text == "i") {
            advance();
            acc.angle = acc.angle + Angle::pi_units(1, 2);
          } else if (t.text == "e") {
            advance();
            acc.angle = acc.angle + parse_polar_angle();
          } else {
            throw ParseError("unknown symbol '" + t.text + "'", t.pos);
          }
          break;
        case Token::LParen: {
          std::size_t open = advance().pos;
          parse_parenthesized_complex(acc, open);
          break;
        }
        default:
          throw ParseError("expected a coefficient or variable", t.pos);
      }
      saw_factor = true;
      if (peek().kind == Token::Star) {
        advance();
        continue;
      }
      break;
    }
    (void)saw_var;
    if (!saw_factor) throw ParseError("empty term", term_pos);
    if (acc.zero || acc.modulus == 0.0) throw ParseError("zero coefficient", term_pos);
    Term term;
    term.exponent = std::move(exponent);
    term.coeff.modulus = acc.modulus;
    term.coeff.angle = acc.angle.normalized();
    return term;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int n_;
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text, int n) {
  if (n < 1) throw InputError("number of variables must be positive");
  Lexer lex(text);
  Parser parser(lex.run(), n);
  return parser.parse();
}

int infer_variable_count(const std::string& text) {
  Lexer lex(text);
  int n = 1;
  for (const auto& tok : lex.run())
    if (tok.kind == Token::Var && !tok.text.empty()) n = std::max(n, std::stoi(tok.text));
  return n;
}

}  // namespace coamap
