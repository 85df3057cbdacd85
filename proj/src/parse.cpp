#include "qconst/parse.hpp"

#include <cctype>

namespace qconst {

namespace {

class Parser {
public:
  Parser(std::string_view text, const ScalarHeader& header) : text_(text), header_(header) {}

  Scalar parse()
  {
    Scalar s = expression();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return s;
  }

private:
  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string digits()
  {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  long small_integer()
  {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9)
      throw ParseError("integer too large", at);
    return std::stol(d);
  }

  Scalar expression()
  {
    Scalar acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Scalar term()
  {
    Scalar acc = unary();
    for (;;) {
      if (accept('*'))
        acc *= unary();
      else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero())
          throw ParseError("division by zero", at);
        acc /= d;
      } else
        return acc;
    }
  }

  Scalar unary()
  {
    if (accept('-'))
      return -unary();
    return power();
  }

  Scalar power()
  {
    Scalar base = atom();
    if (!accept('^'))
      return base;
    bool negative = false;
    bool paren = accept('(');
    if (accept('-'))
      negative = true;
    long e = small_integer();
    if (paren)
      expect(')');
    if (negative) {
      if (base.is_zero())
        throw ParseError("division by zero", pos_);
      e = -e;
    }
    return base.pow(e);
  }

  Scalar atom()
  {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar s = expression();
      expect(')');
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Scalar(Rational(mpz_class(digits())));
    if (text_.substr(pos_, 4) == "zeta") {
      const std::size_t at = pos_;
      pos_ += 4;
      expect('(');
      const long n = small_integer();
      expect(')');
      if (n < 1)
        throw ParseError("zeta order must be positive", at);
      if (header_.conductor % n != 0)
        throw ParseError("zeta(" + std::to_string(n) + ") is not in the field of conductor " +
                             std::to_string(header_.conductor),
                         at);
      return Scalar(Cyclotomic::zeta(header_.conductor, header_.conductor / n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      const std::string name(text_.substr(at, pos_ - at));
      for (std::size_t i = 0; i < header_.indeterminates.size(); ++i)
        if (header_.indeterminates[i] == name)
          return Scalar::var(static_cast<int>(i));
      throw ParseError("unknown indeterminate '" + name + "'", at);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const ScalarHeader& header_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text, const ScalarHeader& header)
{
  return Parser(text, header).parse();
}

} // namespace qconst
