#include "gdconf/parse.hpp"

#include <cctype>
#include <string>

namespace gdconf {

namespace {

constexpr std::string_view kMinus = "\xE2\x88\x92";  // U+2212
constexpr std::string_view kDot = "\xC2\xB7";         // U+00B7

struct Value {
  bool vec = false;
  MPoly scalar;
  std::vector<MPoly> coords;
};

class Parser {
 public:
  Parser(const GDAlgebra& V, std::string_view text) : V_(V), s_(text) {}

  Value run() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  bool at_lambda() const { return s_.substr(pos_, 2) == "\xCE\xBB"; }
  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(' || at_lambda();
  }

  Value zero_vec() const { return Value{true, {}, std::vector<MPoly>(V_.dim())}; }

  Value add(Value a, Value b, bool minus) {
    // a bare 0 is allowed next to an element
    if (a.vec != b.vec) {
      Value& s = a.vec ? b : a;
      if (!s.scalar.is_zero()) error("cannot add a scalar to an element");
      s = zero_vec();
    }
    if (!a.vec) {
      minus ? a.scalar -= b.scalar : a.scalar += b.scalar;
      return a;
    }
    for (std::size_t k = 0; k < a.coords.size(); ++k) minus ? a.coords[k] -= b.coords[k] : a.coords[k] += b.coords[k];
    return a;
  }

  Value mul(const Value& a, const Value& b) {
    if (a.vec && b.vec) error("product of two elements");
    if (!a.vec && !b.vec) return Value{false, a.scalar * b.scalar, {}};
    const Value& s = a.vec ? b : a;
    Value out = a.vec ? a : b;
    for (auto& c : out.coords) c = s.scalar * c;
    return out;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (eat("+"))
        v = add(std::move(v), term(), false);
      else if (eat("-") || eat(kMinus))
        v = add(std::move(v), term(), true);
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (eat("*") || eat(kDot))
        v = mul(v, unary());
      else if (starts_atom())
        v = mul(v, unary());
      else
        return v;
    }
  }

  Value unary() {
    if (eat("-") || eat(kMinus)) {
      Value v = unary();
      return mul(Value{false, MPoly(-1), {}}, v);
    }
    return power();
  }

  Value power() {
    Value v = atom();
    if (eat("^")) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected an integer exponent");
      if (v.vec) error("power of an element");
      v.scalar = v.scalar.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return v;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    if (eat("(")) {
      Value v = expr();
      if (!eat(")")) error("expected ')'");
      return v;
    }
    if (at_lambda()) {
      pos_ += 2;
      return Value{false, MPoly::var(Var::Lambda), {}};
    }
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      Rational r;
      try {
        r = parse_rational(s_.substr(start, pos_ - start));
      } catch (const std::invalid_argument& e) {
        error(e.what());
      }
      return Value{false, MPoly(r), {}};
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t k = 0; k < V_.dim(); ++k)
        if (V_.basis_names()[k] == name) {
          Value v = zero_vec();
          v.coords[k] = MPoly(1);
          return v;
        }
      if (name == "T") return Value{false, MPoly::var(Var::T), {}};
      if (name == "lambda") return Value{false, MPoly::var(Var::Lambda), {}};
      pos_ = start;
      error("unknown basis name '" + name + "'");
    }
    error("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  const GDAlgebra& V_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<MPoly> parse_coords(const GDAlgebra& V, std::string_view text) {
  Value v = Parser(V, text).run();
  if (!v.vec) {
    if (!v.scalar.is_zero()) throw ParseError("\"" + std::string(text) + "\" has no basis element");
    return std::vector<MPoly>(V.dim());
  }
  return v.coords;
}

ConfElem parse_elem(const GDAlgebra& V, std::string_view text) {
  auto coords = parse_coords(V, text);
  for (const auto& c : coords)
    if (c.uses(Var::Lambda) || c.uses(Var::X) || c.uses(Var::Mu))
      throw ParseError("\"" + std::string(text) + "\": coefficients of an element are polynomials in T");
  return ConfElem{std::move(coords)};
}

}  // namespace gdconf
