#include "weyl/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace weyl {

namespace {

std::string join_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

std::string where(SourcePos p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

class Parser {
 public:
  Parser(std::string_view src, const SessionConfig& cfg) : src_(src), sig_(*cfg.signature) {}

  ExprAst run() {
    ExprAst e = element();
    skip_ws();
    if (!at_end()) fail({"'+'", "'-'", "end of input"});
    return e;
  }

 private:
  std::string_view src_;
  const Signature& sig_;
  std::size_t at_ = 0;
  SourcePos pos_;

  bool at_end() const { return at_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[at_]; }

  void advance() {
    if (src_[at_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++at_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw SyntaxError(pos_, std::move(expected), std::move(found));
  }

  [[noreturn]] void dimension(SourcePos p, const std::string& what) {
    throw Error(ErrorCode::DimensionError, where(p) + ": " + what);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail({"'" + std::string(1, c) + "'"});
    advance();
  }

  bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    if (!is_digit()) fail({"digit"});
    std::string out;
    while (is_digit()) {
      out += peek();
      advance();
    }
    return out;
  }

  std::int64_t small_nat(std::int64_t limit) {
    SourcePos p = pos_;
    std::string d = digits();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || v > limit) dimension(p, "number " + d + " out of range");
    return v;
  }

  Rational rational(bool allow_sign) {
    std::string text;
    if (allow_sign && peek() == '-') {
      text += '-';
      advance();
    }
    text += digits();
    if (peek() == '/') {
      advance();
      SourcePos p = pos_;
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos)
        throw SyntaxError(p, {"positive integer"}, "'" + den + "'");
      text += '/' + den;
    }
    return parse_rational(text);
  }

  // "(" ... ")" with the zero vector for "()"; nullopt entries mean "()".
  std::optional<RatVec> vector(bool naturals) {
    expect('(');
    skip_ws();
    if (peek() == ')') {
      advance();
      return std::nullopt;
    }
    RatVec out;
    for (;;) {
      skip_ws();
      if (naturals) {
        if (!is_digit()) fail({"natural number"});
        out.emplace_back(small_nat(std::numeric_limits<std::int32_t>::max()));
      } else {
        if (!is_digit() && peek() != '-') fail({"rational"});
        out.push_back(rational(true));
      }
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ')') {
        advance();
        return out;
      }
      fail({"','", "')'"});
    }
  }

  ExprAst node(ExprAst::Kind kind, SourcePos pos) {
    ExprAst n{kind, pos, {}, {}, Rational(0), {}, std::nullopt, 0, 1};
    return n;
  }

  ExprAst element() {
    skip_ws();
    ExprAst sum = node(ExprAst::Kind::Sum, pos_);
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      advance();
    }
    for (;;) {
      sum.children.push_back(term());
      sum.negated.push_back(neg);
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      neg = peek() == '-';
      advance();
    }
    if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
    return sum;
  }

  ExprAst term() {
    skip_ws();
    ExprAst prod = node(ExprAst::Kind::Product, pos_);
    if (is_digit()) {
      ExprAst s = node(ExprAst::Kind::Scalar, pos_);
      s.value = rational(false);
      skip_ws();
      if (peek() != '*') return s;
      advance();
      prod.children.push_back(std::move(s));
    }
    prod.children.push_back(factor());
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      advance();
      prod.children.push_back(factor());
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  ExprAst factor() {
    skip_ws();
    const SourcePos start = pos_;
    const std::set<std::string> starts = {"'x['", "'d'", "'['", "'('"};
    switch (peek()) {
      case 'x': {
        advance();
        if (peek() != '[') fail({"'['"});
        advance();
        skip_ws();
        ExprAst x = node(ExprAst::Kind::GenX, start);
        SourcePos apos = pos_;
        auto a = vector(false);
        x.alpha = a ? *a : RatVec(sig_.ell(), Rational(0));
        if (x.alpha.size() != sig_.ell())
          dimension(apos, "exponent has " + std::to_string(x.alpha.size()) + " entries, expected " +
                              std::to_string(sig_.ell()));
        skip_ws();
        if (peek() == ';') {
          advance();
          skip_ws();
          SourcePos ipos = pos_;
          auto iv = vector(true);
          MultiIndex i(sig_.ell(), 0);
          if (iv) {
            if (iv->size() != sig_.ell1() && iv->size() != sig_.ell())
              dimension(ipos, "polynomial index has " + std::to_string(iv->size()) + " entries, expected " +
                                  std::to_string(sig_.ell1()) + " or " + std::to_string(sig_.ell()));
            for (std::size_t k = 0; k < iv->size(); ++k) {
              if (k >= sig_.ell1() && (*iv)[k] != 0)
                dimension(ipos, "polynomial index is nonzero past position " + std::to_string(sig_.ell1()));
              i[k] = static_cast<std::int32_t>((*iv)[k].get_num().get_si());
            }
          }
          x.i = std::move(i);
        }
        expect(']');
        return x;
      }
      case 'd': {
        advance();
        ExprAst d = node(ExprAst::Kind::GenD, start);
        SourcePos ipos = pos_;
        if (!is_digit()) fail({"index"});
        std::int64_t q = small_nat(std::numeric_limits<std::int32_t>::max());
        if (q < 1 || static_cast<std::size_t>(q) > sig_.ell())
          dimension(ipos, "derivation index " + std::to_string(q) + " outside 1.." + std::to_string(sig_.ell()));
        d.index = static_cast<std::size_t>(q);
        skip_ws();
        if (peek() == '^') {
          advance();
          skip_ws();
          d.power = static_cast<std::int32_t>(small_nat(std::numeric_limits<std::int32_t>::max()));
        }
        return d;
      }
      case '[': {
        advance();
        ExprAst b = node(ExprAst::Kind::Bracket, start);
        b.children.push_back(element());
        expect(',');
        b.children.push_back(element());
        expect(']');
        return b;
      }
      case '(': {
        advance();
        ExprAst p = node(ExprAst::Kind::Paren, start);
        p.children.push_back(element());
        expect(')');
        return p;
      }
      default:
        fail(starts);
    }
  }
};

std::string join_ints(const MultiIndex& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + ")";
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::set<std::string> expected, std::string found)
    : Error(ErrorCode::SyntaxError, where(pos) + ": expected " + join_expected(expected) + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::string ExprAst::describe() const {
  auto list = [this](const char* name) {
    std::string out = name;
    out += '(';
    for (std::size_t k = 0; k < children.size(); ++k) {
      if (k) out += ", ";
      bool neg = kind == Kind::Sum && negated[k];
      out += neg ? "Neg(" + children[k].describe() + ")" : children[k].describe();
    }
    return out + ")";
  };
  switch (kind) {
    case Kind::Sum: return list("Sum");
    case Kind::Product: return list("Product");
    case Kind::Bracket: return list("Bracket");
    case Kind::Paren: return list("Paren");
    case Kind::Scalar: return "Scalar(" + to_string(value) + ")";
    case Kind::GenX: return "GenX(" + to_string(alpha) + (i ? ";" + join_ints(*i) : "") + ")";
    case Kind::GenD: return "GenD(" + std::to_string(index) + "," + std::to_string(power) + ")";
  }
  return {};
}

ExprAst parse_element(std::string_view src, const SessionConfig& cfg) {
  if (!cfg.signature) throw Error(ErrorCode::InvalidArgument, "no signature configured");
  return Parser(src, cfg).run();
}

Element eval_expr(const ExprAst& ast, const SessionConfig& cfg) {
  const SignaturePtr& sig = cfg.signature;
  switch (ast.kind) {
    case ExprAst::Kind::Sum: {
      Element out = Element::zero(sig);
      for (std::size_t k = 0; k < ast.children.size(); ++k) {
        if (ast.negated[k])
          out -= eval_expr(ast.children[k], cfg);
        else
          out += eval_expr(ast.children[k], cfg);
      }
      return out;
    }
    case ExprAst::Kind::Product: {
      Element out = eval_expr(ast.children.front(), cfg);
      for (std::size_t k = 1; k < ast.children.size(); ++k) out = mul(out, eval_expr(ast.children[k], cfg));
      return out;
    }
    case ExprAst::Kind::Scalar: return Element::scalar(sig, ast.value);
    case ExprAst::Kind::GenX: {
      Monomial m = unit_monomial(*sig);
      m.alpha = sig->lattice().require_coordinates(ast.alpha);
      if (ast.i) {
        for (std::size_t k = 0; k < ast.i->size(); ++k) {
          if (k >= sig->ell1() && (*ast.i)[k] != 0)
            throw Error(ErrorCode::DimensionError, "polynomial index is nonzero past position " +
                                                       std::to_string(sig->ell1()));
          m.i[k] = (*ast.i)[k];
        }
      }
      return Element::monomial(sig, std::move(m));
    }
    case ExprAst::Kind::GenD:
      if (ast.index < 1 || ast.index > sig->ell())
        throw Error(ErrorCode::DimensionError, "derivation index out of range");
      return Element::d(sig, ast.index - 1, ast.power);
    case ExprAst::Kind::Bracket:
      return bracket(eval_expr(ast.children[0], cfg), eval_expr(ast.children[1], cfg));
    case ExprAst::Kind::Paren: return eval_expr(ast.children[0], cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown expression node");
}

Element parse_and_eval(std::string_view src, const SessionConfig& cfg) {
  return eval_expr(parse_element(src, cfg), cfg);
}

std::string print_element(const Element& e) {
  if (e.is_zero()) return "0";
  const Signature& sig = e.sig();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    std::vector<std::string> factors;
    bool has_x = std::any_of(m.alpha.begin(), m.alpha.end(), [](auto a) { return a != 0; }) ||
                 std::any_of(m.i.begin(), m.i.end(), [](auto a) { return a != 0; });
    if (has_x) factors.push_back("x[" + to_string(alpha_vector(sig, m)) + ";" + join_ints(m.i) + "]");
    for (std::size_t q = 0; q < m.mu.size(); ++q) {
      if (m.mu[q] == 0) continue;
      std::string d = "d" + std::to_string(q + 1);
      if (m.mu[q] > 1) d += "^" + std::to_string(m.mu[q]);
      factors.push_back(std::move(d));
    }
    Rational mag = abs(c);
    std::string text;
    if (factors.empty() || mag != 1) text = to_string(mag);
    for (const auto& f : factors) {
      if (!text.empty()) text += " * ";
      text += f;
    }
    if (first)
      out = (c < 0 ? "-" : "") + text;
    else
      out += (c < 0 ? " - " : " + ") + text;
    first = false;
  }
  return out;
}

}  // namespace weyl
