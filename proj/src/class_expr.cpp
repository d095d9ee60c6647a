#include "permclass/class_expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "permclass/errors.hpp"

namespace permclass {

namespace {

void require_param(int k, int min, const char *name) {
  if (k < min)
    throw PreconditionError(std::string(name) + " needs a parameter >= " +
                            std::to_string(min));
}

void require_arity(std::size_t got, std::size_t min, const char *name) {
  if (got < min)
    throw PreconditionError(std::string(name) + " needs at least " +
                            std::to_string(min) + " argument(s), got " +
                            std::to_string(got));
}

std::string render_literal(const Permutation &p) {
  if (p.size() >= 1 && p.size() <= 9)
    return p.str();
  return "[" + p.spaced() + "]";
}

} // namespace

ClassExpr::ClassExpr(Kind kind, std::vector<ClassExpr> children)
    : kind_(kind), children_(std::move(children)) {}

ClassExpr ClassExpr::inc_k(int k) {
  require_param(k, 0, "Ik");
  ClassExpr e(Kind::IncK);
  e.param_ = k;
  return e;
}

ClassExpr ClassExpr::dec_k(int k) {
  require_param(k, 0, "Dk");
  ClassExpr e(Kind::DecK);
  e.param_ = k;
  return e;
}

ClassExpr ClassExpr::layered_k(int k) {
  require_param(k, 1, "Lk");
  ClassExpr e(Kind::LayeredK);
  e.param_ = k;
  return e;
}

ClassExpr ClassExpr::vert_k(int k) {
  require_param(k, 1, "Vk");
  ClassExpr e(Kind::VertK);
  e.param_ = k;
  return e;
}

ClassExpr ClassExpr::horiz_k(int k) {
  require_param(k, 1, "Hk");
  ClassExpr e(Kind::HorizK);
  e.param_ = k;
  return e;
}

ClassExpr ClassExpr::avoid(std::vector<Permutation> basis) {
  require_arity(basis.size(), 1, "Av");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty())
      throw PreconditionError("Av patterns must be nonempty");
    for (std::size_t j = 0; j < i; ++j)
      if (basis[i] == basis[j])
        throw PreconditionError("duplicate pattern " + basis[i].str() +
                                " in Av");
  }
  ClassExpr e(Kind::Avoid);
  e.basis_ = std::move(basis);
  return e;
}

ClassExpr ClassExpr::compose(std::vector<ClassExpr> factors) {
  require_arity(factors.size(), 2, "comp");
  return {Kind::Compose, std::move(factors)};
}

ClassExpr ClassExpr::merge(std::vector<ClassExpr> parts) {
  require_arity(parts.size(), 2, "merge");
  return {Kind::Merge, std::move(parts)};
}

ClassExpr ClassExpr::vertical(std::vector<ClassExpr> parts) {
  require_arity(parts.size(), 1, "V");
  return {Kind::Vertical, std::move(parts)};
}

ClassExpr ClassExpr::horizontal(std::vector<ClassExpr> parts) {
  require_arity(parts.size(), 1, "H");
  return {Kind::Horizontal, std::move(parts)};
}

ClassExpr ClassExpr::intersect(std::vector<ClassExpr> parts) {
  require_arity(parts.size(), 2, "and");
  return {Kind::Intersect, std::move(parts)};
}

ClassExpr ClassExpr::unite(std::vector<ClassExpr> parts) {
  require_arity(parts.size(), 2, "or");
  return {Kind::Union, std::move(parts)};
}

ClassExpr ClassExpr::rev(ClassExpr child) {
  return {Kind::Reverse, {std::move(child)}};
}

ClassExpr ClassExpr::cpl(ClassExpr child) {
  return {Kind::Complement, {std::move(child)}};
}

ClassExpr ClassExpr::inv(ClassExpr child) {
  return {Kind::Inverse, {std::move(child)}};
}

bool ClassExpr::is_atom() const noexcept {
  switch (kind_) {
  case Kind::Inc:
  case Kind::Dec:
  case Kind::IncK:
  case Kind::DecK:
  case Kind::Layered:
  case Kind::LayeredK:
  case Kind::F2:
  case Kind::VertK:
  case Kind::HorizK:
  case Kind::Avoid:
  case Kind::All:
    return true;
  default:
    return false;
  }
}

std::string ClassExpr::render() const { return render_impl(false); }
std::string ClassExpr::canonical() const { return render_impl(true); }

std::string ClassExpr::render_impl(bool canonical) const {
  auto with_param = [this](const char *name) {
    return std::string(name) + "(" + std::to_string(param_) + ")";
  };
  auto call = [&](const char *name, bool commutative) {
    std::vector<std::string> args;
    for (const auto &c : children_)
      args.push_back(c.render_impl(canonical));
    if (canonical && commutative)
      std::sort(args.begin(), args.end());
    std::string out = std::string(name) + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i)
        out += ",";
      out += args[i];
    }
    return out + ")";
  };
  switch (kind_) {
  case Kind::Inc:
    return "I";
  case Kind::Dec:
    return "D";
  case Kind::Layered:
    return "L";
  case Kind::F2:
    return "F2";
  case Kind::All:
    return "All";
  case Kind::IncK:
    return with_param("Ik");
  case Kind::DecK:
    return with_param("Dk");
  case Kind::LayeredK:
    return with_param("Lk");
  case Kind::VertK:
    return with_param("Vk");
  case Kind::HorizK:
    return with_param("Hk");
  case Kind::Avoid: {
    std::vector<std::string> pats;
    for (const auto &p : basis_)
      pats.push_back(render_literal(p));
    if (canonical)
      std::sort(pats.begin(), pats.end());
    std::string out = "Av(";
    for (std::size_t i = 0; i < pats.size(); ++i) {
      if (i)
        out += ",";
      out += pats[i];
    }
    return out + ")";
  }
  case Kind::Compose:
    return call("comp", false);
  case Kind::Merge:
    return call("merge", true);
  case Kind::Vertical:
    return call("V", false);
  case Kind::Horizontal:
    return call("H", false);
  case Kind::Intersect:
    return call("and", true);
  case Kind::Union:
    return call("or", true);
  case Kind::Reverse:
    return call("rev", false);
  case Kind::Complement:
    return call("cpl", false);
  case Kind::Inverse:
    return call("inv", false);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.

namespace {

enum class TokKind { Ident, Number, Bracket, LParen, RParen, Comma, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size())
      return {TokKind::End, "", start};
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return {TokKind::Ident, std::string(src_.substr(start, pos_ - start)),
              start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return {TokKind::Number, std::string(src_.substr(start, pos_ - start)),
              start};
    }
    if (c == '[') {
      const auto close = src_.find(']', pos_);
      if (close == std::string_view::npos)
        throw ParseError("unterminated '['", start);
      pos_ = close + 1;
      return {TokKind::Bracket, std::string(src_.substr(start, pos_ - start)),
              start};
    }
    ++pos_;
    switch (c) {
    case '(':
      return {TokKind::LParen, "(", start};
    case ')':
      return {TokKind::RParen, ")", start};
    case ',':
      return {TokKind::Comma, ",", start};
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  ClassExpr parse_all() {
    ClassExpr e = parse_expr();
    if (tok_.kind != TokKind::End)
      throw ParseError("trailing input '" + tok_.text + "'", tok_.pos);
    return e;
  }

private:
  void advance() { tok_ = lexer_.next(); }

  void expect(TokKind kind, const char *what) {
    if (tok_.kind != kind)
      throw ParseError(std::string("expected ") + what +
                           (tok_.kind == TokKind::End ? " at end of input"
                                                      : ", got '" + tok_.text + "'"),
                       tok_.pos);
    advance();
  }

  ClassExpr parse_expr() {
    if (tok_.kind != TokKind::Ident)
      throw ParseError(tok_.kind == TokKind::End
                           ? "expected class expression at end of input"
                           : "expected class expression, got '" + tok_.text + "'",
                       tok_.pos);
    const Token name = tok_;
    advance();
    const std::string &n = name.text;
    if (n == "I" || n == "D" || n == "L" || n == "F2" || n == "All") {
      if (tok_.kind == TokKind::LParen)
        throw ParseError("atom '" + n + "' takes no arguments", tok_.pos);
      if (n == "I")
        return ClassExpr::inc();
      if (n == "D")
        return ClassExpr::dec();
      if (n == "L")
        return ClassExpr::layered();
      if (n == "F2")
        return ClassExpr::f2();
      return ClassExpr::all();
    }
    if (n == "Ik" || n == "Dk" || n == "Lk" || n == "Vk" || n == "Hk")
      return parse_param_atom(name);
    if (n == "Av")
      return parse_avoid(name);
    if (n == "V" || n == "H" || n == "comp" || n == "merge" || n == "and" ||
        n == "or" || n == "rev" || n == "cpl" || n == "inv")
      return parse_operator(name);
    throw ParseError("unknown name '" + n + "'", name.pos);
  }

  ClassExpr parse_param_atom(const Token &name) {
    expect(TokKind::LParen, "'('");
    if (tok_.kind != TokKind::Number)
      throw ParseError("expected a nonnegative integer", tok_.pos);
    const Token num = tok_;
    advance();
    expect(TokKind::RParen, "')'");
    int k = 0;
    try {
      k = std::stoi(num.text);
    } catch (const std::exception &) {
      throw ParseError("integer out of range", num.pos);
    }
    try {
      if (name.text == "Ik")
        return ClassExpr::inc_k(k);
      if (name.text == "Dk")
        return ClassExpr::dec_k(k);
      if (name.text == "Lk")
        return ClassExpr::layered_k(k);
      if (name.text == "Vk")
        return ClassExpr::vert_k(k);
      return ClassExpr::horiz_k(k);
    } catch (const PreconditionError &e) {
      throw ParseError(e.what(), num.pos);
    }
  }

  ClassExpr parse_avoid(const Token &name) {
    expect(TokKind::LParen, "'('");
    std::vector<Permutation> basis;
    if (tok_.kind == TokKind::RParen)
      throw ParseError("Av needs at least one pattern", tok_.pos);
    while (true) {
      if (tok_.kind != TokKind::Number && tok_.kind != TokKind::Bracket)
        throw ParseError("expected a permutation literal", tok_.pos);
      try {
        basis.push_back(Permutation::parse(tok_.text));
      } catch (const ParseError &e) {
        throw ParseError(std::string("bad permutation literal '") + tok_.text +
                             "'",
                         tok_.pos + e.position());
      }
      advance();
      if (tok_.kind == TokKind::Comma) {
        advance();
        continue;
      }
      break;
    }
    expect(TokKind::RParen, "')'");
    try {
      return ClassExpr::avoid(std::move(basis));
    } catch (const PreconditionError &e) {
      throw ParseError(e.what(), name.pos);
    }
  }

  ClassExpr parse_operator(const Token &name) {
    expect(TokKind::LParen, "'('");
    std::vector<ClassExpr> args;
    if (tok_.kind != TokKind::RParen) {
      args.push_back(parse_expr());
      while (tok_.kind == TokKind::Comma) {
        advance();
        args.push_back(parse_expr());
      }
    }
    expect(TokKind::RParen, "')'");
    const std::string &n = name.text;
    const bool unary = n == "rev" || n == "cpl" || n == "inv";
    if (unary && args.size() != 1)
      throw ParseError(n + " takes exactly one argument", name.pos);
    try {
      if (n == "rev")
        return ClassExpr::rev(std::move(args[0]));
      if (n == "cpl")
        return ClassExpr::cpl(std::move(args[0]));
      if (n == "inv")
        return ClassExpr::inv(std::move(args[0]));
      if (n == "V")
        return ClassExpr::vertical(std::move(args));
      if (n == "H")
        return ClassExpr::horizontal(std::move(args));
      if (n == "comp")
        return ClassExpr::compose(std::move(args));
      if (n == "merge")
        return ClassExpr::merge(std::move(args));
      if (n == "and")
        return ClassExpr::intersect(std::move(args));
      return ClassExpr::unite(std::move(args));
    } catch (const PreconditionError &e) {
      throw ParseError(e.what(), name.pos);
    }
  }

  Lexer lexer_;
  Token tok_{TokKind::End, "", 0};
};

} // namespace

ClassExpr ClassExpr::parse(std::string_view text) {
  return Parser(text).parse_all();
}

} // namespace permclass
