#include "hvector/expr.hpp"

#include <cctype>
#include <limits>

#include "hvector/error.hpp"

namespace hvector {

Expr Expr::make(ExprKind kind, int n, std::vector<Expr> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->n = n;
  for (const auto& c : children) node->is_virtual = node->is_virtual || c.is_virtual();
  switch (kind) {
    case ExprKind::Point: node->dim = 0; break;
    case ExprKind::Cone:
    case ExprKind::Prism:
    case ExprKind::Bipyramid: node->dim = children[0].dim() + 1; break;
    case ExprKind::Dual: node->dim = children[0].dim(); break;
    case ExprKind::Product: node->dim = children[0].dim() + children[1].dim(); break;
    case ExprKind::Simplex:
    case ExprKind::Cube:
    case ExprKind::CrossPolytope: node->dim = n; break;
    case ExprKind::DOperator:
      node->dim = children[0].dim() + 2;
      node->is_virtual = true;
      break;
  }
  node->children = std::move(children);
  return Expr(std::move(node));
}

Expr Expr::point() { return make(ExprKind::Point, 0, {}); }
Expr Expr::cone(Expr e) { return make(ExprKind::Cone, 0, {std::move(e)}); }
Expr Expr::prism(Expr e) { return make(ExprKind::Prism, 0, {std::move(e)}); }
Expr Expr::bipyramid(Expr e) { return make(ExprKind::Bipyramid, 0, {std::move(e)}); }
Expr Expr::dual(Expr e) { return make(ExprKind::Dual, 0, {std::move(e)}); }
Expr Expr::d_op(Expr e) { return make(ExprKind::DOperator, 0, {std::move(e)}); }

Expr Expr::product(Expr a, Expr b) {
  return make(ExprKind::Product, 0, {std::move(a), std::move(b)});
}

Expr Expr::simplex(int n) {
  if (n < 0) throw DomainError("simplex(n) needs n >= 0");
  return make(ExprKind::Simplex, n, {});
}

Expr Expr::cube(int n) {
  if (n < 1) throw DomainError("cube(n) needs n >= 1");
  return make(ExprKind::Cube, n, {});
}

Expr Expr::crosspoly(int n) {
  if (n < 1) throw DomainError("crosspoly(n) needs n >= 1");
  return make(ExprKind::CrossPolytope, n, {});
}

std::optional<std::string> Expr::as_word() const {
  std::string word;
  const Expr* e = this;
  while (true) {
    switch (e->kind()) {
      case ExprKind::Point: return word;
      case ExprKind::Cone: word += 'C'; break;
      case ExprKind::Prism: word += 'I'; break;
      case ExprKind::DOperator: word += 'D'; break;
      default: return std::nullopt;
    }
    e = &e->child();
  }
}

std::string Expr::to_string() const {
  auto wrap = [this](const char* name) { return std::string(name) + "(" + child().to_string() + ")"; };
  switch (kind()) {
    case ExprKind::Point: return "pt";
    case ExprKind::Cone: return wrap("C");
    case ExprKind::Prism: return wrap("I");
    case ExprKind::Bipyramid: return wrap("B");
    case ExprKind::Dual: return wrap("dual");
    case ExprKind::DOperator: return wrap("D");
    case ExprKind::Product:
      return "prod(" + child(0).to_string() + "," + child(1).to_string() + ")";
    case ExprKind::Simplex: return "simplex(" + std::to_string(size_arg()) + ")";
    case ExprKind::Cube: return "cube(" + std::to_string(size_arg()) + ")";
    case ExprKind::CrossPolytope: return "crosspoly(" + std::to_string(size_arg()) + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an expression");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) fail("integer argument too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a non-negative integer");
    return static_cast<int>(value);
  }

  Expr sized(Expr (*factory)(int), int min_n) {
    expect('(');
    const std::size_t at = pos_;
    const int n = integer();
    if (n < min_n) throw ParseError("argument must be at least " + std::to_string(min_n), at);
    expect(')');
    return factory(n);
  }

  Expr expr() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "pt") return Expr::point();
    if (name == "simplex") return sized(&Expr::simplex, 0);
    if (name == "cube") return sized(&Expr::cube, 1);
    if (name == "crosspoly") return sized(&Expr::crosspoly, 1);
    if (name == "dual") {
      expect('(');
      Expr e = expr();
      expect(')');
      return Expr::dual(std::move(e));
    }
    if (name == "prod") {
      expect('(');
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(')');
      return Expr::product(std::move(a), std::move(b));
    }
    for (std::size_t i = 0; i < name.size(); ++i) {
      if (name[i] != 'C' && name[i] != 'I' && name[i] != 'B' && name[i] != 'D') {
        throw ParseError("unknown name '" + name + "'", start);
      }
    }
    expect('(');
    Expr e = expr();
    expect(')');
    for (auto it = name.rbegin(); it != name.rend(); ++it) {
      switch (*it) {
        case 'C': e = Expr::cone(std::move(e)); break;
        case 'I': e = Expr::prism(std::move(e)); break;
        case 'B': e = Expr::bipyramid(std::move(e)); break;
        default: e = Expr::d_op(std::move(e)); break;
      }
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace hvector
