#ifndef HVECTOR_EXPR_HPP
#define HVECTOR_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hvector {

enum class ExprKind {
  Point,
  Cone,           // C(e), pyramid
  Prism,          // I(e)
  Bipyramid,      // B(e) = dual(prism(dual(e)))
  Dual,
  Product,
  Simplex,        // simplex(n) = C^n(pt)
  Cube,           // cube(n) = I^(n-1)(C(pt))
  CrossPolytope,  // crosspoly(n) = dual(cube(n))
  DOperator,      // D(e) = I(C(e)) - C(C(e)); virtual, has no face lattice
};

// Immutable polytope expression tree.
//
// Grammar (case-sensitive, whitespace-insensitive):
//   e := pt | C(e) | I(e) | B(e) | D(e) | dual(e) | prod(e,e)
//      | simplex(n) | cube(n) | crosspoly(n) | W(e)
// where W is a word over {C, I, B, D}: CIC(pt) is C(I(C(pt))).
class Expr {
 public:
  static Expr point();
  static Expr cone(Expr e);
  static Expr prism(Expr e);
  static Expr bipyramid(Expr e);
  static Expr dual(Expr e);
  static Expr product(Expr a, Expr b);
  static Expr simplex(int n);
  static Expr cube(int n);
  static Expr crosspoly(int n);
  static Expr d_op(Expr e);

  ExprKind kind() const { return node_->kind; }
  int size_arg() const { return node_->n; }
  const Expr& child(std::size_t i = 0) const { return node_->children.at(i); }
  std::size_t child_count() const { return node_->children.size(); }

  int dim() const { return node_->dim; }
  // True when D occurs anywhere; such expressions only have flag vectors.
  bool is_virtual() const { return node_->is_virtual; }

  // Letters of the word when the expression is a chain of C, I and D
  // nodes ending at pt ("CID" for C(I(D(pt))), "" for pt).
  std::optional<std::string> as_word() const;

  // Fully bracketed canonical spelling, e.g. "C(I(pt))".
  std::string to_string() const;

 private:
  struct Node {
    ExprKind kind;
    int n = 0;
    int dim = 0;
    bool is_virtual = false;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(ExprKind kind, int n, std::vector<Expr> children);

  std::shared_ptr<const Node> node_;
};

// Throws ParseError carrying the 0-based position of the offending input.
Expr parse_expr(std::string_view text);

}  // namespace hvector

#endif  // HVECTOR_EXPR_HPP
