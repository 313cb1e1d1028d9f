#include "hvector/corpus.hpp"

#include "hvector/lattice.hpp"

namespace hvector {

namespace {

void words_over_cib(int remaining, const Expr& inner, std::vector<Expr>& out) {
  out.push_back(inner);
  if (remaining == 0) return;
  words_over_cib(remaining - 1, Expr::cone(inner), out);
  words_over_cib(remaining - 1, Expr::prism(inner), out);
  words_over_cib(remaining - 1, Expr::bipyramid(inner), out);
}

}  // namespace

std::vector<CorpusEntry> expression_corpus(int max_dim) {
  std::vector<Expr> exprs;
  if (max_dim >= 0) words_over_cib(max_dim, Expr::point(), exprs);

  std::vector<Expr> words = exprs;
  for (const Expr& w : words) {
    if (w.dim() >= 2 && w.dim() <= 4) exprs.push_back(Expr::dual(w));
  }
  for (int n = 1; n <= max_dim; ++n) {
    exprs.push_back(Expr::simplex(n));
    if (n >= 2) {
      exprs.push_back(Expr::cube(n));
      exprs.push_back(Expr::crosspoly(n));
    }
  }

  const std::vector<Expr> factors = {
      parse_expr("C(pt)"),        parse_expr("CC(pt)"),       parse_expr("I(C(pt))"),
      parse_expr("B(CC(pt))"),    parse_expr("CCC(pt)"),      parse_expr("cube(3)"),
      parse_expr("crosspoly(3)"), parse_expr("B(simplex(3))"), parse_expr("CIC(pt)"),
  };
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a; b < factors.size(); ++b) {
      if (factors[a].dim() + factors[b].dim() <= max_dim) {
        exprs.push_back(Expr::product(factors[a], factors[b]));
      }
    }
  }

  std::vector<CorpusEntry> out;
  out.reserve(exprs.size());
  for (const Expr& e : exprs) out.push_back({e, chain_count_flag(build_lattice(e))});
  return out;
}

}  // namespace hvector
