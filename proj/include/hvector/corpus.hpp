#ifndef HVECTOR_CORPUS_HPP
#define HVECTOR_CORPUS_HPP

#include <vector>

#include "hvector/expr.hpp"
#include "hvector/flag.hpp"

namespace hvector {

struct CorpusEntry {
  Expr expr;
  FlagVector flag;  // chain counted on the face lattice
};

// Concrete expressions of dimension <= max_dim exercised by the
// verification suites:
//   - every word over {C, I, B} applied to pt,
//   - dual(W) for those words up to dimension 4,
//   - simplex(n), cube(n), crosspoly(n),
//   - prod(a, b) over a fixed set of small factors.
// Flags are computed once here.
std::vector<CorpusEntry> expression_corpus(int max_dim);

}  // namespace hvector

#endif  // HVECTOR_CORPUS_HPP
