#ifndef HVECTOR_VERIFY_HPP
#define HVECTOR_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "hvector/cd.hpp"
#include "hvector/hpoly.hpp"

namespace hvector {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first counterexample, or a summary
};

// A worked value that h must reproduce exactly.
struct GoldenCase {
  std::string name;
  CDVector input;  // CD coordinates of the polytope or virtual polytope
  KeyedPoly expected;
};

// Golden values for every worked example, including the bipyramid over
// the 3-simplex and C(I(C(C(pt)))).
std::vector<GoldenCase> golden_cases();

using HEvaluator = std::function<KeyedPoly(const CDVector&)>;

// Golden cases of dimension <= max_dim evaluated with `h` (h_of_vector by
// default).  On failure the detail names every failing case.
SuiteResult run_golden_suite(int max_dim, const HEvaluator& h = {});

// Every suite at the given scale (0 <= max_dim <= 8), in a fixed order:
// golden values, flag oracle, link identities, h properties, operator
// identities, basis rank, h unimodularity, completeness round trip, route
// independence, product law, sign proposition.
std::vector<SuiteResult> run_verification(int max_dim);

}  // namespace hvector

#endif  // HVECTOR_VERIFY_HPP
