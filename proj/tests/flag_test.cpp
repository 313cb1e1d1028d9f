#include <limits>
#include <vector>

#include "doctest.h"
#include "hvector/error.hpp"
#include "hvector/expr.hpp"
#include "hvector/flag.hpp"
#include "hvector/lattice.hpp"
#include "oracles.hpp"

using namespace hvector;

namespace {

FlagVector flag_of(const char* text) { return evaluate_flag(parse_expr(text)); }

FlagVector random_flag(int dim) {
  FlagVector::Entries e;
  for (DimSet s : all_dimsets(dim)) e[s] = oracle::random_int(-20, 20);
  return FlagVector(dim, e);
}

}  // namespace

TEST_CASE("DimSet construction and ordering") {
  DimSet a{0, 2};
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(a.max() == 2);
  CHECK(a.to_string() == "{0,2}");
  CHECK(DimSet{}.to_string() == "{}");
  CHECK(DimSet{} < DimSet{0});
  CHECK(DimSet{5} < DimSet{0, 1});
  CHECK(DimSet{0, 2} < DimSet{1, 2});
  std::vector<int> bad{2, 1};
  CHECK_THROWS_AS(DimSet::from_elements(bad), DomainError);
  std::vector<int> neg{-1};
  CHECK_THROWS_AS(DimSet::from_elements(neg), DomainError);
  CHECK(all_dimsets(3).size() == 8);
  CHECK(all_dimsets(0).size() == 1);
}

TEST_CASE("FlagVector validates its entries") {
  CHECK_THROWS_AS(FlagVector(1, {{DimSet{1}, 1}}), DomainError);
  CHECK_THROWS_AS(FlagVector(-2), DomainError);
  FlagVector f(2, {{DimSet{}, 1}, {DimSet{0}, 0}});
  CHECK(f.entries().size() == 1);  // zeros dropped
  CHECK(FlagVector::empty_polytope().dim() == -1);
  CHECK(FlagVector::empty_polytope().get({}) == 1);
  CHECK(FlagVector::point().get({}) == 1);
}

TEST_CASE("extended_get deletes the empty face and the top") {
  FlagVector seg = flag_of("C(pt)");
  CHECK(extended_get(seg, {0}) == 2);
  CHECK(extended_get(seg, {0, 1}) == 2);
  CHECK(extended_get(FlagVector::point(), {-1}) == 1);
  CHECK(extended_get(seg, {-1, 0, 1}) == 2);
  CHECK_THROWS_AS(extended_get(seg, {2}), DomainError);
  CHECK_THROWS_AS(extended_get(seg, {-2}), DomainError);
  CHECK_THROWS_AS(extended_get(seg, {1, 0}), DomainError);
}

TEST_CASE("linear_combine") {
  FlagVector square = flag_of("cube(2)");
  FlagVector triangle = flag_of("simplex(2)");
  std::vector<FlagTerm> diff{{1, square}, {-1, triangle}};
  FlagVector d = linear_combine(diff);
  CHECK(d.get({}) == 0);
  CHECK(d.get({0}) == 1);
  CHECK(d.get({1}) == 1);
  CHECK(d.get({0, 1}) == 2);

  std::vector<FlagTerm> zero{{0, triangle}};
  CHECK(linear_combine(zero).is_zero());
  CHECK(linear_combine(zero).dim() == 2);

  std::vector<FlagTerm> twice{{2, FlagVector::point()}};
  CHECK(linear_combine(twice).get({}) == 2);

  std::vector<FlagTerm> mixed{{1, square}, {1, FlagVector::point()}};
  CHECK_THROWS_AS(linear_combine(mixed), DimensionMismatch);
  CHECK_THROWS_AS(linear_combine(std::span<const FlagTerm>{}), DomainError);
}

TEST_CASE("checked arithmetic reports overflow") {
  FlagVector big(0, {{DimSet{}, std::numeric_limits<std::int64_t>::max()}});
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK_THROWS_AS(big.scaled(2), OverflowError);
  CHECK_THROWS_AS(big.scaled(-1) - big - big, OverflowError);
}

TEST_CASE("pyramid_flag") {
  CHECK(pyramid_flag(FlagVector::point()) == flag_of("C(pt)"));
  CHECK(pyramid_flag(FlagVector::point()).get({0}) == 2);
  FlagVector tri = pyramid_flag(flag_of("C(pt)"));
  CHECK(tri.get({0}) == 3);
  CHECK(tri.get({1}) == 3);
  CHECK(tri.get({0, 1}) == 6);
  CHECK(pyramid_flag(FlagVector::empty_polytope()) == FlagVector::point());
}

TEST_CASE("prism_flag") {
  CHECK(prism_flag(FlagVector::point()) == flag_of("C(pt)"));
  FlagVector tp = prism_flag(flag_of("simplex(2)"));
  CHECK(tp.get({0}) == 6);
  CHECK(tp.get({1}) == 9);
  CHECK(tp.get({2}) == 5);
  CHECK(tp.get({0, 1}) == 18);
  CHECK(tp.get({0, 2}) == 18);
  CHECK(tp.get({1, 2}) == 18);
  CHECK(tp.get({0, 1, 2}) == 36);
  CHECK(tp == flag_of("I(simplex(2))"));
  FlagVector sq = prism_flag(flag_of("C(pt)"));
  CHECK(sq.get({0}) == 4);
  CHECK(sq.get({1}) == 4);
  CHECK(sq.get({0, 1}) == 8);
  CHECK_THROWS_AS(prism_flag(FlagVector::empty_polytope()), DomainError);
}

TEST_CASE("d_flag") {
  FlagVector d = d_flag(FlagVector::point());
  CHECK(d.get({}) == 0);
  CHECK(d.get({0}) == 1);
  CHECK(d.get({1}) == 1);
  CHECK(d.get({0, 1}) == 2);
  FlagVector d_empty = d_flag(FlagVector::empty_polytope());
  CHECK(d_empty.dim() == 1);
  CHECK(d_empty.is_zero());
}

TEST_CASE("dual_flag") {
  CHECK(dual_flag(flag_of("simplex(3)")) == flag_of("simplex(3)"));
  FlagVector oct = dual_flag(flag_of("cube(3)"));
  CHECK(oct.get({0}) == 6);
  CHECK(oct.get({1}) == 12);
  CHECK(oct.get({2}) == 8);
  CHECK(oct.get({0, 1}) == 24);
  CHECK(oct.get({0, 2}) == 24);
  CHECK(oct.get({1, 2}) == 24);
  CHECK(oct.get({0, 1, 2}) == 48);
  CHECK(oct == flag_of("crosspoly(3)"));
  CHECK_THROWS_AS(dual_flag(FlagVector::empty_polytope()), DomainError);
}

TEST_CASE("c_on_graded") {
  GradedFlagVector l;
  l.add(FlagVector::empty_polytope());
  GradedFlagVector cl = c_on_graded(l);
  CHECK(cl.components().size() == 1);
  CHECK(cl.at(0) == FlagVector::point());

  CHECK(c_on_graded(GradedFlagVector{}) == GradedFlagVector{});

  GradedFlagVector seg;
  seg.add(FlagVector::empty_polytope());
  seg.add(FlagVector::point().scaled(2));
  GradedFlagVector cseg = c_on_graded(seg);
  CHECK(cseg.at(0) == FlagVector::point());
  CHECK(cseg.at(1) == flag_of("C(pt)").scaled(2));
  CHECK(cseg.at(2).is_zero());
}

TEST_CASE("property: operators are linear") {
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = static_cast<int>(oracle::random_int(0, 6));
    FlagVector a = random_flag(dim), b = random_flag(dim);
    const std::int64_t s = oracle::random_int(-5, 5);
    CHECK(pyramid_flag(a + b.scaled(s)) == pyramid_flag(a) + pyramid_flag(b).scaled(s));
    CHECK(prism_flag(a + b.scaled(s)) == prism_flag(a) + prism_flag(b).scaled(s));
    CHECK(d_flag(a + b.scaled(s)) == d_flag(a) + d_flag(b).scaled(s));
    CHECK(dual_flag(a + b.scaled(s)) == dual_flag(a) + dual_flag(b).scaled(s));
  }
}

TEST_CASE("property: DI = ID, dual is an involution, D = IC - CC") {
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = static_cast<int>(oracle::random_int(0, 6));
    FlagVector f = random_flag(dim);
    CHECK(d_flag(prism_flag(f)) == prism_flag(d_flag(f)));
    CHECK(dual_flag(dual_flag(f)) == f);
    CHECK(d_flag(f) == prism_flag(pyramid_flag(f)) - pyramid_flag(pyramid_flag(f)));
  }
}
