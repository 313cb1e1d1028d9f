#include <vector>

#include "doctest.h"
#include "hvector/corpus.hpp"
#include "hvector/error.hpp"
#include "hvector/expr.hpp"
#include "hvector/flag.hpp"
#include "hvector/lattice.hpp"

using namespace hvector;

namespace {

FaceLattice lattice_of(const char* text) { return build_lattice(parse_expr(text)); }

std::size_t some_vertex(const FaceLattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.face(i).dim == 0) return i;
  }
  return l.size();
}

GradedFlagVector one_plus_c(const GradedFlagVector& l, std::int64_t c_coeff) {
  return l + c_on_graded(l).scaled(c_coeff);
}

}  // namespace

TEST_CASE("face lattice sizes") {
  CHECK(lattice_of("pt").size() == 2);
  CHECK(lattice_of("C(pt)").size() == 4);
  FaceLattice p = lattice_of("B(simplex(3))");
  CHECK(p.face_counts() == std::vector<std::size_t>{6, 14, 16, 8, 1});
  CHECK(lattice_of("cube(3)").face_counts() == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK(lattice_of("crosspoly(3)").face_counts() == std::vector<std::size_t>{6, 12, 8, 1});
  CHECK(lattice_of("prod(simplex(2),simplex(2))").face_counts() ==
        std::vector<std::size_t>{9, 18, 15, 6, 1});
}

TEST_CASE("face lattice limits and virtual inputs") {
  CHECK_THROWS_AS(lattice_of("cube(20)"), ResourceError);
  LatticeLimits tight;
  tight.max_faces = 10;
  CHECK_THROWS_AS(build_lattice(parse_expr("cube(3)"), tight), ResourceError);
  CHECK_THROWS_AS(lattice_of("D(pt)"), DomainError);
  CHECK_THROWS_AS(evaluate_flag(parse_expr("prod(D(pt),pt)")), DomainError);
  tight.max_faces = 1'000'000;
  tight.max_chain_faces = 20;
  FaceLattice cube = lattice_of("cube(3)");
  CHECK_THROWS_AS(chain_count_flag(cube, tight), ResourceError);
}

TEST_CASE("chain counting") {
  FlagVector seg = chain_count_flag(lattice_of("C(pt)"));
  CHECK(seg.get({}) == 1);
  CHECK(seg.get({0}) == 2);
  FlagVector cube = chain_count_flag(lattice_of("cube(3)"));
  CHECK(cube.get({0}) == 8);
  CHECK(cube.get({1}) == 12);
  CHECK(cube.get({2}) == 6);
  CHECK(cube.get({0, 1}) == 24);
  CHECK(cube.get({0, 2}) == 24);
  CHECK(cube.get({1, 2}) == 24);
  CHECK(cube.get({0, 1, 2}) == 48);
  FlagVector p = chain_count_flag(lattice_of("B(simplex(3))"));
  CHECK(p.get({0}) == 6);
  CHECK(p.get({1}) == 14);
  CHECK(p.get({2}) == 16);
  CHECK(p.get({3}) == 8);
}

TEST_CASE("links") {
  FaceLattice seg = lattice_of("C(pt)");
  CHECK(link_flag(seg, some_vertex(seg)) == FlagVector::point());
  CHECK(link_flag(seg, seg.top()) == FlagVector::empty_polytope());
  CHECK_THROWS_AS(link_flag(seg, seg.bottom()), DomainError);
  FaceLattice cube = lattice_of("cube(3)");
  CHECK(link_flag(cube, some_vertex(cube)) == evaluate_flag(parse_expr("simplex(2)")));
  FaceLattice oct = lattice_of("crosspoly(3)");
  CHECK(link_flag(oct, some_vertex(oct)) == evaluate_flag(parse_expr("cube(2)")));
}

TEST_CASE("total link vector") {
  GradedFlagVector pt = total_link_vector(lattice_of("pt"));
  CHECK(pt.components().size() == 1);
  CHECK(pt.at(-1) == FlagVector::empty_polytope());

  GradedFlagVector seg = total_link_vector(lattice_of("C(pt)"));
  CHECK(seg.components().size() == 2);
  CHECK(seg.at(-1) == FlagVector::empty_polytope());
  CHECK(seg.at(0) == FlagVector::point().scaled(2));

  GradedFlagVector tri = total_link_vector(lattice_of("simplex(2)"));
  CHECK(tri.at(-1) == FlagVector::empty_polytope());
  CHECK(tri.at(0) == FlagVector::point().scaled(3));
  CHECK(tri.at(1) == evaluate_flag(parse_expr("C(pt)")).scaled(3));
}

TEST_CASE("link identities for prisms and pyramids") {
  for (const char* text : {"pt", "C(pt)", "simplex(2)", "cube(2)", "B(simplex(2))", "cube(3)"}) {
    CAPTURE(text);
    Expr e = parse_expr(text);
    GradedFlagVector l = total_link_vector(build_lattice(e));
    GradedFlagVector li = total_link_vector(build_lattice(Expr::prism(e)));
    GradedFlagVector lc = total_link_vector(build_lattice(Expr::cone(e)));
    CHECK(li == one_plus_c(l, 2));
    GradedFlagVector f;
    f.add(evaluate_flag(e));
    CHECK(lc == one_plus_c(l, 1) + f);
  }
}

TEST_CASE("Eulerian lattices and the Euler relation") {
  for (const CorpusEntry& entry : expression_corpus(4)) {
    CAPTURE(entry.expr.to_string());
    FaceLattice l = build_lattice(entry.expr);
    CHECK(is_eulerian(l));
    std::int64_t alternating = 0;
    for (int i = 0; i < l.dim(); ++i) {
      alternating += (i % 2 == 0 ? 1 : -1) * entry.flag.get(DimSet{i});
    }
    CHECK(alternating == 1 - (l.dim() % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("operator oracle agrees with chain counting") {
  for (const CorpusEntry& entry : expression_corpus(4)) {
    const Expr& e = entry.expr;
    CAPTURE(e.to_string());
    CHECK(pyramid_flag(entry.flag) == chain_count_flag(build_lattice(Expr::cone(e))));
    CHECK(prism_flag(entry.flag) == chain_count_flag(build_lattice(Expr::prism(e))));
    CHECK(dual_flag(entry.flag) == chain_count_flag(build_lattice(Expr::dual(e))));
  }
}

TEST_CASE("FaceLattice rejects ungraded input") {
  std::vector<FaceLattice::Face> faces(2);
  faces[0].dim = -1;
  faces[1].dim = 1;  // skips a rank
  faces[0].up = {1};
  faces[1].down = {0};
  CHECK_THROWS_AS(FaceLattice(faces, 0, 1), DomainError);
}
