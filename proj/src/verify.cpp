#include "hvector/verify.hpp"

#include <exception>
#include <map>
#include <sstream>

#include "hvector/corpus.hpp"
#include "hvector/error.hpp"
#include "hvector/hcalc.hpp"
#include "hvector/lattice.hpp"

namespace hvector {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  void fail(const std::string& detail) {
    if (result_.passed) {
      result_.passed = false;
      result_.detail = detail;
    }
  }

  bool failed() const { return !result_.passed; }
  void note(const std::string& text) { note_ = text; }

  SuiteResult finish() {
    if (result_.passed) result_.detail = std::to_string(result_.checks) + " checks" + note_;
    return result_;
  }

 private:
  SuiteResult result_;
  std::string note_;
};

// Runs body, turning an escaping exception into a failure.
template <typename Body>
SuiteResult run_suite(const std::string& name, Body&& body) {
  Suite suite(name);
  try {
    body(suite);
  } catch (const std::exception& ex) {
    suite.fail(std::string("exception: ") + ex.what());
  }
  return suite.finish();
}

KeyedPoly keyed(int dim, std::initializer_list<std::pair<const char*, std::vector<std::int64_t>>> terms) {
  KeyedPoly out(dim);
  for (const auto& [key, coeffs] : terms) out.add(Key::parse(key), HPoly(coeffs));
  return out;
}

CDVector cd(int degree, std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  CDVector out(degree);
  for (const auto& [w, c] : terms) out.add(CDWord(w), c);
  return out;
}

std::vector<CDWord> words_up_to(int max_degree) {
  std::vector<CDWord> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& w : cd_words(d)) out.push_back(std::move(w));
  }
  return out;
}

std::string word_name(const CDWord& w) { return w.applied_to_point(); }

// Flag vector of a corpus child, reusing the corpus when possible.
FlagVector child_flag(const Expr& e, const std::map<std::string, FlagVector>& known) {
  if (auto it = known.find(e.to_string()); it != known.end()) return it->second;
  return chain_count_flag(build_lattice(e));
}

SuiteResult flag_oracle_suite(const std::vector<CorpusEntry>& corpus, int max_dim) {
  return run_suite("flag operators vs lattice chain counting", [&](Suite& s) {
    std::map<std::string, FlagVector> known;
    for (const auto& entry : corpus) known.emplace(entry.expr.to_string(), entry.flag);
    for (const auto& [e, f] : corpus) {
      if (e.dim() > max_dim) continue;
      const int d = e.dim();
      std::int64_t euler = 0;
      for (int i = 0; i < d; ++i) euler += (i % 2 == 0 ? 1 : -1) * f.get(DimSet{i});
      s.check(euler == 1 - (d % 2 == 0 ? 1 : -1),
              [&] { return "Euler relation fails for " + e.to_string(); });
      FlagVector predicted = f;
      switch (e.kind()) {
        case ExprKind::Cone: predicted = pyramid_flag(child_flag(e.child(), known)); break;
        case ExprKind::Prism: predicted = prism_flag(child_flag(e.child(), known)); break;
        case ExprKind::Bipyramid:
          predicted = dual_flag(prism_flag(dual_flag(child_flag(e.child(), known))));
          break;
        case ExprKind::Dual: predicted = dual_flag(child_flag(e.child(), known)); break;
        default: break;
      }
      s.check(predicted == f, [&] {
        return "flag operator disagrees with chain counting on " + e.to_string() +
               "\nlattice:\n" + f.to_string() + "operator:\n" + predicted.to_string();
      });
      if (d <= 5) {
        s.check(is_eulerian(build_lattice(e)),
                [&] { return "lattice of " + e.to_string() + " is not Eulerian"; });
      }
    }
  });
}

SuiteResult link_suite(const std::vector<CorpusEntry>& corpus, int max_dim) {
  return run_suite("total link vector identities", [&](Suite& s) {
    for (const auto& [e, f] : corpus) {
      if (e.dim() + 1 > std::min(max_dim, 6)) continue;
      const GradedFlagVector ell = total_link_vector(build_lattice(e));
      const GradedFlagVector c_ell = c_on_graded(ell);
      const GradedFlagVector ell_prism = total_link_vector(build_lattice(Expr::prism(e)));
      s.check(ell_prism == ell + c_ell.scaled(2),
              [&] { return "l(I D) != (1 + 2C) l(D) for D = " + e.to_string(); });
      GradedFlagVector expected_cone = ell + c_ell;
      expected_cone.add(f);
      const GradedFlagVector ell_cone = total_link_vector(build_lattice(Expr::cone(e)));
      s.check(ell_cone == expected_cone,
              [&] { return "l(C D) != (1 + C) l(D) + f(D) for D = " + e.to_string(); });
    }
  });
}

SuiteResult h_property_suite(int max_dim) {
  return run_suite("palindromic, keyed degree, toric agreement", [&](Suite& s) {
    for (const CDWord& w : words_up_to(max_dim)) {
      const KeyedPoly h = h_of_word(w);
      s.check(h.is_palindromic(), [&] { return "h(" + word_name(w) + ") not palindromic"; });
      for (const auto& [k, p] : h.terms()) {
        s.check(p.degree() + k.degree() == w.degree(), [&] {
          return "deg h_k + deg k != dim for key " + k.to_string() + " of " + word_name(w);
        });
      }
      s.check(h.component(Key()) == toric_h_of_word(w), [&] {
        return "h_e(" + word_name(w) + ") = " + h.component(Key()).to_string() +
               " but toric h = " + toric_h_of_word(w).to_string();
      });
    }
  });
}

SuiteResult operator_suite(int max_dim) {
  return run_suite("DI = ID, I expansion, prism law, g from h, CC and CD laws", [&](Suite& s) {
    const HPoly x_plus_y(std::vector<std::int64_t>{1, 1});
    for (const CDWord& w : words_up_to(max_dim)) {
      const FlagVector f = word_flag(w);
      s.check(d_flag(prism_flag(f)) == prism_flag(d_flag(f)),
              [&] { return "DI != ID on " + word_name(w); });
      const CDVector iw = expand_I(CDVector::unit(w));
      s.check(vector_flag(iw) == prism_flag(f),
              [&] { return "expand_I(" + word_name(w) + ") = " + iw.to_string() + " disagrees with prism_flag"; });
      s.check(h_of_vector(iw) == h_of_word(w).times(x_plus_y),
              [&] { return "h(I " + word_name(w) + ") != (x + y) h"; });
      s.check(g_of_word(w) == h_of_word(w.prepend('C')) - h_of_word(w).times(HPoly::x()),
              [&] { return "g(" + word_name(w) + ") != h(C w) - x h(w)"; });

      // h(CCv) from h(Cv): every <i,j> w_k becomes <i,j+1> w_k.
      const KeyedPoly hc = h_of_word(w.prepend('C'));
      KeyedPoly hcc(hc.dim() + 1);
      for (const auto& [k, p] : hc.terms()) {
        for (const AngleTerm& t : palindromic_decompose(p)) hcc.add(k, angle(t.i, t.j + 1).scaled(t.coeff));
      }
      s.check(hcc == h_of_word(w.prepend('C').prepend('C')),
              [&] { return "CC law fails for v = " + word_name(w); });

      // h(CDv) from h(v): <i,j> w_k becomes <i+1,j+1> w_k + w_k'.
      const KeyedPoly hv = h_of_word(w);
      KeyedPoly hcd(hv.dim() + 3);
      for (const auto& [k, p] : hv.terms()) {
        for (const AngleTerm& t : palindromic_decompose(p)) {
          hcd.add(k, angle(t.i + 1, t.j + 1).scaled(t.coeff));
          hcd.add(key_prime(t.i, t.j, k), HPoly::one().scaled(t.coeff));
        }
      }
      s.check(hcd == h_of_word(w.prepend('D').prepend('C')),
              [&] { return "CD law fails for v = " + word_name(w); });
    }
  });
}

SuiteResult rank_suite(int max_dim) {
  return run_suite("CD basis rank", [&](Suite& s) {
    for (int d = 0; d <= max_dim; ++d) {
      const IntMatrix m = basis_matrix(d);
      const auto r = rank(m);
      s.check(m.rows() == cd_word_count(d) && r == cd_word_count(d), [&] {
        return "degree " + std::to_string(d) + ": rank " + std::to_string(r) + ", expected " +
               std::to_string(cd_word_count(d));
      });
    }
  });
}

SuiteResult unimodular_suite(int max_dim) {
  return run_suite("h matrix unimodular", [&](Suite& s) {
    std::string triangular;
    for (int d = 0; d <= max_dim; ++d) {
      const IntMatrix m = h_matrix(d);
      const BigInt det = determinant(m);
      s.check(det == 1 || det == -1, [&] {
        return "det h_matrix(" + std::to_string(d) + ") = " + det.str();
      });
      if (!is_unitriangular_up_to_permutation(m)) triangular += " " + std::to_string(d);
    }
    s.note(triangular.empty() ? "; unitriangular up to permutation at every degree"
                              : "; not unitriangular up to permutation at degree" + triangular);
  });
}

SuiteResult round_trip_suite(const std::vector<CorpusEntry>& corpus, int max_dim) {
  return run_suite("completeness round trip", [&](Suite& s) {
    for (const CDWord& w : words_up_to(max_dim)) {
      const FlagVector f = word_flag(w);
      s.check(to_cd_basis(f) == CDVector::unit(w),
              [&] { return "to_cd_basis(word_flag(" + word_name(w) + ")) is not a unit vector"; });
      s.check(flag_from_h(h_of_word(w)) == f,
              [&] { return "flag_from_h(h(" + word_name(w) + ")) != word_flag"; });
    }
    for (const auto& [e, f] : corpus) {
      if (e.dim() > max_dim) continue;
      s.check(flag_from_h(h_of_flag(f)) == f,
              [&] { return "flag_from_h(h(" + e.to_string() + ")) != f"; });
    }
  });
}

SuiteResult route_suite(const std::vector<CorpusEntry>& corpus, int max_dim) {
  return run_suite("link-sum route vs CD route", [&](Suite& s) {
    for (const auto& [e, f] : corpus) {
      if (e.dim() > std::min(max_dim, 5)) continue;
      const KeyedPoly via_cd = h_of_flag(f);
      const KeyedPoly via_links = h_via_links(e);
      s.check(via_links == via_cd, [&] {
        return e.to_string() + ": links give " + via_links.to_string() + ", CD basis gives " +
               via_cd.to_string();
      });
    }
    for (int n = 1; n <= std::min(max_dim, 4); ++n) {
      const Expr cube = Expr::cube(n);
      const FlagVector f = chain_count_flag(build_lattice(cube));
      s.check(KeyedPoly::plain(simple_h(f)) == h_of_flag(f),
              [&] { return "simple polytope formula fails on " + cube.to_string(); });
    }
  });
}

SuiteResult product_suite(int max_dim) {
  return run_suite("product law with a simple factor", [&](Suite& s) {
    const std::vector<Expr> simple = {parse_expr("C(pt)"), Expr::cube(2), Expr::cube(3),
                                      Expr::simplex(2)};
    const std::vector<Expr> other = {Expr::simplex(3), parse_expr("B(simplex(2))")};
    for (const Expr& a : simple) {
      for (const Expr& b : other) {
        if (a.dim() + b.dim() > max_dim) continue;
        const KeyedPoly ha = h_of_polytope(a);
        s.check(ha.has_only_empty_key(),
                [&] { return "simple factor " + a.to_string() + " has a keyed component"; });
        const KeyedPoly lhs = h_of_polytope(Expr::product(a, b));
        const KeyedPoly rhs = ha * h_of_polytope(b);
        s.check(lhs == rhs, [&] {
          return "h(" + a.to_string() + " x " + b.to_string() + ") = " + lhs.to_string() +
                 ", product of factors = " + rhs.to_string();
        });
      }
    }
  });
}

SuiteResult sign_suite(int max_dim) {
  return run_suite("negative coefficient sign check", [&](Suite& s) {
    if (max_dim < 4) return;
    const Key key = Key::parse("0;1");
    const HPoly a = h_of_polytope(parse_expr("B(simplex(3))")).component(key);
    const HPoly b = h_of_polytope(parse_expr("C(I(C(C(pt))))")).component(key);
    s.check(a == HPoly(std::vector<std::int64_t>{-4}),
            [&] { return "h_0;1(B(simplex(3))) = " + a.to_string() + ", expected [-4]"; });
    s.check(b == HPoly(std::vector<std::int64_t>{1}),
            [&] { return "h_0;1(C(I(C(C(pt))))) = " + b.to_string() + ", expected [1]"; });
    s.check(a.coeff(0) * b.coeff(0) < 0, [] { return "coefficients do not have opposite signs"; });
  });
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  out.push_back({"h(pt)", cd(0, {{"", 1}}), keyed(0, {{"e", {1}}})});
  out.push_back({"h(CD(pt))", cd(3, {{"CD", 1}}), keyed(3, {{"e", {0, 1, 1, 0}}, {"0;0", {1}}})});
  out.push_back({"h(DC(pt))", cd(3, {{"DC", 1}}), keyed(3, {{"e", {0, 1, 1, 0}}})});
  out.push_back({"h(CCD(pt))", cd(4, {{"CCD", 1}}),
                 keyed(4, {{"e", {0, 1, 1, 1, 0}}, {"0;0", {1, 1}}})});
  out.push_back({"h(CDC(pt))", cd(4, {{"CDC", 1}}),
                 keyed(4, {{"e", {0, 1, 1, 1, 0}}, {"0;1", {1}}})});
  out.push_back({"h(C(CD - DC)(pt))", cd(4, {{"CCD", 1}, {"CDC", -1}}),
                 keyed(4, {{"0;0", {1, 1}}, {"0;1", {-1}}})});
  // Key e is the toric h-vector, that of the dual prism over a tetrahedron.
  out.push_back({"h(B(simplex(3)))", to_cd_basis(chain_count_flag(build_lattice(parse_expr("B(simplex(3))")))),
                 keyed(4, {{"e", {1, 4, 4, 4, 1}}, {"0;0", {6, 6}}, {"0;1", {-4}}})});
  out.push_back({"h(C(I(C(C(pt)))))", to_cd_basis(chain_count_flag(build_lattice(parse_expr("C(I(C(C(pt))))")))),
                 keyed(4, {{"e", {1, 2, 2, 2, 1}}, {"0;1", {1}}})});
  return out;
}

SuiteResult run_golden_suite(int max_dim, const HEvaluator& h) {
  const HEvaluator eval = h ? h : HEvaluator([](const CDVector& v) { return h_of_vector(v); });
  Suite suite("golden values");
  std::string failures;
  for (const GoldenCase& g : golden_cases()) {
    if (g.input.degree() > max_dim) continue;
    std::string actual;
    bool ok = false;
    try {
      const KeyedPoly value = eval(g.input);
      ok = value == g.expected;
      actual = value.to_string();
    } catch (const std::exception& ex) {
      actual = std::string("exception: ") + ex.what();
    }
    suite.check(ok, [] { return std::string(); });
    if (!ok) {
      failures += (failures.empty() ? "" : "; ") + g.name + " = " + actual + ", expected " +
                  g.expected.to_string();
    }
  }
  if (!failures.empty()) suite.fail(failures);
  SuiteResult r = suite.finish();
  if (!r.passed) r.detail = failures;
  return r;
}

std::vector<SuiteResult> run_verification(int max_dim) {
  if (max_dim < 0 || max_dim > 8) throw DomainError("verify supports max_dim in 0..8");
  std::vector<SuiteResult> out;
  out.push_back(run_golden_suite(max_dim));
  std::vector<CorpusEntry> corpus;
  try {
    // Lattice-based suites stop at dimension 6.
    corpus = expression_corpus(std::min(max_dim, 6));
  } catch (const std::exception& ex) {
    out.push_back({"expression corpus", false, 0, ex.what()});
    return out;
  }
  out.push_back(flag_oracle_suite(corpus, max_dim));
  out.push_back(link_suite(corpus, max_dim));
  out.push_back(h_property_suite(max_dim));
  out.push_back(operator_suite(max_dim));
  out.push_back(rank_suite(max_dim));
  out.push_back(unimodular_suite(max_dim));
  out.push_back(round_trip_suite(corpus, max_dim));
  out.push_back(route_suite(corpus, max_dim));
  out.push_back(product_suite(max_dim));
  out.push_back(sign_suite(max_dim));
  return out;
}

}  // namespace hvector
