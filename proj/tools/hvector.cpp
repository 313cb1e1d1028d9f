// Command-line front end.
//
//   hvector flag <input>      flag vector
//   hvector hvec <input>      keyed h-vector
//   hvector toric <input>     toric h-vector
//   hvector table             h-vectors of every CD-word up to --max-dim
//   hvector basis <d>         flag vectors of the degree-d CD-words
//   hvector verify            identity and golden-value suites
//
// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 resource limit
// or overflow, 4 input not in the CD span.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hvector/cd.hpp"
#include "hvector/error.hpp"
#include "hvector/expr.hpp"
#include "hvector/hcalc.hpp"
#include "hvector/lattice.hpp"
#include "hvector/record.hpp"
#include "hvector/verify.hpp"

namespace {

using namespace hvector;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kResource = 3, kNotInSpan = 4 };

struct Options {
  std::string input;
  std::string format = "text";
  int max_dim = -1;
  int degree = 0;
};

int cmd_flag(const Options& opt) {
  const Expr e = parse_expr(opt.input);
  const FlagVector f = evaluate_flag(e);
  if (opt.format == "json") {
    std::cout << to_json(make_flag_record(opt.input, f)).dump() << '\n';
  } else {
    std::cout << f.to_string();
  }
  return kOk;
}

OutputRecord evaluate_record(const std::string& input, const Expr& e) {
  return make_record(input, evaluate_flag(e), h_of_expr(e), toric_h_of_expr(e));
}

int cmd_hvec(const Options& opt) {
  const Expr e = parse_expr(opt.input);
  if (opt.format == "json") {
    std::cout << to_json(evaluate_record(opt.input, e)).dump() << '\n';
  } else {
    std::cout << h_of_expr(e).to_string() << '\n';
  }
  return kOk;
}

int cmd_toric(const Options& opt) {
  const Expr e = parse_expr(opt.input);
  const HPoly t = toric_h_of_expr(e);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["input"] = opt.input;
    j["dim"] = e.dim();
    j["toric"] = t.coeffs();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << t.to_string() << '\n';
  }
  return kOk;
}

int cmd_table(const Options& opt) {
  const int max_dim = opt.max_dim < 0 ? 10 : opt.max_dim;
  if (max_dim > 10) throw DomainError("table supports --max-dim up to 10");
  for (int d = 0; d <= max_dim; ++d) {
    for (const CDWord& w : cd_words(d)) {
      const std::string input = w.applied_to_point();
      const KeyedPoly h = h_of_word(w);
      if (opt.format == "json") {
        std::cout << to_json(make_record(input, word_flag(w), h, toric_h_of_word(w))).dump() << '\n';
      } else {
        std::cout << input << "  " << h.to_string() << '\n';
      }
    }
  }
  return kOk;
}

int cmd_basis(const Options& opt) {
  if (opt.degree < 0 || opt.degree > 12) throw DomainError("basis supports degrees 0..12");
  const IntMatrix m = basis_matrix(opt.degree);
  const auto words = cd_words(opt.degree);
  const auto sets = all_dimsets(opt.degree);
  const std::size_t r = rank(m);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["degree"] = opt.degree;
    j["rank"] = r;
    auto cols = nlohmann::ordered_json::array();
    for (DimSet s : sets) cols.push_back(s.elements());
    j["sets"] = std::move(cols);
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto row = m.row(i);
      rows.push_back({{"word", words[i].applied_to_point()},
                      {"flag", std::vector<std::int64_t>(row.begin(), row.end())}});
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "# degree " << opt.degree << ": " << words.size() << " words, " << sets.size()
            << " dimension sets, rank " << r << '\n';
  std::cout << "sets:";
  for (DimSet s : sets) std::cout << ' ' << s.to_string();
  std::cout << '\n';
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::cout << words[i].applied_to_point() << ':';
    for (std::int64_t v : m.row(i)) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  const int max_dim = opt.max_dim < 0 ? 6 : opt.max_dim;
  if (max_dim > 8) throw DomainError("verify supports --max-dim up to 8");
  bool all = true;
  for (const SuiteResult& r : run_verification(max_dim)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag vectors and complete h-vectors of polytopes"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const std::string input_help = "Expression such as B(simplex(3)) or a word such as CD(pt)";

  auto* flag = app.add_subcommand("flag", "Print the flag vector");
  flag->add_option("input", opt.input, input_help)->required();
  add_format(flag);

  auto* hvec = app.add_subcommand("hvec", "Print the keyed h-vector");
  hvec->add_option("input", opt.input, input_help)->required();
  add_format(hvec);

  auto* toric = app.add_subcommand("toric", "Print the toric h-vector");
  toric->add_option("input", opt.input, input_help)->required();
  add_format(toric);

  auto* table = app.add_subcommand("table", "h-vectors of all CD-words up to a dimension");
  table->add_option("--max-dim", opt.max_dim, "Largest dimension (default 10)")->check(CLI::Range(0, 10));
  add_format(table);

  auto* basis = app.add_subcommand("basis", "Flag vectors of the CD-words of one degree");
  basis->add_option("d", opt.degree, "Degree")->required();
  add_format(basis);

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--max-dim", opt.max_dim, "Largest dimension (default 6)")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*flag) return cmd_flag(opt);
    if (*hvec) return cmd_hvec(opt);
    if (*toric) return cmd_toric(opt);
    if (*table) return cmd_table(opt);
    if (*basis) return cmd_basis(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kResource;
  } catch (const SpanError& e) {
    std::cerr << "not in CD span: " << e.what() << '\n';
    return kNotInSpan;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
