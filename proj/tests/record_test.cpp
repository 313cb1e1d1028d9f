#include <memory>
#include <string>

#include "doctest.h"
#include "hvector/cd.hpp"
#include "hvector/corpus.hpp"
#include "hvector/error.hpp"
#include "hvector/hcalc.hpp"
#include "hvector/record.hpp"
#include "hvector/verify.hpp"
#include "oracles.hpp"

using namespace hvector;

TEST_CASE("records serialise in a fixed field order") {
  CDWord w("CD");
  FlagVector f = word_flag(w);
  OutputRecord r = make_record(w.applied_to_point(), f, h_of_word(w), toric_h_of_word(w));
  nlohmann::ordered_json j = to_json(r);
  CHECK(j.dump().rfind(R"j({"input":"CD(pt)","dim":3,"flag":[[[],0],[[0],1],)j", 0) == 0);
  CHECK(j["h"].dump() == R"([["e",[0,1,1,0]],["0;0",[1]]])");
  CHECK(j["toric"].dump() == "[0,1,1,0]");
  CHECK(matches_record_schema(nlohmann::json::parse(j.dump())));
}

TEST_CASE("property: records round-trip through JSON") {
  for (int d = 0; d <= 7; ++d) {
    for (const auto& w : cd_words(d)) {
      FlagVector f = word_flag(w);
      KeyedPoly h = h_of_word(w);
      OutputRecord r = make_record(w.applied_to_point(), f, h, toric_h_of_word(w));
      nlohmann::json parsed = nlohmann::json::parse(to_json(r).dump());
      CHECK(matches_record_schema(parsed));
      OutputRecord back = record_from_json(parsed);
      CHECK(back == r);
      CHECK(record_flag(back) == f);
      CHECK(record_h(back) == h);
    }
  }
  for (const CorpusEntry& e : expression_corpus(3)) {
    OutputRecord r = make_flag_record(e.expr.to_string(), e.flag);
    nlohmann::json parsed = nlohmann::json::parse(to_json(r).dump());
    CHECK(matches_record_schema(parsed));
    CHECK(record_from_json(parsed) == r);
  }
}

TEST_CASE("schema rejects malformed records") {
  using nlohmann::json;
  CHECK_FALSE(matches_record_schema(json::parse(R"({"input":"pt","dim":0})")));
  CHECK_FALSE(matches_record_schema(json::parse(R"({"input":1,"dim":0,"flag":[]})")));
  CHECK_FALSE(matches_record_schema(json::parse(R"({"input":"pt","dim":0,"flag":[[[],1.5]]})")));
  CHECK_FALSE(matches_record_schema(
      json::parse(R"({"input":"pt","dim":0,"flag":[[[],1]],"h":[["e",[1]]],"extra":0})")));
  CHECK_FALSE(matches_record_schema(json::parse(R"([1,2])")));
  CHECK(matches_record_schema(json::parse(R"({"input":"pt","dim":0,"flag":[[[],1]]})")));
  CHECK_THROWS_AS(record_from_json(json::parse(R"({"input":"pt"})")), DomainError);
}

TEST_CASE("golden suite passes with the real evaluator") {
  SuiteResult r = run_golden_suite(8);
  CHECK(r.passed);
  CHECK(r.checks == golden_cases().size());
}

TEST_CASE("golden suite catches a flipped bracket orientation") {
  auto rec = std::make_shared<oracle::KeyedRecursion>(true);
  HEvaluator flipped = [rec](const CDVector& v) { return rec->h(v); };
  SuiteResult r = run_golden_suite(8, flipped);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("h(CCD(pt))") != std::string::npos);
}

TEST_CASE("golden suite passes with the independent recursion") {
  auto rec = std::make_shared<oracle::KeyedRecursion>(false);
  HEvaluator plain = [rec](const CDVector& v) { return rec->h(v); };
  CHECK(run_golden_suite(8, plain).passed);
}

TEST_CASE("verification suites pass at small scale") {
  for (const SuiteResult& r : run_verification(4)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
  for (const SuiteResult& r : run_verification(0)) CHECK(r.passed);
  CHECK_THROWS_AS(run_verification(9), DomainError);
}
