#include "doctest.h"
#include "json.hpp"
#include "sal/report.hpp"

using namespace sal;
using nlohmann::json;

TEST_CASE("analyze produces one verdict per battery check") {
  SteinerTripleSystem fano = construct_fano();
  AnalyzeOutcome out = analyze(fano, Rational(0));
  json j = json::parse(out.json);
  CHECK(j["schema"] == "1");
  CHECK(j["system"]["n"] == 7);
  CHECK(j["system"]["b"] == 7);
  CHECK(j["system"]["hall"] == false);
  CHECK(j["params"]["omega"] == "1/1");
  for (const std::string& name : all_check_names()) CHECK(j["verdicts"].contains(name));
  CHECK(out.failed == 0);
  // fano at beta = 0: gram = (7I - ones)/5, exact, simple
  CHECK(j["verdicts"]["killing_gram"]["status"] == "pass");
  CHECK(j["verdicts"]["exactness"]["status"] == "pass");
  CHECK(j["verdicts"]["simplicity"]["verdict"] == "simple");
  // fusion is excluded at beta = 0, miyamoto for non-Hall systems
  CHECK(j["verdicts"]["fusion_law"]["status"] == "excluded");
  CHECK(j["verdicts"]["miyamoto_group"]["status"] == "excluded");
}

TEST_CASE("analyze is byte-deterministic") {
  SteinerTripleSystem ag2 = construct_ag(2);
  AnalyzeOutcome a = analyze(ag2, Rational(1, 3));
  AnalyzeOutcome b = analyze(ag2, Rational(1, 3));
  CHECK(a.json == b.json);
}

TEST_CASE("analyze honors the check subset") {
  SteinerTripleSystem fano = construct_fano();
  AnalyzeOptions opts;
  opts.checks = {"exactness", "killing_gram"};
  json j = json::parse(analyze(fano, Rational(2), opts).json);
  CHECK(j["verdicts"].size() == 2);
}

TEST_CASE("analyze undecided counting") {
  // fano at beta = 1 is outside the simplicity theorem and non-Hall
  AnalyzeOutcome out = analyze(construct_fano(), Rational(1));
  json j = json::parse(out.json);
  CHECK(j["verdicts"]["simplicity"]["status"] == "undecided");
  CHECK(out.undecided == 1);
  CHECK(out.failed == 0);
}

TEST_CASE("sweep includes the transitional betas with flags") {
  SteinerTripleSystem fano = construct_fano();
  json j = json::parse(sweep_json(fano, {Rational(2)}));
  REQUIRE(j["rows"].size() == 8);  // requested value + seven transitional
  bool saw_neg_ratio = false, saw_one = false, saw_half = false;
  for (const auto& row : j["rows"]) {
    if (row["beta"] == "-3/2") {
      saw_neg_ratio = true;
      CHECK(row["beta_minus"] == "1/1");
      bool flagged = false;
      for (const auto& f : row["flags"])
        if (f == "beta_minus = 1") flagged = true;
      CHECK(flagged);
    }
    if (row["beta"] == "1/1") {
      saw_one = true;
      CHECK(row["beta_plus"] == "1/1");
    }
    if (row["beta"] == "7/12") {  // n/(2(n-1))
      saw_half = true;
      CHECK(row["beta_plus"] == "1/2");
    }
  }
  CHECK(saw_neg_ratio);
  CHECK(saw_one);
  CHECK(saw_half);
}

TEST_CASE("group json") {
  json j = json::parse(group_json(construct_ag(2), 1000000));
  CHECK(j["order"] == 18);
  CHECK(j["commutator_order"] == 9);
  CHECK(j["abelianization_order"] == 2);
  CHECK(j["hall"] == true);
  CHECK(j["three_transposition"]["ok"] == true);
}

TEST_CASE("catalog json covers every block") {
  json j = json::parse(catalog_json(construct_fano(), Rational(1)));
  CHECK(j["catalogs"].size() == 7);
}

TEST_CASE("validate json") {
  json j = json::parse(validate_json(construct_ag(2).base()));
  CHECK(j["n"] == 9);
  CHECK(j["sts"] == true);
  CHECK(j["hall"] == true);
  CHECK(j["r"] == 4);

  // a valid PSTS that is not an STS
  BlockSet partial = BlockSet::make(7, {{1, 2, 3}});
  json p = json::parse(validate_json(partial));
  CHECK(p["sts"] == false);
  CHECK(p["regular"] == false);
}
