#include "braidcent/report.hpp"

#include "braidcent/braid_word.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"
#include "doctest.h"

using namespace braidcent;

namespace {

BraidWord W(const char* text) { return parse_braid(text); }

}  // namespace

TEST_CASE("reports carry schema, verb and verify") {
  BraidWord w = W("B4: 1 3 3");

  Json reports[] = {
      nf_report(w),
      bkl_nf_report(w),
      equal_report(W("B3: 1 2 1"), W("B3: 2 1 2")),
      conj_report(W("B3: 1"), W("B3: 2")),
      sss_report(W("B3: 1 2 1 2")),
      classify_report(W("B3: 1 2")),
      classify_report(w),
      classify_report(W("B3: 1 -2")),
      reduce_report(w),
      reduce_report(W("B3: 1 2")),
      regular_form_report(w),
      regular_form_report(W("B3: 1 -2")),
      centralizer_report(w),
      bound_report(5),
  };
  for (const Json& r : reports) {
    CAPTURE(r.dump());
    CHECK(r.at("schema").get<int>() == 1);
    CHECK(r.contains("verb"));
    CHECK(verify_report(r));
    CHECK(!render_text(r).empty());
  }
}

TEST_CASE("normal form reports expose the factorization") {
  Json r = nf_report(W("B4: 1 3 3"));
  CHECK(r.at("inf") == 0);
  CHECK(r.at("sup") == 2);
  CHECK(r.at("canonical_length") == 2);
  CHECK(r.at("factors").size() == 2);
  CHECK(nf_equal(W(r.at("word").get<std::string>().c_str()), W("B4: 1 3 3")));
}

TEST_CASE("classification reports name the class") {
  CHECK(classify_report(W("B3: 1 2")).at("class") == "periodic");
  CHECK(classify_report(W("B4: 1 3 3")).at("class") == "reducible");
  CHECK(classify_report(W("B3: 1 -2")).at("class") == "pseudo-anosov");
  Json r = classify_report(W("B5: 3 4 2 3 1 2 2 3 4 1 2 3"));
  CHECK(r.at("class") == "reducible");
  CHECK(r.at("curves") == Json::array({{1, 3}, {4, 5}}));
}

TEST_CASE("tampered reports fail verification") {
  Json eq = equal_report(W("B3: 1 2 1"), W("B3: 2 1 2"));
  eq["equal"] = false;
  CHECK(!verify_report(eq));

  Json cj = conj_report(W("B3: 1"), W("B3: 2"));
  cj["witness"] = "B3: 1";
  CHECK(!verify_report(cj));

  Json ct = centralizer_report(W("B4: 1 3 3"));
  ct["generators"][0]["word"] = "B4: 2";
  CHECK(!verify_report(ct));

  Json bd = bound_report(6);
  bd["bound"] = 7;
  CHECK(!verify_report(bd));

  Json cl = classify_report(W("B3: 1 2"));
  cl["model"] = "B3: 2 1 1 2";
  CHECK(!verify_report(cl));
}

TEST_CASE("malformed reports throw") {
  CHECK_THROWS_AS(verify_report(Json::object()), ParseError);
  Json bad;
  bad["schema"] = 1;
  bad["verb"] = "no-such-verb";
  CHECK_THROWS_AS(verify_report(bad), ParseError);
  Json noword = nf_report(W("B3: 1"));
  noword.erase("word");
  CHECK_THROWS_AS(verify_report(noword), ParseError);
}

TEST_CASE("partial flags mark exhausted budgets") {
  CHECK(!report_partial(sss_report(W("B3: 1 2 -1"))));
  ReportOptions tight;
  tight.budget = 1;
  Json r = sss_report(W("B3: 1 2 -1"), tight);
  CHECK(r.at("size").is_null());
  CHECK(report_partial(r));
  CHECK(verify_report(r));  // the representative is still certified

  CHECK(!report_partial(centralizer_report(W("B4: 1 3 3"))));
  Json err = error_report("classify", "parse", "bad letter");
  CHECK(verify_report(err));
  CHECK(!render_text(err).empty());
}

TEST_CASE("report output is deterministic") {
  BraidWord w = W("B5: 3 4 2 3 1 2 2 3 4 1 2 3");
  CHECK(centralizer_report(w).dump() == centralizer_report(w).dump());
  CHECK(regular_form_report(w).dump() == regular_form_report(w).dump());
  CHECK(sss_report(w).dump() == sss_report(w).dump());
}

TEST_CASE("printed words round-trip through the parser") {
  Json r = centralizer_report(W("B4: 1 3 3"));
  for (const Json& g : r.at("generators")) {
    BraidWord back = W(g.at("word").get<std::string>().c_str());
    CHECK(back.n == 4);
  }
  Json rf = regular_form_report(W("B5: 3 4 2 3 1 2 2 3 4 1 2 3"));
  CHECK(nf_equal(W(rf.at("tubular").get<std::string>().c_str()), W("B2: 1 1")));
}
