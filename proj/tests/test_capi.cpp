#include "braidcent.h"

#include <cstring>
#include <string>

#include "doctest.h"

namespace {

// Owns a braid handle for the scope of a check.
struct B {
  bc_braid* p;
  explicit B(const char* text) : p(bc_parse(text)) {}
  explicit B(bc_braid* raw) : p(raw) {}
  ~B() { bc_braid_free(p); }
  B(const B&) = delete;
  B& operator=(const B&) = delete;
  operator const bc_braid*() const { return p; }
};

// Copies and frees a library string.
std::string S(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  bc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("braid handles parse, format and compose") {
  B a("B3: 1 2 1");
  REQUIRE(a.p != nullptr);
  CHECK(bc_strands(a) == 3);
  CHECK(bc_exponent_sum(a) == 3);
  CHECK(S(bc_format(a)) == "B3: 1 2 1");

  B b("B3: 2 1 2");
  CHECK(bc_equal(a, b) == 1);
  B c("B3: 2 1 1");
  CHECK(bc_equal(a, c) == 0);
}

TEST_CASE("products, inverses, powers and conjugates") {
  B a("B3: 1 2");
  B ia(bc_inverse(a));
  B prod(bc_product(a, ia));
  CHECK(bc_is_trivial(prod) == 1);

  B cube(bc_power(a, 3));
  B delta2("B3: 1 2 1 1 2 1");
  CHECK(bc_equal(cube, delta2) == 1);

  B neg(bc_power(a, -1));
  CHECK(bc_equal(neg, ia) == 1);

  B s1("B3: 1");
  B conj(bc_conjugate(s1, ia));  // delta s1 delta^-1 = s2
  B s2("B3: 2");
  CHECK(bc_equal(conj, s2) == 1);
  CHECK(bc_commutes(delta2, s1) == 1);
  CHECK(bc_commutes(s1, s2) == 0);

  B id(bc_identity(4));
  CHECK(bc_strands(id) == 4);
  CHECK(bc_is_trivial(id) == 1);
}

TEST_CASE("failures set the thread error slot") {
  CHECK(bc_parse("B3: bogus") == nullptr);
  CHECK(bc_last_error() == BC_ERR_PARSE);
  CHECK(std::strlen(bc_last_error_message()) > 0);

  B a("B3: 1");
  B b("B4: 1");
  CHECK(bc_last_error() == BC_OK);
  CHECK(bc_equal(a, b) < 0);
  CHECK(bc_last_error() == BC_ERR_STRANDS);

  CHECK(bc_identity(0) == nullptr);
  CHECK(bc_last_error() == BC_ERR_INVALID);
  CHECK(bc_centralizer_bound(0) < 0);
  CHECK(bc_last_error() == BC_ERR_INVALID);

  CHECK(bc_equal(nullptr, a) < 0);
  CHECK(bc_format(nullptr) == nullptr);
  bc_braid_free(nullptr);    // harmless
  bc_string_free(nullptr);   // harmless

  // A successful call clears the slot.
  CHECK(bc_strands(a) == 3);
  CHECK(bc_last_error() == BC_OK);
}

TEST_CASE("centralizer bound matches the closed form") {
  CHECK(bc_centralizer_bound(1) == 0);
  CHECK(bc_centralizer_bound(2) == 1);
  CHECK(bc_centralizer_bound(4) == 3);
  CHECK(bc_centralizer_bound(5) == 5);
  CHECK(bc_centralizer_bound(6) == 6);
  CHECK(bc_centralizer_bound(7) == 9);
}

TEST_CASE("reports verify and render through the C surface") {
  B w("B4: 1 3 3");
  std::string cent = S(bc_centralizer_json(w, nullptr));
  CHECK(cent.find("\"schema\":1") != std::string::npos);
  CHECK(cent.find("interior(1)") != std::string::npos);
  CHECK(bc_verify_report(cent.c_str()) == 1);
  CHECK(bc_report_partial(cent.c_str()) == 0);
  std::string human = S(bc_render_text(cent.c_str()));
  CHECK(human.find("3 generators") != std::string::npos);

  std::string nf = S(bc_nf_json(w));
  CHECK(bc_verify_report(nf.c_str()) == 1);
  std::string bkl = S(bc_bkl_nf_json(w));
  CHECK(bc_verify_report(bkl.c_str()) == 1);

  B l("B3: 1 2 1");
  B r("B3: 2 1 2");
  std::string eq = S(bc_equal_json(l, r));
  CHECK(eq.find("\"equal\":true") != std::string::npos);
  CHECK(bc_verify_report(eq.c_str()) == 1);

  std::string cls = S(bc_classify_json(w, nullptr));
  CHECK(cls.find("reducible") != std::string::npos);
  CHECK(bc_verify_report(cls.c_str()) == 1);
  std::string reg = S(bc_regular_form_json(w, nullptr));
  CHECK(bc_verify_report(reg.c_str()) == 1);
  std::string red = S(bc_reduce_json(w, nullptr));
  CHECK(bc_verify_report(red.c_str()) == 1);
  std::string bnd = S(bc_bound_json(4));
  CHECK(bc_verify_report(bnd.c_str()) == 1);

  B u("B3: 1");
  B v("B3: 2");
  std::string conj = S(bc_conj_json(u, v, nullptr));
  CHECK(conj.find("\"conjugate\":true") != std::string::npos);
  CHECK(bc_verify_report(conj.c_str()) == 1);
}

TEST_CASE("options strings steer the budgets") {
  B w("B3: 1 2 -1");
  std::string full = S(bc_sss_json(w, nullptr));
  CHECK(bc_report_partial(full.c_str()) == 0);
  std::string tight = S(bc_sss_json(w, "{\"budget\": 1}"));
  CHECK(bc_report_partial(tight.c_str()) == 1);
  CHECK(bc_verify_report(tight.c_str()) == 1);

  CHECK(bc_sss_json(w, "not json") == nullptr);
  CHECK(bc_last_error() == BC_ERR_PARSE);
}

TEST_CASE("tampered or malformed reports are rejected") {
  B w("B4: 1 3 3");
  std::string cent = S(bc_centralizer_json(w, nullptr));
  std::string tampered = cent;
  std::size_t pos = tampered.find("\"B4: 1\"");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 7, "\"B4: 2\"");
  CHECK(bc_verify_report(tampered.c_str()) == 0);

  CHECK(bc_verify_report("{\"schema\": 2}") < 0);
  CHECK(bc_verify_report("nonsense") < 0);
  CHECK(bc_last_error() == BC_ERR_PARSE);
  CHECK(bc_render_text("nonsense") == nullptr);
  CHECK(bc_report_partial("nonsense") < 0);
}
