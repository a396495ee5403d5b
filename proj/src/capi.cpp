#include "braidcent.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "braidcent/centralizer.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/report.hpp"

using namespace braidcent;

struct bc_braid {
  BraidWord w;
};

namespace {

thread_local int g_error = BC_OK;
thread_local std::string g_message;

void set_error(int code, const std::string& message) {
  g_error = code;
  g_message = message;
}

int code_of(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return BC_ERR_PARSE;
  if (dynamic_cast<const StrandMismatch*>(&e)) return BC_ERR_STRANDS;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return BC_ERR_BUDGET;
  if (dynamic_cast<const InvalidArgument*>(&e)) return BC_ERR_INVALID;
  return BC_ERR_INTERNAL;
}

// Runs the body, translating engine exceptions into the thread-local error
// slot; `bad` is the failure value of the wrapped return type.
template <class T, class F>
T guarded(T bad, F&& body) {
  g_error = BC_OK;
  g_message.clear();
  try {
    return body();
  } catch (const Error& e) {
    set_error(code_of(e), e.what());
  } catch (const std::exception& e) {
    set_error(BC_ERR_INTERNAL, e.what());
  }
  return bad;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool require(const void* p) {
  if (p) return true;
  set_error(BC_ERR_INVALID, "null handle");
  return false;
}

ReportOptions options_of(const char* text) {
  ReportOptions opt;
  if (!text || !*text) return opt;
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ParseError("options must be a JSON object");
  opt.sss_cap = j.value("sss_cap", opt.sss_cap);
  opt.budget = j.value("budget", opt.budget);
  opt.root_cap = j.value("root_cap", opt.root_cap);
  return opt;
}

Json parse_report(const char* text) {
  if (!text) throw ParseError("null report");
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("report is not valid JSON");
  return j;
}

template <class F>
char* report_string(F&& build) {
  return guarded((char*)nullptr,
                 [&]() -> char* { return copy_string(build().dump()); });
}

}  // namespace

extern "C" {

int bc_last_error(void) { return g_error; }

const char* bc_last_error_message(void) { return g_message.c_str(); }

bc_braid* bc_parse(const char* text) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (!text) throw ParseError("null braid text");
    return new bc_braid{parse_braid(text)};
  });
}

bc_braid* bc_identity(int strands) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (strands < 1) throw InvalidArgument("strand count must be positive");
    return new bc_braid{BraidWord(strands)};
  });
}

bc_braid* bc_copy(const bc_braid* b) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (!require(b)) throw InvalidArgument("null handle");
    return new bc_braid{b->w};
  });
}

void bc_braid_free(bc_braid* b) { delete b; }

int bc_strands(const bc_braid* b) {
  if (!require(b)) return -1;
  g_error = BC_OK;
  return b->w.n;
}

long long bc_exponent_sum(const bc_braid* b) {
  if (!require(b)) return 0;
  g_error = BC_OK;
  return exponent_sum(b->w);
}

char* bc_format(const bc_braid* b) {
  return guarded((char*)nullptr, [&]() -> char* {
    if (!b) throw InvalidArgument("null handle");
    return copy_string(format_braid(b->w));
  });
}

void bc_string_free(char* s) { std::free(s); }

bc_braid* bc_product(const bc_braid* a, const bc_braid* b) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (!a || !b) throw InvalidArgument("null handle");
    return new bc_braid{concat(a->w, b->w)};
  });
}

bc_braid* bc_inverse(const bc_braid* a) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (!a) throw InvalidArgument("null handle");
    return new bc_braid{invert(a->w)};
  });
}

bc_braid* bc_power(const bc_braid* a, int k) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (!a) throw InvalidArgument("null handle");
    return new bc_braid{power(a->w, k)};
  });
}

bc_braid* bc_conjugate(const bc_braid* w, const bc_braid* c) {
  return guarded((bc_braid*)nullptr, [&]() -> bc_braid* {
    if (!w || !c) throw InvalidArgument("null handle");
    return new bc_braid{free_reduce(conjugate(w->w, c->w))};
  });
}

int bc_equal(const bc_braid* a, const bc_braid* b) {
  return guarded(-1, [&]() -> int {
    if (!a || !b) throw InvalidArgument("null handle");
    return nf_equal(a->w, b->w) ? 1 : 0;
  });
}

int bc_is_trivial(const bc_braid* a) {
  return guarded(-1, [&]() -> int {
    if (!a) throw InvalidArgument("null handle");
    return is_trivial(a->w) ? 1 : 0;
  });
}

int bc_commutes(const bc_braid* a, const bc_braid* b) {
  return guarded(-1, [&]() -> int {
    if (!a || !b) throw InvalidArgument("null handle");
    return commutes(a->w, b->w) ? 1 : 0;
  });
}

long long bc_centralizer_bound(int strands) {
  return guarded(-1LL, [&]() -> long long { return bound_p(strands); });
}

char* bc_nf_json(const bc_braid* w) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return nf_report(w->w);
  });
}

char* bc_bkl_nf_json(const bc_braid* w) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return bkl_nf_report(w->w);
  });
}

char* bc_equal_json(const bc_braid* a, const bc_braid* b) {
  return report_string([&] {
    if (!a || !b) throw InvalidArgument("null handle");
    return equal_report(a->w, b->w);
  });
}

char* bc_conj_json(const bc_braid* a, const bc_braid* b, const char* options) {
  return report_string([&] {
    if (!a || !b) throw InvalidArgument("null handle");
    return conj_report(a->w, b->w, options_of(options));
  });
}

char* bc_sss_json(const bc_braid* w, const char* options) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return sss_report(w->w, options_of(options));
  });
}

char* bc_classify_json(const bc_braid* w, const char* options) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return classify_report(w->w, options_of(options));
  });
}

char* bc_reduce_json(const bc_braid* w, const char* options) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return reduce_report(w->w, options_of(options));
  });
}

char* bc_regular_form_json(const bc_braid* w, const char* options) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return regular_form_report(w->w, options_of(options));
  });
}

char* bc_centralizer_json(const bc_braid* w, const char* options) {
  return report_string([&] {
    if (!w) throw InvalidArgument("null handle");
    return centralizer_report(w->w, options_of(options));
  });
}

char* bc_bound_json(int strands) {
  return report_string([&] { return bound_report(strands); });
}

char* bc_render_text(const char* report_json) {
  return guarded((char*)nullptr, [&]() -> char* {
    return copy_string(render_text(parse_report(report_json)));
  });
}

int bc_verify_report(const char* report_json) {
  return guarded(-1, [&]() -> int {
    return verify_report(parse_report(report_json)) ? 1 : 0;
  });
}

int bc_report_partial(const char* report_json) {
  return guarded(-1, [&]() -> int {
    return report_partial(parse_report(report_json)) ? 1 : 0;
  });
}

}  // extern "C"
