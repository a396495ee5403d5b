#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "braidcent/braid_word.hpp"
#include "braidcent/centralizer.hpp"
#include "braidcent/classify.hpp"

namespace braidcent {

// Machine-readable reports for every front-end verb.  Each report is a JSON
// object with a fixed field order, opening with {"schema": 1, "verb": ...},
// and carries whatever witnesses make its claims re-checkable from the
// report text alone: conjugators, generator words, normal-form factors.
// verify_report replays those checks.
using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::size_t sss_cap = 100000;
  std::size_t budget = 100000;      // conjugacy search cap
  std::size_t root_cap = 1000000;   // root-extraction node budget
};

Json nf_report(const BraidWord& w);
Json bkl_nf_report(const BraidWord& w);
Json equal_report(const BraidWord& a, const BraidWord& b);
Json conj_report(const BraidWord& a, const BraidWord& b,
                 const ReportOptions& opt = {});
Json sss_report(const BraidWord& w, const ReportOptions& opt = {});
Json classify_report(const BraidWord& w, const ReportOptions& opt = {});
Json reduce_report(const BraidWord& w, const ReportOptions& opt = {});
Json regular_form_report(const BraidWord& w, const ReportOptions& opt = {});
Json centralizer_report(const BraidWord& w, const ReportOptions& opt = {});
Json bound_report(int n);

// One-line rendering of an engine error, same shape for every verb.
Json error_report(const std::string& verb, const std::string& kind,
                  const std::string& message);

// Replays the certificate checks carried by a report; true when every check
// passes.  Throws ParseError on a malformed report.
bool verify_report(const Json& report);

// True for reports produced under an exhausted budget (partial results).
bool report_partial(const Json& report);

// Human-readable rendering of any report.
std::string render_text(const Json& report);

}  // namespace braidcent
