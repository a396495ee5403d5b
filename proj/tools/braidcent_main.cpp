// Command-line front end.  Every engine call goes through the C API in
// braidcent.h; this file only parses arguments, shuttles strings, and maps
// failures to exit codes: 0 success, 2 exhausted search budget (partial
// reports), 1 bad input.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "braidcent.h"

namespace {

struct Options {
  bool json = false;
  long long sss_cap = 100000;
  long long budget = 100000;
  long long root_cap = 1000000;

  std::string to_json() const {
    return "{\"sss_cap\": " + std::to_string(sss_cap) +
           ", \"budget\": " + std::to_string(budget) +
           ", \"root_cap\": " + std::to_string(root_cap) + "}";
  }
};

int g_exit = 0;

// Input errors dominate budget exhaustion dominates success.
void note(int code) {
  if (code == 1)
    g_exit = 1;
  else if (code == 2 && g_exit == 0)
    g_exit = 2;
}

void fail(const char* verb) {
  std::fprintf(stderr, "%s: %s\n", verb, bc_last_error_message());
  note(bc_last_error() == BC_ERR_BUDGET ? 2 : 1);
}

void emit(const char* report, const Options& opt) {
  if (bc_report_partial(report) == 1) note(2);
  if (opt.json) {
    std::fputs(report, stdout);
    std::fputc('\n', stdout);
  } else {
    char* text = bc_render_text(report);
    if (!text) return fail("render");
    std::fputs(text, stdout);
    bc_string_free(text);
  }
}

using ReportFn = char* (*)(const bc_braid*, const char* options);

void run_word(const std::string& word, ReportFn fn, const char* verb,
              const Options& opt) {
  bc_braid* b = bc_parse(word.c_str());
  if (!b) return fail(verb);
  char* report = fn(b, opt.to_json().c_str());
  bc_braid_free(b);
  if (!report) return fail(verb);
  emit(report, opt);
  bc_string_free(report);
}

// One braid per verb invocation, or one per stdin line in batch mode.
void run_batchable(const std::string& word, ReportFn fn, const char* verb,
                   const Options& opt) {
  if (!word.empty()) return run_word(word, fn, verb, opt);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    run_word(line, fn, verb, opt);
  }
}

using PairFn = char* (*)(const bc_braid*, const bc_braid*, const char*);

void run_pair(const std::string& left, const std::string& right, PairFn fn,
              const char* verb, const Options& opt) {
  bc_braid* a = bc_parse(left.c_str());
  if (!a) return fail(verb);
  bc_braid* b = bc_parse(right.c_str());
  if (!b) {
    bc_braid_free(a);
    return fail(verb);
  }
  char* report = fn(a, b, opt.to_json().c_str());
  bc_braid_free(a);
  bc_braid_free(b);
  if (!report) return fail(verb);
  emit(report, opt);
  bc_string_free(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification and centralizer engine for braid groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit reports as JSON lines");
  app.add_option("--sss-cap", opt.sss_cap, "super summit set size cap");
  app.add_option("--budget", opt.budget, "conjugacy search element budget");
  app.add_option("--root-cap", opt.root_cap, "root search node budget");

  std::string w1, w2;
  int strands = 0;

  CLI::App* nf = app.add_subcommand("nf", "left-greedy normal form");
  nf->add_option("word", w1, "braid word; batch over stdin lines when absent");
  CLI::App* bkl = app.add_subcommand("bkl-nf", "band-generator normal form");
  bkl->add_option("word", w1, "braid word; batch over stdin lines when absent");
  CLI::App* eq = app.add_subcommand("equal", "decide equality of two braids");
  eq->add_option("left", w1, "braid word")->required();
  eq->add_option("right", w2, "braid word")->required();
  CLI::App* conj = app.add_subcommand("conj", "conjugacy with witness");
  conj->add_option("left", w1, "braid word")->required();
  conj->add_option("right", w2, "braid word")->required();
  CLI::App* sss = app.add_subcommand("sss", "super summit invariants");
  sss->add_option("word", w1, "braid word; batch over stdin lines when absent");
  CLI::App* cls = app.add_subcommand("classify",
                                     "periodic / reducible / pseudo-Anosov");
  cls->add_option("word", w1, "braid word; batch over stdin lines when absent");
  CLI::App* red = app.add_subcommand("reduce", "invariant reduction curves");
  red->add_option("word", w1, "braid word; batch over stdin lines when absent");
  CLI::App* reg = app.add_subcommand("regular-form",
                                     "tubular decomposition in regular form");
  reg->add_option("word", w1, "braid word; batch over stdin lines when absent");
  CLI::App* cent = app.add_subcommand("centralizer",
                                      "certified centralizer generators");
  cent->add_option("word", w1,
                   "braid word; batch over stdin lines when absent");
  CLI::App* bound = app.add_subcommand("bound", "generator count bound");
  bound->add_option("strands", strands, "strand count")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(nf)) {
    run_batchable(
        w1, +[](const bc_braid* w, const char*) { return bc_nf_json(w); },
        "nf", opt);
  } else if (app.got_subcommand(bkl)) {
    run_batchable(
        w1, +[](const bc_braid* w, const char*) { return bc_bkl_nf_json(w); },
        "bkl-nf", opt);
  } else if (app.got_subcommand(eq)) {
    run_pair(
        w1, w2,
        +[](const bc_braid* a, const bc_braid* b, const char*) {
          return bc_equal_json(a, b);
        },
        "equal", opt);
  } else if (app.got_subcommand(conj)) {
    run_pair(w1, w2, &bc_conj_json, "conj", opt);
  } else if (app.got_subcommand(sss)) {
    run_batchable(w1, &bc_sss_json, "sss", opt);
  } else if (app.got_subcommand(cls)) {
    run_batchable(w1, &bc_classify_json, "classify", opt);
  } else if (app.got_subcommand(red)) {
    run_batchable(w1, &bc_reduce_json, "reduce", opt);
  } else if (app.got_subcommand(reg)) {
    run_batchable(w1, &bc_regular_form_json, "regular-form", opt);
  } else if (app.got_subcommand(cent)) {
    run_batchable(w1, &bc_centralizer_json, "centralizer", opt);
  } else if (app.got_subcommand(bound)) {
    char* report = bc_bound_json(strands);
    if (!report) {
      fail("bound");
    } else {
      emit(report, opt);
      bc_string_free(report);
    }
  }
  return g_exit;
}
