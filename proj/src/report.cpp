#include "braidcent/report.hpp"

#include <utility>

#include "braidcent/bkl.hpp"
#include "braidcent/conjugacy.hpp"
#include "braidcent/curves.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"
#include "braidcent/tubular.hpp"

namespace braidcent {

namespace {

Json base(const char* verb) {
  Json j;
  j["schema"] = 1;
  j["verb"] = verb;
  return j;
}

Json curve_array(const RoundMulticurve& c) {
  Json a = Json::array();
  for (const RoundCurve& x : c) a.push_back(Json::array({x.a, x.b}));
  return a;
}

RoundMulticurve curves_of(const Json& a) {
  RoundMulticurve c;
  for (const Json& x : a) c.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
  return c;
}

BraidWord parse_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ParseError(std::string("report misses word field '") + key + "'");
  return parse_braid(j.at(key).get<std::string>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("report misses field '") + key + "'");
  return j.at(key);
}

ClassifyConfig classify_cfg(const ReportOptions& opt) {
  ClassifyConfig cfg;
  cfg.sss_cap = opt.sss_cap;
  return cfg;
}

// The reducible fields shared by classify and reduce reports.
void put_reduction(Json& j, const Reducible& r) {
  j["curves"] = curve_array(r.reduction);
  j["conjugator"] = format_braid(r.rounding_conjugator);
  j["crs_exact"] = r.crs_exact;
}

bool check_reduction(const Json& j) {
  BraidWord w = parse_field(j, "input");
  BraidWord c = parse_field(j, "conjugator");
  return is_invariant(free_reduce(conjugate(w, c)),
                      curves_of(field(j, "curves")));
}

}  // namespace

Json nf_report(const BraidWord& w) {
  GarsideNF nf = nf_of_word(w);
  Json j = base("nf");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  j["inf"] = nf.inf;
  j["sup"] = nf.sup();
  j["canonical_length"] = nf.len();
  Json factors = Json::array();
  for (const Permutation& f : nf.factors)
    factors.push_back(format_braid(positive_word_of_permutation(f)));
  j["factors"] = std::move(factors);
  j["word"] = format_braid(word_of_nf(nf));
  return j;
}

Json bkl_nf_report(const BraidWord& w) {
  BKLNF nf = bkl_nf_of_word(w);
  Json j = base("bkl-nf");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  j["inf"] = nf.inf;
  j["canonical_length"] = nf.len();
  Json factors = Json::array();
  for (const Permutation& f : nf.factors)
    factors.push_back(format_braid(bkl_word_of_simple(f)));
  j["factors"] = std::move(factors);
  j["word"] = format_braid(word_of_bkl_nf(nf));
  return j;
}

Json equal_report(const BraidWord& a, const BraidWord& b) {
  Json j = base("equal");
  j["left"] = format_braid(a);
  j["right"] = format_braid(b);
  j["equal"] = nf_equal(a, b);
  return j;
}

Json conj_report(const BraidWord& a, const BraidWord& b,
                 const ReportOptions& opt) {
  std::optional<BraidWord> c =
      conjugating_witness<ClassicalOps>(a, b, opt.budget);
  Json j = base("conj");
  j["left"] = format_braid(a);
  j["right"] = format_braid(b);
  j["conjugate"] = c.has_value();
  j["witness"] = c ? Json(format_braid(*c)) : Json(nullptr);
  return j;
}

Json sss_report(const BraidWord& w, const ReportOptions& opt) {
  Tracked<ClassicalOps> rep = summit_representative<ClassicalOps>(w);
  Json j = base("sss");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  j["inf"] = rep.nf.inf;
  j["sup"] = rep.nf.sup();
  j["canonical_length"] = rep.nf.len();
  try {
    j["size"] = summit_closure<ClassicalOps>(w, opt.budget).elements.size();
  } catch (const BudgetExceeded&) {
    j["size"] = nullptr;
    j["partial"] = true;
  }
  j["representative"] = format_braid(word_of_nf(rep.nf));
  j["conjugator"] = format_braid(rep.conj);
  return j;
}

Json classify_report(const BraidWord& w, const ReportOptions& opt) {
  NTClass c = classify(w, classify_cfg(opt));
  Json j = base("classify");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  if (const auto* p = std::get_if<Periodic>(&c)) {
    j["class"] = "periodic";
    j["kind"] = p->kind == PeriodicKind::Delta ? "delta" : "gamma";
    j["k"] = p->k;
    j["conjugator"] = format_braid(p->conjugator);
    j["model"] = format_braid(periodic_model(w.n, p->kind, p->k));
  } else if (const auto* r = std::get_if<Reducible>(&c)) {
    j["class"] = "reducible";
    put_reduction(j, *r);
  } else {
    j["class"] = "pseudo-anosov";
  }
  return j;
}

Json reduce_report(const BraidWord& w, const ReportOptions& opt) {
  NTClass c = classify(w, classify_cfg(opt));
  Json j = base("reduce");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  if (const auto* r = std::get_if<Reducible>(&c)) {
    j["reducible"] = true;
    put_reduction(j, *r);
  } else {
    j["reducible"] = false;
    j["class"] =
        std::holds_alternative<Periodic>(c) ? "periodic" : "pseudo-anosov";
  }
  return j;
}

Json regular_form_report(const BraidWord& w, const ReportOptions& opt) {
  NTClass c = classify(w, classify_cfg(opt));
  Json j = base("regular-form");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  const auto* r = std::get_if<Reducible>(&c);
  if (!r) {
    j["reducible"] = false;
    j["class"] =
        std::holds_alternative<Periodic>(c) ? "periodic" : "pseudo-anosov";
    return j;
  }
  RegularForm rf = to_regular_form(
      decompose(w, r->reduction, r->rounding_conjugator), opt.sss_cap);
  const TubularDecomposition& d = rf.decomposition;
  j["reducible"] = true;
  j["curves"] = curve_array(r->reduction);
  j["conjugator"] = format_braid(rf.conjugator);
  j["rounded"] = format_braid(d.rounded());
  j["tubular"] = format_braid(d.tubular);
  Json orbits = Json::array();
  for (const std::vector<int>& o : d.orbits) {
    Json slots = Json::array();
    for (int s : o) slots.push_back(s + 1);
    orbits.push_back(std::move(slots));
  }
  j["orbits"] = std::move(orbits);
  Json sizes = Json::array();
  for (int s = 0; s < d.tube_count(); ++s) sizes.push_back(d.tube_size(s));
  j["tube_sizes"] = std::move(sizes);
  Json interiors = Json::array();
  for (const BraidWord& x : rf.nontrivial) interiors.push_back(format_braid(x));
  j["interiors"] = std::move(interiors);
  return j;
}

Json centralizer_report(const BraidWord& w, const ReportOptions& opt) {
  CentralizerConfig cfg;
  cfg.sss_cap = opt.sss_cap;
  cfg.root_budget = opt.root_cap;
  GeneratorSet g = centralizer_gens(w, cfg);
  Json j = base("centralizer");
  j["input"] = format_braid(w);
  j["strands"] = w.n;
  j["complete"] = g.complete;
  j["bound"] = g.bound;
  j["count"] = g.gens.size();
  Json gens = Json::array();
  for (const Generator& x : g.gens) {
    Json e;
    e["word"] = format_braid(x.word);
    e["tag"] = tag_name(x);
    e["certificate"] = "commutes";
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json bound_report(int n) {
  Json j = base("bound");
  j["strands"] = n;
  j["bound"] = bound_p(n);
  return j;
}

Json error_report(const std::string& verb, const std::string& kind,
                  const std::string& message) {
  Json j = base(verb.empty() ? "error" : verb.c_str());
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  j["error"] = std::move(e);
  return j;
}

bool verify_report(const Json& j) {
  if (!j.is_object() || field(j, "schema").get<int>() != 1)
    throw ParseError("unknown report schema");
  if (j.contains("error")) return true;  // an error report claims nothing
  std::string verb = field(j, "verb").get<std::string>();

  if (verb == "nf" || verb == "bkl-nf") {
    BraidWord w = parse_field(j, "input");
    BraidWord word = parse_field(j, "word");
    if (!nf_equal(w, word)) return false;
    const Json& factors = field(j, "factors");
    if (verb == "nf") {
      GarsideNF nf = nf_of_word(w);
      if (nf.inf != field(j, "inf").get<int>() ||
          nf.len() != static_cast<int>(factors.size()))
        return false;
      for (std::size_t i = 0; i < nf.factors.size(); ++i)
        if (!(permutation_of(parse_braid(factors[i].get<std::string>())) ==
              nf.factors[i]))
          return false;
    } else {
      BKLNF nf = bkl_nf_of_word(w);
      if (nf.inf != field(j, "inf").get<int>() ||
          nf.len() != static_cast<int>(factors.size()))
        return false;
      for (std::size_t i = 0; i < nf.factors.size(); ++i)
        if (!(permutation_of(parse_braid(factors[i].get<std::string>())) ==
              nf.factors[i]))
          return false;
    }
    return true;
  }

  if (verb == "equal") {
    return nf_equal(parse_field(j, "left"), parse_field(j, "right")) ==
           field(j, "equal").get<bool>();
  }

  if (verb == "conj") {
    if (!field(j, "conjugate").get<bool>()) return true;
    BraidWord a = parse_field(j, "left");
    BraidWord b = parse_field(j, "right");
    BraidWord c = parse_field(j, "witness");
    return nf_equal(conjugate(a, c), b);
  }

  if (verb == "sss") {
    BraidWord w = parse_field(j, "input");
    BraidWord rep = parse_field(j, "representative");
    BraidWord c = parse_field(j, "conjugator");
    if (!nf_equal(conjugate(w, c), rep)) return false;
    GarsideNF nf = nf_of_word(rep);
    return nf.inf == field(j, "inf").get<int>() &&
           nf.len() == field(j, "canonical_length").get<int>();
  }

  if (verb == "classify") {
    std::string cls = field(j, "class").get<std::string>();
    if (cls == "periodic") {
      BraidWord w = parse_field(j, "input");
      BraidWord c = parse_field(j, "conjugator");
      return nf_equal(conjugate(w, c), parse_field(j, "model"));
    }
    if (cls == "reducible") return check_reduction(j);
    return true;  // the pseudo-Anosov tag is the absence of the other two
  }

  if (verb == "reduce") {
    if (!field(j, "reducible").get<bool>()) return true;
    return check_reduction(j);
  }

  if (verb == "regular-form") {
    if (!field(j, "reducible").get<bool>()) return true;
    BraidWord w = parse_field(j, "input");
    BraidWord c = parse_field(j, "conjugator");
    BraidWord reg = parse_field(j, "rounded");
    if (!nf_equal(conjugate(w, c), reg)) return false;
    RoundMulticurve curves = curves_of(field(j, "curves"));
    if (!is_invariant(reg, curves)) return false;
    TubularDecomposition d = decompose(reg, curves, BraidWord(reg.n));
    return nf_equal(d.tubular, parse_field(j, "tubular"));
  }

  if (verb == "centralizer") {
    BraidWord w = parse_field(j, "input");
    const Json& gens = field(j, "generators");
    if (field(j, "count").get<std::size_t>() != gens.size()) return false;
    if (field(j, "complete").get<bool>() &&
        static_cast<long long>(gens.size()) > field(j, "bound").get<long long>())
      return false;
    for (const Json& e : gens)
      if (!commutes(parse_field(e, "word"), w)) return false;
    return true;
  }

  if (verb == "bound") {
    return bound_p(field(j, "strands").get<int>()) ==
           field(j, "bound").get<long long>();
  }

  throw ParseError("unknown report verb '" + verb + "'");
}

bool report_partial(const Json& j) {
  if (j.value("partial", false)) return true;
  if (j.contains("complete") && !j.at("complete").get<bool>()) return true;
  return false;
}

namespace {

std::string render_factors(const Json& j) {
  std::string out;
  int i = 0;
  for (const Json& f : j.at("factors"))
    out += "  factor " + std::to_string(++i) + ": " +
           f.get<std::string>() + "\n";
  return out;
}

std::string render_curves(const Json& a) {
  std::string out;
  for (const Json& c : a) {
    if (!out.empty()) out += " ";
    out += "[" + std::to_string(c.at(0).get<int>()) + "," +
           std::to_string(c.at(1).get<int>()) + "]";
  }
  return out;
}

}  // namespace

std::string render_text(const Json& j) {
  if (j.contains("error")) {
    const Json& e = j.at("error");
    return "error (" + e.at("kind").get<std::string>() + "): " +
           e.at("message").get<std::string>() + "\n";
  }
  std::string verb = j.at("verb").get<std::string>();
  std::string out;

  if (verb == "nf" || verb == "bkl-nf") {
    out = verb + " of " + j.at("input").get<std::string>() + "\n  inf " +
          std::to_string(j.at("inf").get<int>()) + ", canonical length " +
          std::to_string(j.at("canonical_length").get<int>()) + "\n";
    out += render_factors(j);
    return out;
  }
  if (verb == "equal") {
    return std::string(j.at("equal").get<bool>() ? "true" : "false") + "\n";
  }
  if (verb == "conj") {
    if (!j.at("conjugate").get<bool>()) return "not conjugate\n";
    return "conjugate by " + j.at("witness").get<std::string>() + "\n";
  }
  if (verb == "sss") {
    out = "summit of " + j.at("input").get<std::string>() + "\n  inf " +
          std::to_string(j.at("inf").get<int>()) + ", sup " +
          std::to_string(j.at("sup").get<int>()) + ", canonical length " +
          std::to_string(j.at("canonical_length").get<int>()) + "\n  size " +
          (j.at("size").is_null() ? std::string("> budget")
                                  : std::to_string(j.at("size").get<long long>())) +
          "\n  representative: " + j.at("representative").get<std::string>() +
          "\n  conjugator: " + j.at("conjugator").get<std::string>() + "\n";
    return out;
  }
  if (verb == "classify") {
    std::string cls = j.at("class").get<std::string>();
    out = j.at("input").get<std::string>() + " is " + cls;
    if (cls == "periodic")
      out += ": " + j.at("kind").get<std::string>() + "^" +
             std::to_string(j.at("k").get<long long>()) +
             " up to conjugacy\n  conjugator: " +
             j.at("conjugator").get<std::string>() + "\n";
    else if (cls == "reducible")
      out += "\n  curves: " + render_curves(j.at("curves")) +
             "\n  conjugator: " + j.at("conjugator").get<std::string>() + "\n";
    else
      out += "\n";
    return out;
  }
  if (verb == "reduce") {
    if (!j.at("reducible").get<bool>())
      return "not reducible (" + j.at("class").get<std::string>() + ")\n";
    return "reduction curves: " + render_curves(j.at("curves")) +
           "\n  conjugator: " + j.at("conjugator").get<std::string>() + "\n";
  }
  if (verb == "regular-form") {
    if (!j.at("reducible").get<bool>())
      return "not reducible (" + j.at("class").get<std::string>() + ")\n";
    out = "regular form of " + j.at("input").get<std::string>() +
          "\n  curves: " + render_curves(j.at("curves")) + "\n  rounded: " +
          j.at("rounded").get<std::string>() + "\n  tubular: " +
          j.at("tubular").get<std::string>() + "\n";
    int i = 0;
    for (const Json& x : j.at("interiors"))
      out += "  interior " + std::to_string(++i) + ": " +
             x.get<std::string>() + "\n";
    out += "  conjugator: " + j.at("conjugator").get<std::string>() + "\n";
    return out;
  }
  if (verb == "centralizer") {
    out = "centralizer of " + j.at("input").get<std::string>() + "\n  " +
          std::to_string(j.at("count").get<long long>()) + " generators, bound " +
          std::to_string(j.at("bound").get<long long>()) +
          (j.at("complete").get<bool>() ? "" : " (incomplete)") + "\n";
    int i = 0;
    for (const Json& e : j.at("generators"))
      out += "  generator " + std::to_string(++i) + " [" +
             e.at("tag").get<std::string>() + "]: " +
             e.at("word").get<std::string>() + "\n";
    return out;
  }
  if (verb == "bound") {
    return std::to_string(j.at("bound").get<long long>()) + "\n";
  }
  return j.dump() + "\n";
}

}  // namespace braidcent
