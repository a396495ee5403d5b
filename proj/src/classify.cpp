#include "braidcent/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "braidcent/bkl.hpp"
#include "braidcent/conjugacy.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"

namespace braidcent {

namespace {

bool full_twist_power(const GarsideNF& x) {
  return x.len() == 0 && x.inf % 2 == 0;
}

int exponent_as_int(long long k) {
  if (k > std::numeric_limits<int>::max() ||
      k < std::numeric_limits<int>::min())
    throw InternalError("periodic exponent out of range");
  return static_cast<int>(k);
}

// s_{n-1} ... s_1, the band-structure rotation; conjugating the delta
// model by the half twist yields it.
BraidWord band_rotation(int n) {
  BraidWord w(n);
  for (int i = n - 1; i >= 1; --i) w.letters.push_back(i);
  return w;
}

// Conjugator onto delta^k.  In the band structure the summit set of the
// rotation power is a single element, so cycling alone reaches it; the
// trailing Delta^{-1} turns the band witness into one for the model.
BraidWord delta_witness(const BraidWord& w, long long k, std::size_t cap) {
  std::optional<BraidWord> c = conjugating_witness<DualOps>(
      w, power(band_rotation(w.n), exponent_as_int(k)), cap);
  if (!c) throw ConjugacySearchFailed("no conjugator onto the delta model");
  return free_reduce(concat(*c, invert(delta_word(w.n))));
}

// The reduction circles visible on s: curves belonging to some invariant
// round system of s and compatible with every other such curve, outermost
// ones only.  Should all curves conflict, falls back to the
// inclusion-maximal outermost family coming first in catalog order.
std::optional<RoundMulticurve> chosen_system(
    const BraidWord& s, const SystemEnumerationConfig& cfg) {
  std::vector<RoundMulticurve> all = invariant_round_systems(s, cfg);
  if (all.empty()) return std::nullopt;
  RoundMulticurve pool;
  for (const RoundMulticurve& sys : all)
    pool.insert(pool.end(), sys.begin(), sys.end());
  pool = normalize_system(std::move(pool));
  RoundMulticurve kept;
  for (const RoundCurve& c : pool) {
    bool ok = true;
    for (const RoundCurve& other : pool)
      if (!compatible(c, other)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(c);
  }
  RoundMulticurve best;
  if (!kept.empty()) {
    best = outermost_of(kept);
  } else {
    std::vector<RoundMulticurve> outer;
    outer.reserve(all.size());
    for (const RoundMulticurve& sys : all) outer.push_back(outermost_of(sys));
    std::sort(outer.begin(), outer.end());
    outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
    auto dominates = [](const RoundMulticurve& big,
                        const RoundMulticurve& small) {
      return small.size() < big.size() &&
             std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (const RoundMulticurve& cand : outer) {
      bool dominated = false;
      for (const RoundMulticurve& other : outer)
        if (dominates(other, cand)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      if (best.empty() || cand < best) best = cand;
    }
  }
  if (!is_invariant(s, best))
    throw InternalError("chosen reduction lost invariance");
  return best;
}

}  // namespace

BraidWord periodic_delta(int n) {
  BraidWord w(n);
  for (int i = 1; i < n; ++i) w.letters.push_back(i);
  return w;
}

BraidWord periodic_gamma(int n) {
  if (n < 2) throw InvalidArgument("gamma needs at least two strands");
  BraidWord w = periodic_delta(n);
  w.letters.insert(w.letters.begin(), 1);
  return w;
}

BraidWord periodic_model(int n, PeriodicKind kind, long long k) {
  const BraidWord base =
      kind == PeriodicKind::Delta ? periodic_delta(n) : periodic_gamma(n);
  return power(base, exponent_as_int(k));
}

std::optional<std::pair<PeriodicKind, long long>> is_periodic(
    const BraidWord& w) {
  const int n = w.n;
  const GarsideNF base = nf_of_word(w);
  const long long es = exponent_sum(w);
  const GarsideNF nth = nf_power(base, n);
  if (full_twist_power(nth)) {
    const long long k = nth.inf / 2;
    if (es != k * (n - 1))
      throw InternalError("periodic exponent sum mismatch");
    return std::pair{PeriodicKind::Delta, k};
  }
  if (n >= 2) {
    const GarsideNF cth = nf_power(base, n - 1);
    if (full_twist_power(cth)) {
      const long long k = cth.inf / 2;
      if (es != k * n) throw InternalError("periodic exponent sum mismatch");
      return std::pair{PeriodicKind::Gamma, k};
    }
  }
  return std::nullopt;
}

BraidWord periodic_certificate(const BraidWord& w, PeriodicKind kind,
                               long long k, std::size_t sss_cap) {
  const int n = w.n;
  const BraidWord target = periodic_model(n, kind, k);
  if (nf_equal(w, target)) return BraidWord(n);
  BraidWord c(n);
  if (kind == PeriodicKind::Delta) {
    c = delta_witness(w, k, sss_cap);
  } else {
    if (k % (n - 1) == 0)
      throw ConjugacySearchFailed(
          "central rotation power differs from its model");
    // A noncentral gamma power fixes exactly one puncture.  Move it to the
    // front, drop that strand, solve the delta problem one strand down,
    // and close the remaining gap with a summit search against the model.
    const Permutation perm = permutation_of(w);
    int fixed = -1;
    for (int u = 0; u < n; ++u)
      if (perm[u] == u) {
        if (fixed >= 0)
          throw ConjugacySearchFailed("rotation with several fixed punctures");
        fixed = u;
      }
    if (fixed < 0)
      throw ConjugacySearchFailed("rotation without fixed puncture");
    BraidWord front(n);
    for (int i = fixed; i >= 1; --i) front.letters.push_back(i);
    const BraidWord w1 = conjugate(w, front);
    const BraidWord lift =
        shift_letters(delta_witness(forget_strand(w1, 1), k, sss_cap), 1, n);
    const BraidWord w2 = conjugate(w1, lift);
    std::optional<BraidWord> fin =
        conjugating_witness<ClassicalOps>(w2, target, sss_cap);
    if (!fin)
      throw ConjugacySearchFailed("no conjugator onto the gamma model");
    c = free_reduce(concat(front, lift, *fin));
  }
  if (!nf_equal(conjugate(w, c), target))
    throw ConjugacySearchFailed("certificate verification failed");
  return c;
}

std::optional<Reduction> find_reduction(const BraidWord& w,
                                        const ReductionSearchConfig& cfg) {
  // The input's own summit representative goes first, so a braid already
  // exhibiting its curves keeps an identity conjugator.
  Tracked<ClassicalOps> rep = summit_representative<ClassicalOps>(w);
  if (auto sys = chosen_system(word_of_nf(rep.nf), cfg.curves))
    return Reduction{*sys, rep.conj};
  const std::vector<int> seen = nf_key(rep.nf);
  SummitSet<ClassicalOps> sss = summit_closure<ClassicalOps>(w, cfg.sss_cap);
  for (const auto& [key, t] : sss.elements) {
    if (key == seen) continue;
    if (auto sys = chosen_system(word_of_nf(t.nf), cfg.curves))
      return Reduction{*sys, t.conj};
  }
  return std::nullopt;
}

CrsScan crs_power_scan(const BraidWord& w, const RoundMulticurve& reduction,
                       int power_bound) {
  const int n = w.n;
  const RoundMulticurve base = normalize_system(reduction);
  if (!is_invariant(w, base))
    throw InvalidArgument("system is not invariant under the braid");
  const int bound = power_bound > 0 ? power_bound : n;
  std::vector<GarsideNF> powers;
  powers.reserve(bound);
  powers.push_back(nf_of_word(w));
  for (int j = 2; j <= bound; ++j)
    powers.push_back(nf_product(powers.back(), powers.front()));

  std::map<RoundCurve, int> found;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const RoundCurve cand{a, b};
      if (!essential(n, cand)) continue;
      const RoundMulticurve one{cand};
      for (int j = 1; j <= bound; ++j) {
        std::optional<RoundMulticurve> img = system_image(powers[j - 1], one);
        if (img && *img == one) {
          found.emplace(cand, j);
          break;
        }
      }
    }

  RoundMulticurve family;
  family.reserve(found.size());
  for (const auto& [c, j] : found) family.push_back(c);

  CrsScan out;
  out.exact = is_laminar(family);
  out.curves = base;
  for (const RoundCurve& c : family) {
    bool ok = true;
    for (const RoundCurve& other : family)
      if (!compatible(c, other)) {
        ok = false;
        break;
      }
    if (ok) out.curves.push_back(c);
  }
  out.curves = normalize_system(std::move(out.curves));
  out.found_at.reserve(out.curves.size());
  for (const RoundCurve& c : out.curves) {
    auto it = found.find(c);
    out.found_at.push_back(it == found.end() ? 0 : it->second);
  }
  return out;
}

NTClass classify(const BraidWord& w, const ClassifyConfig& cfg) {
  if (auto p = is_periodic(w)) {
    const auto [kind, k] = *p;
    return Periodic{kind, k, periodic_certificate(w, kind, k, cfg.sss_cap)};
  }
  if (auto r = find_reduction(w, {cfg.sss_cap, cfg.curves})) {
    const BraidWord rounded = conjugate(w, r->conjugator);
    const CrsScan scan = crs_power_scan(rounded, r->system, cfg.power_bound);
    return Reducible{r->system, r->conjugator, scan.exact};
  }
  return PseudoAnosov{};
}

}  // namespace braidcent
