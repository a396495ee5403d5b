#include "braidcent/tubular.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>

#include "braidcent/conjugacy.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"

namespace braidcent {

namespace {

// Slot layout of a covering family of disjoint circles: punctures not
// enclosed by the input become one-strand tubes of their own.
struct Tubes {
  std::vector<int> start;  // 1-based first strand per slot
  std::vector<int> size;
  int count() const { return static_cast<int>(start.size()); }
};

Tubes layout_of(int n, const RoundMulticurve& circles) {
  RoundMulticurve sys = circles;
  std::sort(sys.begin(), sys.end(),
            [](const RoundCurve& x, const RoundCurve& y) {
              return x.a < y.a || (x.a == y.a && x.b < y.b);
            });
  Tubes t;
  int next = 1;
  auto add = [&](int a, int b) {
    t.start.push_back(a);
    t.size.push_back(b - a + 1);
  };
  for (const RoundCurve& c : sys) {
    if (c.a < 1 || c.b < c.a || c.b > n)
      throw InvalidArgument("circle " + format_system({c}) + " out of range");
    if (c.a < next)
      throw InvalidArgument("circles overlap: " + format_system(sys));
    if (c.b - c.a + 1 == n)
      throw InvalidArgument("a tube cannot enclose every strand");
    for (int p = next; p < c.a; ++p) add(p, p);
    add(c.a, c.b);
    next = c.b + 1;
  }
  for (int p = next; p <= n; ++p) add(p, p);
  return t;
}

RoundMulticurve essential_subsystem(const Tubes& t) {
  RoundMulticurve sys;
  for (int j = 0; j < t.count(); ++j)
    if (t.size[j] >= 2)
      sys.push_back(RoundCurve{t.start[j], t.start[j] + t.size[j] - 1});
  return sys;
}

// Braid induced on the tubes.  Walks the normal form of `s` and collapses
// each permutation factor to the positive tube braid given by how it carries
// the current intervals; two tubes cross at most once inside a factor, so
// that braid is the permutation braid of the induced slot permutation.
BraidWord collapse(const BraidWord& s, const Tubes& t) {
  const int n = s.n;
  const int m = t.count();
  GarsideNF nf = nf_of_word(s);

  std::vector<int> rev(n);
  for (int u = 0; u < n; ++u) rev[u] = n - 1 - u;
  std::vector<std::pair<Permutation, int>> steps;  // factor, sign
  for (long long i = 0; i < std::abs(nf.inf); ++i)
    steps.emplace_back(Permutation(rev), nf.inf > 0 ? 1 : -1);
  for (const Permutation& f : nf.factors) steps.emplace_back(f, 1);

  std::vector<int> width = t.size;
  BraidWord out(m);
  for (const auto& [f, sign] : steps) {
    std::vector<std::pair<int, int>> order;  // (image start, slot)
    int a = 0;
    for (int j = 0; j < m; ++j) {
      int lo = n, hi = -1;
      for (int u = a; u < a + width[j]; ++u) {
        lo = std::min(lo, f[u]);
        hi = std::max(hi, f[u]);
      }
      if (hi - lo + 1 != width[j])
        throw InternalError("tube image is not a round circle");
      order.emplace_back(lo, j);
      a += width[j];
    }
    std::sort(order.begin(), order.end());
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[order[r].second] = r;
    BraidWord piece = positive_word_of_permutation(Permutation(rank));
    out = concat(out, sign > 0 ? piece : invert(piece));
    std::vector<int> moved(m);
    for (int j = 0; j < m; ++j) moved[rank[j]] = width[j];
    width = std::move(moved);
  }
  if (width != t.size)
    throw InternalError("tube layout not restored after collapse");
  return free_reduce(out);
}

// The braid inside one tube: forget every strand outside positions [a, b].
BraidWord restrict_to(BraidWord u, int a, int b) {
  while (u.n > b) u = forget_strand(u, b + 1);
  for (int p = 1; p < a; ++p) u = forget_strand(u, 1);
  return free_reduce(u);
}

// Braid with `inner` inside each listed tube and nothing anywhere else.
BraidWord fill_tubes(const Tubes& t, const std::vector<int>& slots,
                     const BraidWord& inner) {
  std::vector<BraidWord> ins;
  ins.reserve(t.count());
  for (int j = 0; j < t.count(); ++j) ins.emplace_back(t.size[j]);
  for (int slot : slots) ins[slot] = inner;
  return free_reduce(cable(BraidWord(t.count()), CablePattern{t.size, ins}));
}

}  // namespace

TubularDecomposition decompose(const BraidWord& w,
                               const RoundMulticurve& circles,
                               const BraidWord& rounding_conjugator) {
  if (rounding_conjugator.n != w.n)
    throw StrandMismatch("conjugator lives in a different braid group");
  BraidWord s = free_reduce(conjugate(w, rounding_conjugator));
  Tubes t = layout_of(w.n, circles);
  RoundMulticurve ess = essential_subsystem(t);
  if (!ess.empty() && !is_invariant(s, ess))
    throw NotInvariant("the braid does not preserve " + format_system(ess));
  const int m = t.count();

  BraidWord tub = collapse(s, t);
  Permutation rho = permutation_of(tub);
  for (int j = 0; j < m; ++j)
    if (t.size[rho[j]] != t.size[j])
      throw InternalError("tube sizes change along an orbit");

  // What the tube braid alone does not account for sits inside the tubes.
  BraidWord skeleton = cable(tub, CablePattern{t.size, {}});
  BraidWord residue = free_reduce(concat(invert(skeleton), s));
  Permutation pr = permutation_of(residue);
  for (int j = 0; j < m; ++j)
    for (int u = t.start[j] - 1; u < t.start[j] - 1 + t.size[j]; ++u)
      if (pr[u] < t.start[j] - 1 || pr[u] >= t.start[j] - 1 + t.size[j])
        throw InternalError("residual braid leaves a tube");
  std::vector<BraidWord> arriving;
  arriving.reserve(m);
  for (int j = 0; j < m; ++j)
    arriving.push_back(
        restrict_to(residue, t.start[j], t.start[j] + t.size[j] - 1));
  if (!nf_equal(cable(tub, CablePattern{t.size, arriving}), s))
    throw InternalError("tube data does not reassemble the braid");

  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(m, 0);
  for (int c = 0; c < m; ++c) {
    if (seen[c]) continue;
    std::vector<int> orb;
    for (int x = c; !seen[x]; x = rho[x]) {
      seen[x] = 1;
      orb.push_back(x);
    }
    orbits.push_back(std::move(orb));
  }
  std::vector<std::vector<BraidWord>> interiors;
  interiors.reserve(orbits.size());
  for (const std::vector<int>& orb : orbits) {
    const int r = static_cast<int>(orb.size());
    std::vector<BraidWord> row;
    row.reserve(r);
    for (int k = 0; k < r; ++k) row.push_back(arriving[orb[(k + 1) % r]]);
    interiors.push_back(std::move(row));
  }

  RoundMulticurve sys;
  for (int j = 0; j < m; ++j)
    sys.push_back(RoundCurve{t.start[j], t.start[j] + t.size[j] - 1});
  TubularDecomposition d;
  d.base = w;
  d.rounding_conjugator = rounding_conjugator;
  d.system = std::move(sys);
  d.orbits = std::move(orbits);
  d.tubular = std::move(tub);
  d.interiors = std::move(interiors);
  return d;
}

RegularForm to_regular_form(const TubularDecomposition& d,
                            std::size_t sss_cap) {
  Tubes t = layout_of(d.base.n, d.system);
  RoundMulticurve ess = essential_subsystem(t);
  const int m = t.count();

  // Conjugating by the suffix products of each orbit's interiors empties
  // every tube except the one closing the cycle, which collects the full
  // product.
  std::vector<BraidWord> suffix;
  suffix.reserve(m);
  for (int j = 0; j < m; ++j) suffix.emplace_back(t.size[j]);
  for (int i = 0; i < d.orbit_count(); ++i) {
    const std::vector<int>& orb = d.orbits[i];
    const int r = static_cast<int>(orb.size());
    bool settled = true;
    for (int k = 0; k + 1 < r; ++k)
      if (!is_trivial(d.interiors[i][k])) settled = false;
    if (settled) continue;
    for (int k = 0; k < r; ++k) {
      BraidWord acc(d.orbit_size(i));
      for (int l = k; l < r; ++l) acc = concat(acc, d.interiors[i][l]);
      suffix[orb[k]] = free_reduce(acc);
    }
  }
  BraidWord conj = free_reduce(
      concat(d.rounding_conjugator,
             cable(BraidWord(m), CablePattern{t.size, suffix})));
  TubularDecomposition cur = decompose(d.base, ess, conj);
  for (int i = 0; i < cur.orbit_count(); ++i)
    for (int k = 0; k + 1 < cur.orbit_length(i); ++k)
      if (!is_trivial(cur.interiors[i][k]))
        throw InternalError("transfusion left a tube occupied");

  auto closing = [](const TubularDecomposition& x, int i) {
    return x.interiors[i][x.orbit_length(i) - 1];
  };

  // Conjugate interiors of distinct orbits become literally equal words; the
  // earliest orbit of each class keeps its value.
  for (int j = 1; j < cur.orbit_count(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (cur.orbit_size(i) != cur.orbit_size(j)) continue;
      BraidWord a = closing(cur, j), b = closing(cur, i);
      if (nf_equal(a, b)) break;
      std::optional<BraidWord> h =
          conjugating_witness<ClassicalOps>(a, b, sss_cap);
      if (!h) continue;
      conj = free_reduce(concat(conj, fill_tubes(t, cur.orbits[j], *h)));
      cur = decompose(d.base, ess, conj);
      break;
    }
  }

  std::vector<BraidWord> designated;
  designated.reserve(cur.orbit_count());
  for (int i = 0; i < cur.orbit_count(); ++i)
    designated.push_back(closing(cur, i));
  for (int i = 0; i < cur.orbit_count(); ++i)
    for (int j = i + 1; j < cur.orbit_count(); ++j) {
      if (cur.orbit_size(i) != cur.orbit_size(j)) continue;
      if (nf_equal(designated[i], designated[j])) continue;
      if (conjugating_witness<ClassicalOps>(designated[j], designated[i],
                                            sss_cap))
        throw InternalError("conjugate interiors left unequal");
    }
  return RegularForm{std::move(cur), std::move(designated), std::move(conj)};
}

BraidWord mu(const RegularForm& rf, int orbit, int k) {
  const TubularDecomposition& d = rf.decomposition;
  if (orbit < 0 || orbit >= d.orbit_count())
    throw IndexOutOfRange("no orbit " + std::to_string(orbit));
  const int r = d.orbit_length(orbit);
  if (k < 1 || k > r - 1)
    throw IndexOutOfRange("relocation slot must lie in [1, " +
                          std::to_string(r - 1) + "]");
  Tubes t = layout_of(d.base.n, d.system);
  std::vector<int> slots(d.orbits[orbit].begin() + k, d.orbits[orbit].end());
  return fill_tubes(t, slots, rf.nontrivial[orbit]);
}

BraidWord g_embed(const RegularForm& rf, int orbit, const BraidWord& inner) {
  const TubularDecomposition& d = rf.decomposition;
  if (orbit < 0 || orbit >= d.orbit_count())
    throw IndexOutOfRange("no orbit " + std::to_string(orbit));
  if (inner.n != d.orbit_size(orbit))
    throw StrandMismatch("interior braid does not fit the orbit's tubes");
  if (!commutes(inner, rf.nontrivial[orbit]))
    throw NotInCentralizerOfInterior(
        "the braid must commute with the orbit's interior");
  Tubes t = layout_of(d.base.n, d.system);
  BraidWord g = fill_tubes(t, d.orbits[orbit], inner);
  if (!commutes(g, d.rounded()))
    throw InternalError("embedded braid fails to commute");
  return g;
}

BraidWord psi(const TubularDecomposition& d, const BraidWord& eta) {
  Tubes t = layout_of(d.base.n, d.system);
  if (eta.n != t.count())
    throw StrandMismatch("tube braid needs one strand per tube");
  Permutation pi = permutation_of(eta);
  for (int j = 0; j < t.count(); ++j)
    if (t.size[pi[j]] != t.size[j])
      throw InconsistentPermutation(
          "tube sizes disagree along the permutation");
  return free_reduce(cable(eta, CablePattern{t.size, {}}));
}

BraidWord project_p(const TubularDecomposition& d, const BraidWord& alpha) {
  if (alpha.n != d.base.n)
    throw StrandMismatch("braid lives in a different group than the tubes");
  Tubes t = layout_of(d.base.n, d.system);
  RoundMulticurve ess = essential_subsystem(t);
  if (!ess.empty() && !is_invariant(alpha, ess))
    throw NotTubePreserving("the braid does not preserve " +
                            format_system(ess));
  return collapse(alpha, t);
}

}  // namespace braidcent
