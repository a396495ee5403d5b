#include "braidcent/centralizer.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "braidcent/bkl.hpp"
#include "braidcent/conjugacy.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"

namespace braidcent {

namespace {

BraidWord sigma_word(int n, int i) { return BraidWord(n, {i}); }

BraidWord half_twist(int n) {
  return positive_word_of_permutation(delta_perm(n));
}

BraidWord full_twist(int n) { return power(half_twist(n), 2); }

// The dual-form rotation s_{n-1} ... s_1; its n-th power is the full twist.
BraidWord dual_delta(int n) {
  BraidWord w(n);
  for (int i = n - 1; i >= 1; --i) w.letters.push_back(i);
  return w;
}

// Band generator exchanging strands u < v behind the strands in between:
// (s_u ... s_{v-2}) s_{v-1} (s_{v-2}^-1 ... s_u^-1).
BraidWord band_gen(int n, int u, int v) {
  BraidWord w(n);
  for (int i = u; i <= v - 2; ++i) w.letters.push_back(i);
  w.letters.push_back(v - 1);
  for (int i = v - 2; i >= u; --i) w.letters.push_back(-i);
  return w;
}

// Its square: strand u makes a full loop around strand v.
BraidWord band_square(int n, int u, int v) {
  BraidWord w(n);
  for (int i = u; i <= v - 2; ++i) w.letters.push_back(i);
  w.letters.push_back(v - 1);
  w.letters.push_back(v - 1);
  for (int i = v - 2; i >= u; --i) w.letters.push_back(-i);
  return w;
}

long long perm_order(const Permutation& p) {
  Permutation cur = p;
  long long o = 1;
  while (!cur.is_identity()) {
    cur = cur.then(p);
    if (++o > 1000000) throw InternalError("permutation order runaway");
  }
  return o;
}

Permutation perm_pow(const Permutation& p, long long k) {
  Permutation cur = Permutation::identity(p.size());
  for (long long i = 0; i < k; ++i) cur = cur.then(p);
  return cur;
}

// ---------------------------------------------------------------------------
// Regular-form bookkeeping shared by z0_gens, section_h and centralizer_gens.

struct RfInfo {
  const RegularForm* rf = nullptr;
  int n = 0;  // ambient strands
  int m = 0;  // tubes
  int t = 0;  // orbits
  Permutation rho;             // tube permutation
  std::vector<int> orbit_of;   // slot -> orbit
  std::vector<char> is_head;   // slot is the first of its orbit
  std::vector<int> class_id;   // orbit -> interior class (size + word)
  BraidWord wreg;              // the braid actually preserving the system

  const BraidWord& bhat() const { return rf->decomposition.tubular; }
  const TubularDecomposition& dec() const { return rf->decomposition; }
};

RfInfo build_info(const RegularForm& rf) {
  const TubularDecomposition& d = rf.decomposition;
  RfInfo info;
  info.rf = &rf;
  info.n = d.base.n;
  info.m = d.tube_count();
  info.t = d.orbit_count();
  info.rho = permutation_of(d.tubular);
  info.orbit_of.assign(info.m, -1);
  info.is_head.assign(info.m, 0);
  for (int i = 0; i < info.t; ++i) {
    const std::vector<int>& orb = d.orbits[i];
    const int r = static_cast<int>(orb.size());
    info.is_head[orb[0]] = 1;
    for (int k = 0; k < r; ++k) {
      info.orbit_of[orb[k]] = i;
      if (info.rho[orb[k]] != orb[(k + 1) % r])
        throw InternalError("orbit order disagrees with the tube permutation");
    }
  }
  info.class_id.assign(info.t, -1);
  int next = 0;
  for (int i = 0; i < info.t; ++i) {
    for (int j = 0; j < i; ++j) {
      if (d.orbit_size(j) != d.orbit_size(i)) continue;
      if (nf_equal(rf.nontrivial[j], rf.nontrivial[i])) {
        info.class_id[i] = info.class_id[j];
        break;
      }
    }
    if (info.class_id[i] < 0) info.class_id[i] = next++;
  }
  info.wreg = free_reduce(d.rounded());
  return info;
}

bool consistent_perm(const RfInfo& info, const Permutation& pi) {
  if (pi.size() != info.m) return false;
  for (int u = 0; u < info.m; ++u) {
    if (info.dec().tube_size(pi[u]) != info.dec().tube_size(u)) return false;
    if (info.class_id[info.orbit_of[pi[u]]] !=
        info.class_id[info.orbit_of[u]])
      return false;
  }
  return true;
}

bool consistent_word(const RfInfo& info, const BraidWord& eta) {
  return eta.n == info.m && consistent_perm(info, permutation_of(eta)) &&
         commutes(eta, info.bhat());
}

void check_consistent(const RfInfo& info, const BraidWord& eta) {
  if (eta.n != info.m)
    throw StrandMismatch("tube braid needs one strand per tube");
  Permutation pi = permutation_of(eta);
  if (!consistent_perm(info, pi))
    throw NotConsistent("permutation breaks tube sizes or interior classes");
  if (!commutes(eta, info.bhat()))
    throw NotConsistent("braid does not commute with the tubular braid");
}

// Exponents t_j with t_j - t_{rho^-1(j)} = [j head] - [pi^-1(j) head]:
// filling tube j with the j-th orbit interior to the power t_j makes the
// tube braid with permutation pi commute with the regular-form braid,
// whose designated interiors sit at the orbit heads.  The free constant of
// each orbit is pinned to zero at its head.  The telescoping sum around
// each orbit vanishes because pi maps orbits to orbits, one head each.
std::vector<long long> star_filling(const RfInfo& info, const Permutation& pi) {
  Permutation pinv = pi.inverse();
  auto rhs = [&](int u) {
    return static_cast<long long>(info.is_head[u]) - info.is_head[pinv[u]];
  };
  std::vector<long long> t(info.m, 0);
  for (int i = 0; i < info.t; ++i) {
    const std::vector<int>& orb = info.dec().orbits[i];
    const int r = static_cast<int>(orb.size());
    long long cur = 0;
    for (int k = 1; k < r; ++k) {
      cur += rhs(orb[k]);
      t[orb[k]] = cur;
    }
    if (-t[orb[r - 1]] != rhs(orb[0]))
      throw InternalError("tube filling constraints do not close");
  }
  return t;
}

// psi(eta) followed by the designated interiors raised to the given
// exponents, one power inside each tube.
BraidWord filled_section(const RfInfo& info, const BraidWord& eta,
                         const std::vector<long long>& t) {
  const TubularDecomposition& d = info.dec();
  BraidWord out = psi(d, eta);
  for (int j = 0; j < info.m; ++j) {
    if (t[j] == 0) continue;
    const BraidWord& base = info.rf->nontrivial[info.orbit_of[j]];
    if (base.empty()) continue;
    out = concat(out,
                 shift_letters(power(base, static_cast<int>(t[j])),
                               d.system[j].a - 1, info.n));
  }
  return free_reduce(out);
}

// ---------------------------------------------------------------------------
// Rotation alphabet.  After normalization the tubular braid is the model
// rotation on m tubes: d = gcd(m - off, k) size classes, r sectors, the
// center tube (off = 1) fixed.  Words over this alphabet come with the
// winding count of every strand across the symmetric ray system, which is
// exactly the filling exponent making their tube version commute.

struct Atom {
  int rot = 0;     // +1 / -1: the model rotation word as one block
  int letter = 0;  // otherwise a single Artin letter
};
using AtomSeq = std::vector<Atom>;

AtomSeq inverse_atoms(AtomSeq s) {
  std::reverse(s.begin(), s.end());
  for (Atom& a : s) {
    a.rot = -a.rot;
    a.letter = -a.letter;
  }
  return s;
}

AtomSeq cat_atoms(AtomSeq a, const AtomSeq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Rays {
  int off = 0;   // 1 when slot 0 is the fixed center
  int mbar = 0;  // rotating slots
  int d = 0, r = 0;
  std::vector<char> ray;  // ray[g]: gap before rotating slot g carries a ray
};

Rays build_rays(int m, int off, long long k_mod) {
  Rays rr;
  rr.off = off;
  rr.mbar = m - off;
  rr.d = static_cast<int>(std::gcd(static_cast<long long>(rr.mbar), k_mod));
  rr.r = rr.mbar / rr.d;
  rr.ray.assign(rr.mbar, 0);
  long long kappa = (k_mod / rr.d) % rr.r;
  long long e = 1;
  while ((e * kappa) % rr.r != 1) {
    if (++e > rr.r) throw InternalError("rotation step not invertible");
  }
  for (long long j = 1; j <= e; ++j)
    rr.ray[static_cast<int>(((j * kappa) % rr.r) * rr.d)] = 1;
  return rr;
}

struct TrackResult {
  Permutation perm;
  std::vector<long long> fill;  // by arrival slot
};

// Follows every strand through the atoms, counting signed ray crossings:
// moving against the rotation counts +1.  The rotation atom carries each
// rotating strand one step with its single crossing; a plain letter swaps
// two adjacent slots across the gap between them.
TrackResult track_atoms(int m, const Rays& rr, const AtomSeq& atoms) {
  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<long long> cnt(m, 0);
  std::vector<int> at(m);  // slot -> strand
  std::iota(at.begin(), at.end(), 0);
  for (const Atom& a : atoms) {
    if (a.rot != 0) {
      for (int i = 0; i < m; ++i) {
        int s = pos[i];
        if (s < rr.off) continue;
        int o = s - rr.off;
        if (a.rot > 0) {
          cnt[i] += rr.ray[o];
          pos[i] = rr.off + (o - 1 + rr.mbar) % rr.mbar;
        } else {
          cnt[i] -= rr.ray[(o + 1) % rr.mbar];
          pos[i] = rr.off + (o + 1) % rr.mbar;
        }
      }
      for (int i = 0; i < m; ++i) at[pos[i]] = i;
    } else {
      int aa = std::abs(a.letter);
      int lo = aa - 1, hi = aa;
      int ilo = at[lo], ihi = at[hi];
      if (lo >= rr.off) {
        int g = hi - rr.off;
        cnt[ihi] += rr.ray[g];
        cnt[ilo] -= rr.ray[g];
      }
      pos[ilo] = hi;
      pos[ihi] = lo;
      at[lo] = ihi;
      at[hi] = ilo;
    }
  }
  TrackResult out{Permutation(pos), std::vector<long long>(m, 0)};
  for (int i = 0; i < m; ++i) out.fill[pos[i]] = cnt[i];
  return out;
}

BraidWord flatten_atoms(int m, PeriodicKind kind, const AtomSeq& atoms) {
  const BraidWord rot =
      kind == PeriodicKind::Gamma ? periodic_gamma(m) : periodic_delta(m);
  BraidWord out(m);
  for (const Atom& a : atoms) {
    if (a.rot > 0)
      out.letters.insert(out.letters.end(), rot.letters.begin(),
                         rot.letters.end());
    else if (a.rot < 0) {
      BraidWord inv = invert(rot);
      out.letters.insert(out.letters.end(), inv.letters.begin(),
                         inv.letters.end());
    } else
      out.letters.push_back(a.letter);
  }
  return out;
}

// Candidate generators for the consistent centralizer of the model
// rotation, given the partition of the d size classes by interior
// equality: per block the symmetric band words, per block pair one band
// square, per block one winding word, or just the rotation (with one
// symmetric lift when all classes agree).
std::vector<AtomSeq> rotation_alphabet(
    int off, int d, int r, const std::vector<std::vector<int>>& pset) {
  auto sig = [&](int c) {
    AtomSeq s;
    for (int j = 0; j < r; ++j) s.push_back({0, j * d + c + off});
    return s;
  };
  auto ws = [&](int u, int v) {
    AtomSeq s;
    for (int j = 0; j < r; ++j) {
      const int base = j * d + off;
      for (int i = u + 1; i <= v - 1; ++i) s.push_back({0, base + i});
      s.push_back({0, base + v});
      for (int i = v - 1; i >= u + 1; --i) s.push_back({0, base + i});
    }
    return s;
  };
  const AtomSeq rot = {Atom{+1, 0}};
  std::vector<AtomSeq> out;
  if (d == 1) {
    out.push_back(rot);
    return out;
  }
  if (pset.size() == 1) {
    out.push_back(rot);
    out.push_back(sig(1));
    return out;
  }
  for (const std::vector<int>& c : pset) {
    const int q = static_cast<int>(c.size());
    if (q >= 2) out.push_back(ws(c[0], c[1]));
    if (q == 3) out.push_back(ws(c[1], c[2]));
    if (q >= 4) {
      AtomSeq chain;
      for (int i = 0; i + 1 < q; ++i) chain = cat_atoms(chain, ws(c[i], c[i + 1]));
      out.push_back(chain);
    }
  }
  for (std::size_t a = 0; a < pset.size(); ++a)
    for (std::size_t b = a + 1; b < pset.size(); ++b) {
      const int v = pset[b][0];
      int u = -1;
      for (int x : pset[a])
        if (x < v) u = x;
      if (u < 0) throw InternalError("blocks out of order");
      out.push_back(cat_atoms(ws(u, v), ws(u, v)));
    }
  AtomSeq wind = rot;
  for (int c = d - 1; c >= 1; --c) wind = cat_atoms(wind, inverse_atoms(sig(c)));
  for (const std::vector<int>& c : pset) {
    const int u = c[0];
    if (u == 0)
      out.push_back(wind);
    else
      out.push_back(cat_atoms(cat_atoms(ws(0, u), wind), inverse_atoms(ws(0, u))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The consistent tube-level centralizer, with filling exponents.

enum class TubKind { Pure, Rotation, Rigid };

struct TubData {
  TubKind kind = TubKind::Pure;
  PeriodicKind rot_kind = PeriodicKind::Delta;
  long long k_mod = 0;   // rotation exponent modulo the period
  long long k_full = 0;  // the actual exponent, with its full twists
  BraidWord xi;          // conjugate(tubular, xi) is the model rotation power
  bool covered = true;   // false outside the pure/rotation/rigid trichotomy
};

TubData tubular_kind(const BraidWord& bhat, std::size_t sss_cap) {
  TubData td;
  if (is_trivial(bhat)) return td;
  ClassifyConfig cc;
  cc.sss_cap = sss_cap;
  NTClass cls = classify(bhat, cc);
  if (const Periodic* per = std::get_if<Periodic>(&cls)) {
    const long long period =
        per->kind == PeriodicKind::Delta ? bhat.n : bhat.n - 1;
    const long long k_mod =
        period == 0 ? 0 : ((per->k % period) + period) % period;
    if (k_mod == 0) return td;  // a central power: every tube braid commutes
    td.kind = TubKind::Rotation;
    td.rot_kind = per->kind;
    td.k_mod = k_mod;
    td.k_full = per->k;
    td.xi = per->conjugator;
    return td;
  }
  if (std::holds_alternative<PseudoAnosov>(cls)) {
    td.kind = TubKind::Rigid;
    return td;
  }
  if (permutation_of(bhat).is_identity()) return td;  // pure: filter below
  // A reducible tube braid that still moves tubes: keep the commutation
  // filter of the pure case, which stays sound, but give up on proving
  // that the surviving generators exhaust the tube level.
  td.covered = false;
  return td;
}

struct Z0Plan {
  std::vector<BraidWord> words;
  std::vector<std::vector<long long>> fills;
  bool complete = true;
};

// Blocks of tubes sharing size and designated interior, as 1-based slots.
std::vector<std::vector<int>> slot_blocks(const RfInfo& info) {
  std::map<int, std::vector<int>> by_class;
  for (int j = 0; j < info.m; ++j)
    by_class[info.class_id[info.orbit_of[j]]].push_back(j + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& [key, slots] : by_class) blocks.push_back(slots);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Z0Plan z0_pure(const RfInfo& info) {
  Z0Plan plan;
  MixedPartition mp{info.m, slot_blocks(info)};
  for (const BraidWord& g : mixed_group_gens(mp)) {
    if (!consistent_word(info, g)) {
      plan.complete = false;
      continue;
    }
    plan.words.push_back(g);
    plan.fills.push_back(star_filling(info, permutation_of(g)));
  }
  return plan;
}

// Partition of the d size classes by interior class; requires the model
// layout, where orbit (c + off) is exactly size class c.
std::vector<std::vector<int>> model_class_partition(const RfInfo& info,
                                                    int off, int d) {
  std::map<int, std::vector<int>> by_class;
  for (int c = 0; c < d; ++c)
    by_class[info.class_id[c + off]].push_back(c);
  std::vector<std::vector<int>> pset;
  for (auto& [key, cs] : by_class) pset.push_back(cs);
  std::sort(pset.begin(), pset.end());
  return pset;
}

Z0Plan z0_rotation_normalized(const RfInfo& info, PeriodicKind kind,
                              long long k_mod) {
  const int m = info.m;
  const int off = kind == PeriodicKind::Gamma ? 1 : 0;
  const int mbar = m - off;
  const int d = static_cast<int>(std::gcd(static_cast<long long>(mbar), k_mod));
  const int r = mbar / d;
  if (info.t != d + off)
    throw InternalError("unexpected orbit layout for a model rotation");
  for (int i = 0; i < info.t; ++i)
    if (info.dec().orbits[i][0] != i)
      throw InternalError("unexpected orbit heads for a model rotation");
  const Rays rays = build_rays(m, off, k_mod);
  Z0Plan plan;
  for (const AtomSeq& seq :
       rotation_alphabet(off, d, r, model_class_partition(info, off, d))) {
    BraidWord g = flatten_atoms(m, kind, seq);
    TrackResult tr = track_atoms(m, rays, seq);
    if (!(tr.perm == permutation_of(g)))
      throw InternalError("tracked permutation mismatch");
    if (!consistent_word(info, g)) {
      plan.complete = false;
      continue;
    }
    plan.words.push_back(free_reduce(g));
    plan.fills.push_back(tr.fill);
  }
  return plan;
}

// Lattice basis of { (a, b) : pa^a pb^b consistent } via two-column
// Hermite reduction; the permutation orders always lie in the lattice.
std::vector<std::array<long long, 2>> hnf2(
    std::vector<std::array<long long, 2>> rows) {
  for (;;) {
    int piv = -1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][0] != 0 &&
          (piv < 0 || std::abs(rows[i][0]) < std::abs(rows[piv][0])))
        piv = static_cast<int>(i);
    if (piv < 0) break;
    bool again = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == piv || rows[i][0] == 0) continue;
      long long q = rows[i][0] / rows[piv][0];
      rows[i][0] -= q * rows[piv][0];
      rows[i][1] -= q * rows[piv][1];
      if (rows[i][0] != 0) again = true;
    }
    if (!again) {
      if (rows[piv][0] < 0) {
        rows[piv][0] = -rows[piv][0];
        rows[piv][1] = -rows[piv][1];
      }
      long long d2 = 0;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (static_cast<int>(i) != piv) d2 = std::gcd(d2, rows[i][1]);
      std::vector<std::array<long long, 2>> out;
      if (d2 > 0) rows[piv][1] = ((rows[piv][1] % d2) + d2) % d2;
      out.push_back(rows[piv]);
      if (d2 > 0) out.push_back({0, d2});
      return out;
    }
  }
  long long d2 = 0;
  for (const auto& r : rows) d2 = std::gcd(d2, r[1]);
  std::vector<std::array<long long, 2>> out;
  if (d2 > 0) out.push_back({0, d2});
  return out;
}

// Difference constraints c[to] - c[from] = rhs on orbit indices; zero on
// the first orbit of each component.
std::optional<std::vector<long long>> solve_offsets(
    int t, const std::vector<std::array<long long, 3>>& edges) {
  std::vector<std::vector<std::pair<int, long long>>> adj(t);
  for (const auto& e : edges) {
    adj[static_cast<int>(e[1])].push_back({static_cast<int>(e[0]), e[2]});
    adj[static_cast<int>(e[0])].push_back({static_cast<int>(e[1]), -e[2]});
  }
  std::vector<long long> c(t, 0);
  std::vector<char> seen(t, 0);
  for (int s = 0; s < t; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (auto [v, d] : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          c[v] = c[u] + d;
          queue.push_back(v);
        } else if (c[v] != c[u] + d)
          return std::nullopt;
      }
    }
  }
  return c;
}

Z0Plan z0_rigid(const RfInfo& info, std::size_t sss_cap,
                std::size_t root_budget) {
  GeneratorSet zg = pa_centralizer_gens(info.bhat(), sss_cap, root_budget);
  const BraidWord& aw = zg.gens[0].word;
  const BraidWord& rw = zg.gens[1].word;
  const Permutation pa = permutation_of(aw);
  const Permutation pr = permutation_of(rw);
  const long long oa = perm_order(pa);
  const long long orr = perm_order(pr);
  std::vector<std::array<long long, 2>> rows = {{oa, 0}, {0, orr}};
  for (long long a = 0; a < oa; ++a)
    for (long long b = 0; b < orr; ++b) {
      if (a == 0 && b == 0) continue;
      if (consistent_perm(info, perm_pow(pa, a).then(perm_pow(pr, b))))
        rows.push_back({a, b});
    }
  Z0Plan plan;
  for (const auto& v : hnf2(rows)) {
    BraidWord g = free_reduce(concat(power(aw, static_cast<int>(v[0])),
                                     power(rw, static_cast<int>(v[1]))));
    if (is_trivial(g)) continue;
    if (!consistent_word(info, g)) {
      plan.complete = false;
      continue;
    }
    plan.words.push_back(g);
    plan.fills.push_back(star_filling(info, permutation_of(g)));
  }
  // The consistent group is abelian here; aim for commuting section images
  // by shifting the per-orbit constants of one filling.
  if (plan.words.size() == 2) {
    BraidWord h1 = filled_section(info, plan.words[0], plan.fills[0]);
    BraidWord h2 = filled_section(info, plan.words[1], plan.fills[1]);
    if (!commutes(h1, h2)) {
      const Permutation p1i = permutation_of(plan.words[0]).inverse();
      const Permutation p2i = permutation_of(plan.words[1]).inverse();
      const std::vector<long long>& f1 = plan.fills[0];
      const std::vector<long long>& f2 = plan.fills[1];
      auto resid = [&](int u) {
        return f1[u] - f1[p2i[u]] + f2[p1i[u]] - f2[u];
      };
      bool fixed = false;
      {
        std::vector<std::array<long long, 3>> edges;
        for (int u = 0; u < info.m; ++u)
          edges.push_back({info.orbit_of[p2i[u]], info.orbit_of[u], resid(u)});
        if (auto c = solve_offsets(info.t, edges)) {
          for (int u = 0; u < info.m; ++u)
            plan.fills[0][u] += (*c)[info.orbit_of[u]];
          fixed = true;
        }
      }
      if (!fixed) {
        std::vector<std::array<long long, 3>> edges;
        for (int u = 0; u < info.m; ++u)
          edges.push_back({info.orbit_of[p1i[u]], info.orbit_of[u], -resid(u)});
        if (auto c = solve_offsets(info.t, edges)) {
          for (int u = 0; u < info.m; ++u)
            plan.fills[1][u] += (*c)[info.orbit_of[u]];
          fixed = true;
        }
      }
      if (fixed) {
        h1 = filled_section(info, plan.words[0], plan.fills[0]);
        h2 = filled_section(info, plan.words[1], plan.fills[1]);
      }
      if (!commutes(h1, h2)) plan.complete = false;
    }
  }
  return plan;
}

Z0Plan z0_plan(const RfInfo& info, const TubData& td, std::size_t sss_cap,
               std::size_t root_budget) {
  Z0Plan plan;
  switch (td.kind) {
    case TubKind::Pure:
      plan = z0_pure(info);
      break;
    case TubKind::Rotation:
      plan = z0_rotation_normalized(info, td.rot_kind, td.k_mod);
      break;
    case TubKind::Rigid:
      plan = z0_rigid(info, sss_cap, root_budget);
      break;
  }
  if (!td.covered) plan.complete = false;
  return plan;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string tag_name(const Generator& g) {
  switch (g.tag) {
    case GenTag::Interior:
      // Orbits are numbered from 1 in rendered output.
      return "interior(" + std::to_string(g.orbit + 1) + ")";
    case GenTag::Section:
      return "section";
    case GenTag::PeriodicLift:
      return "periodic-lift";
    case GenTag::PaRoot:
      return "pa-root";
    case GenTag::PaPeriodic:
      return "pa-periodic";
  }
  throw InternalError("unknown tag");
}

long long bound_p(int n) {
  if (n < 1) throw InvalidArgument("braids need at least one strand");
  const long long k = n / 2;
  return n % 2 == 0 ? k * (k + 1) / 2 : k * (k + 3) / 2;
}

std::vector<BraidWord> mixed_group_gens(const MixedPartition& p) {
  const int n = p.n;
  if (n < 1) throw InvalidArgument("braids need at least one strand");
  std::vector<char> used(n + 1, 0);
  std::vector<std::vector<int>> cs;
  for (const std::vector<int>& block : p.cosets) {
    if (block.empty()) throw InvalidArgument("empty block");
    std::vector<int> b = block;
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n || used[x])
        throw InvalidArgument("blocks must partition the strands");
      used[x] = 1;
    }
    cs.push_back(b);
  }
  for (int x = 1; x <= n; ++x)
    if (!used[x]) throw InvalidArgument("blocks must cover the strands");
  std::sort(cs.begin(), cs.end());
  std::vector<BraidWord> out;
  for (const std::vector<int>& c : cs) {
    const int q = static_cast<int>(c.size());
    if (q >= 2) out.push_back(band_gen(n, c[0], c[1]));
    if (q == 3) out.push_back(band_gen(n, c[1], c[2]));
    if (q >= 4) {
      BraidWord chain(n);
      for (int i = 0; i + 1 < q; ++i)
        chain = concat(chain, band_gen(n, c[i], c[i + 1]));
      out.push_back(chain);
    }
  }
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      const int v = cs[b][0];
      int u = -1;
      for (int x : cs[a])
        if (x < v) u = x;
      if (u < 0) throw InternalError("blocks out of order");
      out.push_back(band_square(n, u, v));
    }
  if (static_cast<long long>(out.size()) >
      static_cast<long long>(n) * (n - 1) / 2)
    throw InternalError("mixed generating set exceeds its bound");
  return out;
}

BraidWord theta_lift(int n, long long k, const BraidWord& x) {
  if (n < 1) throw InvalidArgument("braids need at least one strand");
  const long long km = ((k % n) + n) % n;
  const int d =
      km == 0 ? n : static_cast<int>(std::gcd(static_cast<long long>(n), km));
  if (d == n)
    throw NotApplicable("the full group is its own centralizer; nothing to lift");
  if (x.n != d) throw StrandMismatch("lift expects a braid on gcd(n,k) strands");
  const int r = n / d;
  BraidWord out(n);
  // For d = 2 the letters and the rotation coincide; the letterwise lift
  // takes precedence there, so the rotation case needs d >= 3.
  if (d >= 3 && nf_equal(x, periodic_delta(d)))
    out = periodic_delta(n);
  else if (d >= 3 && nf_equal(x, invert(periodic_delta(d))))
    out = invert(periodic_delta(n));
  else {
    for (int e : x.letters) {
      const int c = std::abs(e);
      for (int j = 0; j < r; ++j)
        out.letters.push_back(e > 0 ? j * d + c : -(j * d + c));
    }
  }
  if (!commutes(out, power(periodic_delta(n), static_cast<int>(km))))
    throw InvalidArgument("word lies outside the symmetric lift's domain");
  return out;
}

GeneratorSet periodic_centralizer_gens(PeriodicKind kind, int n, long long k) {
  if (n < 1) throw InvalidArgument("braids need at least one strand");
  GeneratorSet out{periodic_model(n, kind, k), {}, bound_p(n), true};
  if (n == 1) return out;
  const long long period = kind == PeriodicKind::Delta ? n : n - 1;
  const long long km = period == 0 ? 0 : ((k % period) + period) % period;
  auto push = [&](BraidWord g) {
    g = free_reduce(g);
    if (!commutes(g, out.target))
      throw InternalError("rotation centralizer generator fails to commute");
    out.gens.push_back({std::move(g), GenTag::PeriodicLift, -1});
  };
  if (km == 0) {
    push(sigma_word(n, 1));
    if (n >= 3) push(periodic_delta(n));
    return out;
  }
  if (kind == PeriodicKind::Delta) {
    const int d = static_cast<int>(std::gcd(static_cast<long long>(n), km));
    push(periodic_delta(n));
    if (d >= 2) {
      BraidWord sym(n);
      for (int j = 0; j < n / d; ++j) sym.letters.push_back(j * d + 1);
      push(sym);
    }
  } else {
    const int d = static_cast<int>(std::gcd(static_cast<long long>(n - 1), km));
    push(periodic_gamma(n));
    if (d >= 2) {
      BraidWord sym(n);
      for (int j = 0; j < (n - 1) / d; ++j) sym.letters.push_back(j * d + 2);
      push(sym);
    }
  }
  return out;
}

std::vector<BraidWord> z0_gens(const RegularForm& rf, std::size_t sss_cap) {
  RfInfo info = build_info(rf);
  TubData td = tubular_kind(info.bhat(), sss_cap);
  std::vector<BraidWord> out;
  if (td.kind == TubKind::Rotation) {
    const int m = info.m;
    const int off = td.rot_kind == PeriodicKind::Gamma ? 1 : 0;
    const int d = static_cast<int>(
        std::gcd(static_cast<long long>(m - off), td.k_mod));
    const int r = (m - off) / d;
    const BraidWord model = periodic_model(m, td.rot_kind, td.k_full);
    if (permutation_of(td.xi).is_identity() &&
        permutation_of(info.bhat()) == permutation_of(model) &&
        nf_equal(info.bhat(), model)) {
      out = z0_rotation_normalized(info, td.rot_kind, td.k_mod).words;
    } else {
      // Transport the model alphabet through the normalizing conjugator:
      // tube u of this layout plays model tube pxi(u).
      const Permutation pxinv = permutation_of(td.xi).inverse();
      std::map<int, std::vector<int>> by_class;
      for (int c = 0; c < d; ++c) {
        const int raw = pxinv[c + off];
        for (int j = 1; j < r; ++j)
          if (info.orbit_of[pxinv[c + off + j * d]] != info.orbit_of[raw])
            throw InternalError("conjugator breaks the orbit matching");
        by_class[info.class_id[info.orbit_of[raw]]].push_back(c);
      }
      std::vector<std::vector<int>> pset;
      for (auto& [key, cls] : by_class) pset.push_back(cls);
      std::sort(pset.begin(), pset.end());
      for (const AtomSeq& seq : rotation_alphabet(off, d, r, pset)) {
        BraidWord g = free_reduce(conjugate(
            flatten_atoms(m, td.rot_kind, seq), invert(td.xi)));
        if (consistent_word(info, g)) out.push_back(g);
      }
    }
  } else {
    Z0Plan plan = td.kind == TubKind::Pure
                      ? z0_pure(info)
                      : z0_rigid(info, sss_cap, 1000000);
    out = plan.words;
  }
  for (const BraidWord& g : out)
    if (!consistent_word(info, g))
      throw InternalError("inconsistent tube-level generator");
  // Emit only words whose star-filled section certifies, so section_h is
  // guaranteed to succeed on everything returned here.
  std::vector<BraidWord> viable;
  for (BraidWord& g : out) {
    BraidWord h =
        filled_section(info, g, star_filling(info, permutation_of(g)));
    if (commutes(h, info.wreg) && nf_equal(project_p(info.dec(), h), g))
      viable.push_back(std::move(g));
  }
  return viable;
}

BraidWord section_h(const RegularForm& rf, const BraidWord& eta) {
  RfInfo info = build_info(rf);
  check_consistent(info, eta);
  BraidWord h =
      filled_section(info, eta, star_filling(info, permutation_of(eta)));
  if (!commutes(h, info.wreg))
    throw FillingSearchFailed("no tube filling commutes with the regular braid");
  if (!nf_equal(project_p(rf.decomposition, h), eta))
    throw InternalError("section fails to project back");
  return h;
}

std::optional<CommutingPeriodic> pa_commuting_periodic(const BraidWord& w,
                                                       std::size_t sss_cap) {
  const int n = w.n;
  if (n < 3) return std::nullopt;
  const BraidWord half = half_twist(n);
  std::optional<SummitSet<DualOps>> sss;
  try {
    sss.emplace(summit_closure<DualOps>(w, sss_cap));
  } catch (const BudgetExceeded&) {
  }
  struct GCtx {
    BraidWord X, wp;
    std::optional<SummitSet<DualOps>> sss;
  };
  std::vector<GCtx> gs;
  const Permutation pw = permutation_of(w);
  for (int p = 1; p <= n; ++p) {
    if (pw[p - 1] != p - 1) continue;
    GCtx ctx;
    ctx.X = BraidWord(n);
    for (int i = p - 1; i >= 1; --i) ctx.X.letters.push_back(i);
    ctx.wp = free_reduce(conjugate(w, ctx.X));
    try {
      ctx.sss.emplace(
          summit_closure<DualOps>(forget_strand(ctx.wp, 1), sss_cap));
    } catch (const BudgetExceeded&) {
    }
    gs.push_back(std::move(ctx));
  }
  const BraidWord half1 = half_twist(n - 1);
  BraidWord loop(n);
  for (int i = 1; i <= n - 1; ++i) loop.letters.push_back(i);
  for (int i = n - 1; i >= 1; --i) loop.letters.push_back(i);

  auto symmetric = [](const auto& nf, long long k) {
    for (const Permutation& f : nf.factors)
      if (!is_rotation_symmetric(f, k)) return false;
    return true;
  };

  for (long long k = 1; k < n; ++k) {
    if (sss) {
      for (const auto& [key, tr] : sss->elements) {
        if (!symmetric(tr.nf, k)) continue;
        BraidWord rho = free_reduce(
            conjugate(power(dual_delta(n), static_cast<int>(k)),
                      invert(tr.conj)));
        if (!commutes(rho, w)) continue;
        BraidWord cc = free_reduce(concat(tr.conj, invert(half)));
        if (!nf_equal(conjugate(rho, cc),
                      periodic_model(n, PeriodicKind::Delta, k)))
          throw InternalError("rotation certificate fails to verify");
        return CommutingPeriodic{std::move(rho), PeriodicKind::Delta, k,
                                 std::move(cc)};
      }
    }
    if (k > n - 2) continue;
    const BraidWord gam = periodic_model(n, PeriodicKind::Gamma, k);
    for (GCtx& ctx : gs) {
      if (!ctx.sss) continue;
      int tried = 0;
      for (const auto& [key, tr] : ctx.sss->elements) {
        if (!symmetric(tr.nf, k)) continue;
        if (++tried > 5) break;
        BraidWord base = shift_letters(
            free_reduce(conjugate(word_of_bkl_nf(tr.nf), invert(half1))), 1, n);
        // Lifts of the quotient differ by loops of the central strand;
        // probe a few winding numbers, guided by the commutation defect.
        std::vector<long long> js = {0, 1, -1, 2, -2, 3, -3};
        BraidWord defect = free_reduce(
            concat(conjugate(base, invert(gam)), invert(base)));
        const long long guess = exponent_sum(defect) / (2 * (n - 1));
        for (long long g : {guess, guess + 1, guess - 1, -guess, -guess - 1})
          if (std::find(js.begin(), js.end(), g) == js.end()) js.push_back(g);
        for (long long j : js) {
          for (int side = 0; side < 2; ++side) {
            BraidWord lp = power(loop, static_cast<int>(j));
            BraidWord cand = free_reduce(side == 0 ? concat(lp, base)
                                                   : concat(base, lp));
            if (!commutes(cand, gam)) continue;
            std::optional<BraidWord> c2;
            try {
              c2 = conjugating_witness<ClassicalOps>(ctx.wp, cand, sss_cap);
            } catch (const BudgetExceeded&) {
            }
            if (!c2) continue;
            BraidWord cc = free_reduce(concat(ctx.X, *c2));
            BraidWord rho = free_reduce(conjugate(gam, invert(cc)));
            if (!commutes(rho, w)) continue;
            if (!nf_equal(conjugate(rho, cc), gam))
              throw InternalError("rotation certificate fails to verify");
            return CommutingPeriodic{std::move(rho), PeriodicKind::Gamma, k,
                                     std::move(cc)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<BraidWord> kth_root_bounded(const BraidWord& w, long long k,
                                          std::size_t budget) {
  if (k <= 0) throw InvalidArgument("root degree must be positive");
  if (k == 1) return free_reduce(w);
  const int n = w.n;
  const long long es = exponent_sum(w);
  if (es % k != 0) return std::nullopt;
  const GarsideNF nfw = nf_of_word(w);
  const long long esD = static_cast<long long>(n) * (n - 1) / 2;
  auto fdiv = [](long long a, long long b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  auto cdiv = [](long long a, long long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  const long long plo = fdiv(nfw.inf, k) - 1;
  const long long phi = cdiv(nfw.inf + nfw.len(), k) + 1;
  const int L = static_cast<int>(nfw.len() / k) + 2;
  struct Simple {
    BraidWord word;
    long long es;
  };
  std::vector<Simple> simples;
  const Permutation dp = delta_perm(n);
  for (const Permutation& s : all_simples(n)) {
    if (s.is_identity() || s == dp) continue;
    BraidWord sw = positive_word_of_permutation(s);
    simples.push_back({sw, static_cast<long long>(sw.letters.size())});
  }
  std::sort(simples.begin(), simples.end(),
            [](const Simple& a, const Simple& b) {
              return a.es != b.es ? a.es < b.es
                                  : a.word.letters < b.word.letters;
            });
  std::size_t visited = 0;
  std::vector<const Simple*> chosen;
  std::optional<BraidWord> found;
  const BraidWord half = half_twist(n);
  auto dfs = [&](auto&& self, const BraidWord& prefix, long long need,
                 int slots) -> void {
    if (found) return;
    if (++visited > budget)
      throw BudgetExceeded("root candidate budget exhausted");
    if (need == 0) {
      BraidWord cand(n);
      cand.letters = prefix.letters;
      for (const Simple* s : chosen)
        cand.letters.insert(cand.letters.end(), s->word.letters.begin(),
                            s->word.letters.end());
      cand = free_reduce(cand);
      if (nf_equal(power(cand, static_cast<int>(k)), w)) found = cand;
      return;
    }
    if (slots == 0 || need < 0 || need > slots * (esD - 1)) return;
    for (const Simple& s : simples) {
      if (s.es > need) break;
      chosen.push_back(&s);
      self(self, prefix, need - s.es, slots - 1);
      chosen.pop_back();
      if (found) return;
    }
  };
  for (long long p = plo; p <= phi && !found; ++p) {
    dfs(dfs, power(half, static_cast<int>(p)), es / k - p * esD, L);
  }
  return found;
}

GeneratorSet pa_centralizer_gens(const BraidWord& w, std::size_t sss_cap,
                                 std::size_t root_budget) {
  const int n = w.n;
  std::optional<CommutingPeriodic> cp = pa_commuting_periodic(w, sss_cap);
  BraidWord rho = cp ? cp->rho : full_twist(n);
  // Candidates for the second generator: w shifted by powers of rho, and
  // bounded roots thereof; the smallest certified candidate wins.
  auto score_of = [](const BraidWord& u) -> std::array<long long, 3> {
    const GarsideNF nf = nf_of_word(u);
    return {nf.len(), std::abs(exponent_sum(u)),
            std::abs(static_cast<long long>(nf.inf))};
  };
  BraidWord alpha = free_reduce(w);
  std::array<long long, 3> best = score_of(alpha);
  auto offer = [&](const BraidWord& c) {
    if (is_trivial(c) || !commutes(c, w)) return;
    const std::array<long long, 3> s = score_of(c);
    if (s < best) {
      best = s;
      alpha = free_reduce(c);
    }
  };
  // Proper simples bound the root search box; skip degrees whose box could
  // not be exhausted within budget anyway.
  double nsimple = 1;
  for (int i = 2; i <= n; ++i) nsimple *= i;
  nsimple -= 2;
  for (int mshift : {0, 1, -1, 2, -2}) {
    BraidWord u = free_reduce(concat(w, power(rho, -mshift)));
    if (is_trivial(u)) continue;
    offer(u);
    const long long es = exponent_sum(u);
    std::vector<long long> ks;
    if (es == 0)
      ks = {4, 3, 2};
    else
      for (long long kk = std::abs(es); kk >= 2 && ks.size() < 4; --kk)
        if (std::abs(es) % kk == 0) ks.push_back(kk);
    for (long long kk : ks) {
      const long long len = nf_of_word(u).len();
      double box = 1;
      for (int i = 0; i < static_cast<int>(len / kk) + 2; ++i) box *= nsimple;
      if (box > 8.0 * static_cast<double>(root_budget)) continue;
      std::optional<BraidWord> c;
      try {
        c = kth_root_bounded(u, kk, root_budget);
      } catch (const BudgetExceeded&) {
        continue;
      }
      if (c) offer(*c);
    }
  }
  GeneratorSet out{w, {}, bound_p(n), true};
  if (!commutes(alpha, w) || !commutes(rho, w))
    throw InternalError("rigid centralizer generator fails to commute");
  out.gens.push_back({std::move(alpha), GenTag::PaRoot, -1});
  out.gens.push_back({std::move(rho), GenTag::PaPeriodic, -1});
  return out;
}

GeneratorSet centralizer_gens(const BraidWord& w,
                              const CentralizerConfig& cfg) {
  const int n = w.n;
  GeneratorSet out{w, {}, bound_p(n), true};
  if (n == 1) return out;
  if (n == 2) {
    out.gens.push_back({sigma_word(2, 1), GenTag::PeriodicLift, -1});
    return out;
  }
  try {
    ClassifyConfig cc;
    cc.sss_cap = cfg.sss_cap;
    NTClass cls = classify(w, cc);
    if (const Periodic* per = std::get_if<Periodic>(&cls)) {
      GeneratorSet model = periodic_centralizer_gens(per->kind, n, per->k);
      for (Generator& g : model.gens) {
        BraidWord t = free_reduce(conjugate(g.word, invert(per->conjugator)));
        if (!commutes(t, w))
          throw InternalError(
              "transported rotation generator fails to commute");
        out.gens.push_back({std::move(t), GenTag::PeriodicLift, -1});
      }
      return out;
    }
    if (std::holds_alternative<PseudoAnosov>(cls))
      return pa_centralizer_gens(w, cfg.sss_cap, cfg.root_budget);

    const Reducible& red = std::get<Reducible>(cls);
    RegularForm rf = to_regular_form(
        decompose(w, red.reduction, red.rounding_conjugator), cfg.sss_cap);
    TubData td = tubular_kind(rf.decomposition.tubular, cfg.sss_cap);
    if (td.kind == TubKind::Rotation) {
      // Conjugate so that the tubular braid becomes the model rotation,
      // whose orbits, heads and symmetric words are explicit.
      const TubularDecomposition& d = rf.decomposition;
      const int m = d.tube_count();
      std::vector<int> sizes(m);
      for (int j = 0; j < m; ++j) sizes[j] = d.tube_size(j);
      const Permutation pxi = permutation_of(td.xi);
      std::vector<int> nsz(m);
      for (int u = 0; u < m; ++u) nsz[pxi[u]] = sizes[u];
      RoundMulticurve circles;
      int at = 0;
      for (int v = 0; v < m; ++v) {
        if (nsz[v] >= 2 && nsz[v] < n)
          circles.push_back({at + 1, at + nsz[v]});
        at += nsz[v];
      }
      BraidWord call = free_reduce(
          concat(rf.conjugator, cable(td.xi, CablePattern{sizes, {}})));
      rf = to_regular_form(decompose(w, circles, call), cfg.sss_cap);
      // The exponent is not reduced: the tube braid carries its full
      // twists, so compare against the model with the same twists.
      const BraidWord model = periodic_model(m, td.rot_kind, td.k_full);
      if (!nf_equal(rf.decomposition.tubular, model) ||
          !(permutation_of(rf.decomposition.tubular) ==
            permutation_of(model)))
        throw InternalError("rotation normalization failed");
    }
    RfInfo info = build_info(rf);
    Z0Plan z0;
    try {
      z0 = z0_plan(info, td, cfg.sss_cap, cfg.root_budget);
    } catch (const BudgetExceeded&) {
      z0 = Z0Plan{};
      z0.complete = false;
    }
    out.complete = z0.complete;

    // Certify a section for each tube-level word up front; a word with no
    // certified filling is dropped rather than emitted unproven, and takes
    // the completeness claim with it.
    std::vector<BraidWord> sections;
    {
      std::vector<BraidWord> words;
      std::vector<std::vector<long long>> fills;
      for (std::size_t i = 0; i < z0.words.size(); ++i) {
        BraidWord h = filled_section(info, z0.words[i], z0.fills[i]);
        if (!commutes(h, info.wreg)) {
          z0.fills[i] = star_filling(info, permutation_of(z0.words[i]));
          h = filled_section(info, z0.words[i], z0.fills[i]);
        }
        if (!commutes(h, info.wreg) ||
            !nf_equal(project_p(info.dec(), h), z0.words[i])) {
          out.complete = false;
          continue;
        }
        sections.push_back(std::move(h));
        words.push_back(std::move(z0.words[i]));
        fills.push_back(std::move(z0.fills[i]));
      }
      z0.words = std::move(words);
      z0.fills = std::move(fills);
    }

    // Orbits reachable from one another through the tube-level generators
    // share one recursion; the sections carry its images around.
    std::vector<int> comp(info.t);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const BraidWord& g : z0.words) {
      const Permutation pg = permutation_of(g);
      for (int i = 0; i < info.t; ++i) {
        const int j = info.orbit_of[pg[info.dec().orbits[i][0]]];
        const int a = find(i), b = find(j);
        if (a != b) comp[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int i = 0; i < info.t; ++i) {
      if (find(i) != i) continue;
      if (info.dec().orbit_size(i) < 2) continue;
      GeneratorSet sub = centralizer_gens(rf.nontrivial[i], cfg);
      out.complete = out.complete && sub.complete;
      for (const Generator& sg : sub.gens)
        out.gens.push_back({g_embed(rf, i, sg.word), GenTag::Interior, i});
    }
    // Sections compose by relocating fillings along the tube permutation;
    // spot-check that on every pair before emitting.
    for (std::size_t i = 0; i < sections.size() && out.complete; ++i)
      for (std::size_t j = 0; j < sections.size() && out.complete; ++j) {
        if (i == j) continue;
        const Permutation pjinv = permutation_of(z0.words[j]).inverse();
        std::vector<long long> fcomb(info.m);
        for (int u = 0; u < info.m; ++u)
          fcomb[u] = z0.fills[i][pjinv[u]] + z0.fills[j][u];
        BraidWord prod = filled_section(
            info, free_reduce(concat(z0.words[i], z0.words[j])), fcomb);
        if (!nf_equal(prod, concat(sections[i], sections[j])))
          out.complete = false;
      }
    for (BraidWord& h : sections)
      out.gens.push_back({std::move(h), GenTag::Section, -1});

    const BraidWord back = invert(rf.conjugator);
    for (Generator& g : out.gens) {
      g.word = free_reduce(conjugate(g.word, back));
      if (!commutes(g.word, w))
        throw InternalError("centralizer generator fails to commute");
    }
    if (out.complete &&
        static_cast<long long>(out.gens.size()) > out.bound)
      throw InternalError("generator count exceeds the bound");
    return out;
  } catch (const BudgetExceeded&) {
    // Last resort: the braid itself and the full twist always commute.
    out.gens.clear();
    out.gens.push_back({free_reduce(w), GenTag::PaRoot, -1});
    out.gens.push_back({full_twist(n), GenTag::PaPeriodic, -1});
    out.complete = false;
    return out;
  }
}

}  // namespace braidcent
