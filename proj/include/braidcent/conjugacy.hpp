#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "braidcent/bkl.hpp"
#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"

namespace braidcent {

// The conjugacy machinery below is generic over the two Garside structures;
// an Ops type bundles the handful of primitives that differ.

struct ClassicalOps {
  using NF = GarsideNF;
  static NF nf_of(const BraidWord& w) { return nf_of_word(w); }
  static BraidWord word_of(const NF& x) { return word_of_nf(x); }
  static void renorm(NF& x) { normalize(x); }
  static Permutation delta(int n) { return delta_perm(n); }
  static Permutation tau_pow(const Permutation& s, long long k) {
    return tau_power(s, k);
  }
  static Permutation right_comp(const Permutation& s) {
    return right_complement(s);
  }
  static BraidWord simple_word(const Permutation& s) {
    return positive_word_of_permutation(s);
  }
  static std::vector<Permutation> simples(int n) { return all_simples(n); }
};

struct DualOps {
  using NF = BKLNF;
  static NF nf_of(const BraidWord& w) { return bkl_nf_of_word(w); }
  static BraidWord word_of(const NF& x) { return word_of_bkl_nf(x); }
  static void renorm(NF& x) { bkl_normalize(x); }
  static Permutation delta(int n) { return bkl_delta_perm(n); }
  static Permutation tau_pow(const Permutation& s, long long k) {
    return bkl_tau_power(s, k);
  }
  static Permutation right_comp(const Permutation& s) {
    return bkl_right_complement(s);
  }
  static BraidWord simple_word(const Permutation& s) {
    return bkl_word_of_simple(s);
  }
  static std::vector<Permutation> simples(int n) { return all_bkl_simples(n); }
};

template <class NF>
std::vector<int> nf_key(const NF& x) {
  std::vector<int> key{x.inf};
  for (const Permutation& f : x.factors)
    key.insert(key.end(), f.images().begin(), f.images().end());
  return key;
}

// An element of the conjugacy class together with the conjugating braid
// from the base element: conj^-1 * base * conj = nf.
template <class Ops>
struct Tracked {
  typename Ops::NF nf;
  BraidWord conj;
};

// s^-1 (Delta^p f_1 .. f_k) s = Delta^(p-1) tau^(p-1)(rc(s)) f_1 .. f_k s.
template <class Ops>
typename Ops::NF conj_by_simple(const typename Ops::NF& x,
                                const Permutation& s) {
  typename Ops::NF y;
  y.n = x.n;
  y.inf = x.inf - 1;
  y.factors.reserve(x.len() + 2);
  y.factors.push_back(Ops::tau_pow(Ops::right_comp(s), x.inf - 1));
  for (const Permutation& f : x.factors) y.factors.push_back(f);
  y.factors.push_back(s);
  Ops::renorm(y);
  return y;
}

// Conjugation by tau^(-p)(f_1) moves the first factor to the back.
template <class Ops>
void cycle_step(Tracked<Ops>& t) {
  if (t.nf.len() == 0) return;
  Permutation a = Ops::tau_pow(t.nf.factors.front(), -t.nf.inf);
  typename Ops::NF y;
  y.n = t.nf.n;
  y.inf = t.nf.inf;
  y.factors.assign(t.nf.factors.begin() + 1, t.nf.factors.end());
  y.factors.push_back(a);
  Ops::renorm(y);
  t.conj = free_reduce(concat(t.conj, Ops::simple_word(a)));
  t.nf = y;
}

// Conjugation by f_k^-1 moves the last factor to the front.
template <class Ops>
void decycle_step(Tracked<Ops>& t) {
  if (t.nf.len() == 0) return;
  Permutation z = t.nf.factors.back();
  typename Ops::NF y;
  y.n = t.nf.n;
  y.inf = t.nf.inf;
  y.factors.push_back(Ops::tau_pow(z, t.nf.inf));
  y.factors.insert(y.factors.end(), t.nf.factors.begin(),
                   t.nf.factors.end() - 1);
  Ops::renorm(y);
  t.conj = free_reduce(concat(t.conj, invert(Ops::simple_word(z))));
  t.nf = y;
}

// Cycling raises the infimum and decycling lowers the supremum until the
// element lies in its super summit set.  A probing walk that comes back
// around without gaining is rolled back to its entry point, so an element
// already in its summit set keeps an empty conjugator.
template <class Ops>
void summit_improve(Tracked<Ops>& t, int guard_cap = 100000) {
  auto better = [](const typename Ops::NF& a, const typename Ops::NF& b) {
    return a.inf > b.inf || (a.inf == b.inf && a.len() < b.len());
  };
  int rounds = 0;
  bool improved = true;
  while (improved) {
    if (++rounds > guard_cap)
      throw InternalError("summit search failed to stabilize");
    improved = false;
    for (auto* step : {&cycle_step<Ops>, &decycle_step<Ops>}) {
      Tracked<Ops> mark = t;
      std::set<std::vector<int>> seen;
      while (t.nf.len() > 0) {
        if (!seen.insert(nf_key(t.nf)).second) {
          t = mark;  // a full loop: nothing past the mark can gain
          break;
        }
        step(t);
        if (better(t.nf, mark.nf)) {
          mark = t;
          seen.clear();
          improved = true;
        }
      }
    }
  }
}

template <class Ops>
Tracked<Ops> summit_representative(const BraidWord& w) {
  Tracked<Ops> t{Ops::nf_of(w), BraidWord(w.n)};
  summit_improve(t);
  return t;
}

template <class Ops>
struct SummitSet {
  std::map<std::vector<int>, Tracked<Ops>> elements;
};

// Breadth first closure of the super summit set under conjugation by
// simple elements.  If `target` is given, stops once that key is reached
// and stores only the path found so far.
template <class Ops>
SummitSet<Ops> summit_closure(
    const BraidWord& w, size_t cap,
    const std::optional<std::vector<int>>& target = std::nullopt) {
  SummitSet<Ops> out;
  Tracked<Ops> rep = summit_representative<Ops>(w);
  const std::vector<Permutation> simples = Ops::simples(w.n);
  std::deque<std::vector<int>> queue;

  auto restart = [&](Tracked<Ops> t) {
    out.elements.clear();
    queue.clear();
    std::vector<int> key = nf_key(t.nf);
    queue.push_back(key);
    out.elements.emplace(std::move(key), std::move(t));
  };
  restart(rep);
  if (target && out.elements.count(*target)) return out;

  while (!queue.empty()) {
    Tracked<Ops> cur = out.elements.at(queue.front());
    queue.pop_front();
    for (const Permutation& s : simples) {
      if (s.is_identity()) continue;
      typename Ops::NF y = conj_by_simple<Ops>(cur.nf, s);
      const typename Ops::NF& base = out.elements.begin()->second.nf;
      bool better = y.inf > base.inf ||
                    (y.inf == base.inf && y.len() < base.len());
      if (better) {
        // The breadth first frontier found a smaller conjugate; begin again
        // from there.
        Tracked<Ops> t{std::move(y),
                       free_reduce(concat(cur.conj, Ops::simple_word(s)))};
        summit_improve(t);
        restart(std::move(t));
        if (target && out.elements.count(*target)) return out;
        break;
      }
      if (y.inf != base.inf || y.len() != base.len()) continue;
      std::vector<int> key = nf_key(y);
      if (out.elements.count(key)) continue;
      if (out.elements.size() >= cap)
        throw BudgetExceeded("conjugacy class closure exceeded cap");
      Tracked<Ops> t{std::move(y),
                     free_reduce(concat(cur.conj, Ops::simple_word(s)))};
      out.elements.emplace(key, std::move(t));
      queue.push_back(std::move(key));
      if (target && *target == queue.back()) return out;
    }
  }
  return out;
}

// A braid c with c^-1 a c = b, if the elements are conjugate.
template <class Ops>
std::optional<BraidWord> conjugating_witness(const BraidWord& a,
                                             const BraidWord& b, size_t cap) {
  if (a.n != b.n) throw StrandMismatch("conjugacy across strand counts");
  Tracked<Ops> tb = summit_representative<Ops>(b);
  Tracked<Ops> ta = summit_representative<Ops>(a);
  if (ta.nf.inf != tb.nf.inf || ta.nf.len() != tb.nf.len())
    return std::nullopt;
  std::vector<int> want = nf_key(tb.nf);
  SummitSet<Ops> set = summit_closure<Ops>(a, cap, want);
  auto it = set.elements.find(want);
  if (it == set.elements.end()) return std::nullopt;
  return free_reduce(concat(it->second.conj, invert(tb.conj)));
}

}  // namespace braidcent
