#pragma once

#include <compare>
#include <vector>

#include "braidcent/braid_word.hpp"

namespace braidcent {

// Left greedy normal form Delta^inf f_1 ... f_k where each f_i is a
// permutation braid (every pair of strands crosses at most once), no f_i is
// trivial or the half twist, and each adjacent pair is left weighted.
struct GarsideNF {
  int n = 1;
  int inf = 0;
  std::vector<Permutation> factors;

  int len() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + len(); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

// The half twist on n strands as a permutation (order reversal).
Permutation delta_perm(int n);
// Fixed positive word for the half twist: s1 (s2 s1) (s3 s2 s1) ...
BraidWord delta_word(int n);

// Generator indices i (1-based) with s = sigma_i * (positive rest).
std::vector<int> starting_set(const Permutation& s);
// Generator indices i with s = (positive rest) * sigma_i.
std::vector<int> finishing_set(const Permutation& s);

// Conjugation by the half twist, tau(s) = Delta^-1 s Delta; an involution.
Permutation tau_simple(const Permutation& s);
// tau^k, which only depends on the parity of k.
Permutation tau_power(const Permutation& s, long long k);

// The simple r with s r = Delta.
Permutation right_complement(const Permutation& s);

// Rewrites a b as a' b' with the pair left weighted; returns true if the
// pair changed.  b' may become the identity.
bool make_left_weighted(Permutation& a, Permutation& b);

// Restores the normal form invariants of an arbitrary factor list.
void normalize(GarsideNF& nf);

GarsideNF nf_of_word(const BraidWord& w);
BraidWord word_of_nf(const GarsideNF& nf);
GarsideNF nf_product(const GarsideNF& a, const GarsideNF& b);
GarsideNF nf_inverse(const GarsideNF& a);
GarsideNF nf_power(const GarsideNF& a, long long k);

// Word problem: equal as elements of the braid group.
bool nf_equal(const BraidWord& a, const BraidWord& b);
bool is_trivial(const BraidWord& a);
bool commutes(const BraidWord& a, const BraidWord& b);

// Canonical order: lexicographic on (inf, factor permutation tables).
std::strong_ordering compare_nf(const GarsideNF& a, const GarsideNF& b);

// All permutation braids on n strands, in lexicographic order; n! entries.
std::vector<Permutation> all_simples(int n);

}  // namespace braidcent
