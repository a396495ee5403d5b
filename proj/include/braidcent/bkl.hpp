#pragma once

#include <compare>
#include <vector>

#include "braidcent/braid_word.hpp"

namespace braidcent {

// The dual (band generator) Garside structure.  Simple elements are the
// noncrossing partitions of the punctures 0..n-1, realized as permutations
// whose cycles run through each block in ascending order; the Garside
// element is the rotation delta = sigma_{n-1} ... sigma_1.

// Rotation u -> u+1 (mod n).
Permutation bkl_delta_perm(int n);

// Band generator swapping punctures s < t (1-based) in front of the strands
// between them: (sigma_{t-1} ... sigma_{s+1}) sigma_s (sigma_{s+1}^-1 ...).
BraidWord band_word(int n, int s, int t);

// Whether p consists of descending cycles on pairwise noncrossing blocks.
bool is_nc_simple(const Permutation& p);

// Nontrivial blocks (sorted, 0-based), ordered by smallest element.
std::vector<std::vector<int>> nc_blocks(const Permutation& p);
Permutation nc_simple_from_blocks(int n,
                                  const std::vector<std::vector<int>>& blocks);

// Lattice operations under the refinement order, which coincides with both
// left and right divisibility of simples in the dual monoid.
Permutation nc_meet(const Permutation& a, const Permutation& b);
bool nc_refines(const Permutation& a, const Permutation& b);

// The simple r with s r = delta (Kreweras complement).
Permutation bkl_right_complement(const Permutation& s);

// delta^-k s delta^k; shifts all indices by k mod n.
Permutation bkl_tau_power(const Permutation& s, long long k);
inline bool is_rotation_symmetric(const Permutation& s, long long k) {
  return bkl_tau_power(s, k) == s;
}

// Rewrites a b with the pair left weighted; b may become the identity.
bool bkl_make_left_weighted(Permutation& a, Permutation& b);

struct BKLNF {
  int n = 1;
  int inf = 0;
  std::vector<Permutation> factors;

  int len() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + len(); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  friend bool operator==(const BKLNF&, const BKLNF&) = default;
};

void bkl_normalize(BKLNF& nf);
BKLNF bkl_nf_of_word(const BraidWord& w);
BraidWord bkl_word_of_simple(const Permutation& s);
BraidWord word_of_bkl_nf(const BKLNF& nf);
std::strong_ordering compare_bkl_nf(const BKLNF& a, const BKLNF& b);

// All noncrossing simples on n strands, sorted; Catalan(n) entries.
std::vector<Permutation> all_bkl_simples(int n);

}  // namespace braidcent
