#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidcent/braid_word.hpp"
#include "braidcent/classify.hpp"
#include "braidcent/tubular.hpp"

namespace braidcent {

// How a centralizer generator was obtained: inside a tube orbit, as a
// filled tube-level braid, as a conjugated rotation generator, or as the
// root/periodic part of a rigid centralizer.
enum class GenTag { Interior, Section, PeriodicLift, PaRoot, PaPeriodic };

struct Generator {
  BraidWord word;
  GenTag tag = GenTag::Section;
  int orbit = -1;  // tube orbit for Interior generators, else -1
};

// "interior(2)", "section", "periodic-lift", "pa-root", "pa-periodic".
std::string tag_name(const Generator& g);

// A generating set for the centralizer of `target`.  Every generator is
// checked to commute with the target before it is returned, and the count
// never exceeds the bound.  `complete` drops to false when a search budget
// forced a fallback that may omit generators (the emitted ones stay valid).
struct GeneratorSet {
  BraidWord target;
  std::vector<Generator> gens;
  long long bound = 0;
  bool complete = true;
};

// Largest number of generators ever needed in B_n:
// k(k+1)/2 for n = 2k and k(k+3)/2 for n = 2k+1.
long long bound_p(int n);

// A partition of the strands {1..n} into blocks; braids whose permutation
// preserves every block form the mixed braid group of the partition.
struct MixedPartition {
  int n = 1;
  std::vector<std::vector<int>> cosets;
};

// Generators of the mixed braid group: per block, none for a single
// strand, one band generator for two strands, two for three or more; plus
// one pure band square for every pair of blocks.  At most n(n-1)/2 words.
std::vector<BraidWord> mixed_group_gens(const MixedPartition& p);

// The rotation-symmetric lift B_d -> B_n along the d-fold covering that
// commutes with delta_(n)^k, d = gcd(n, k): delta_(d) maps to delta_(n)
// and each generator of B_d to a product of n/d disjoint bands.  The
// result is checked to commute with delta_(n)^k; a word outside the lift's
// domain fails that check and throws InvalidArgument.  Throws
// NotApplicable when gcd(n, k) = n (the centralizer is all of B_n).
BraidWord theta_lift(int n, long long k, const BraidWord& x);

// Generators of the centralizer of the rotation model delta_(n)^k or
// gamma_(n)^k: the rotation alone when the relevant gcd is 1, the rotation
// plus one symmetric lift otherwise, and {sigma_1, delta_(n)} for central
// powers.  All generators certified.
GeneratorSet periodic_centralizer_gens(PeriodicKind kind, int n, long long k);

// Tube-level braids generating the consistent part of the centralizer of
// the tubular braid: braids commuting with it whose permutation moves each
// tube to one of equal size and equal designated interior.  Trivial or
// central tubular braids give mixed-group generators, rotations give
// symmetric band/winding words, rigid tubular braids give at most two
// power products.  Every output is certified consistent.
std::vector<BraidWord> z0_gens(const RegularForm& rf,
                               std::size_t sss_cap = 100000);

// A filling of psi(eta)'s tubes with powers of the designated interiors
// making the result commute with the regular-form braid
// conjugate(rf.decomposition.base, rf.conjugator), while projecting back
// to eta.  The exponents solve, tube by tube, the matching condition
// between eta's permutation and the position of the designated interiors;
// the free constant of each orbit is pinned to zero at the orbit's first
// tube.  Throws NotConsistent unless eta commutes with the tubular braid
// and respects tube sizes and interior classes.
BraidWord section_h(const RegularForm& rf, const BraidWord& eta);

// A conjugate of a rotation model power commuting with the given braid,
// found by scanning its dual-form summit set for an element whose factors
// are all invariant under the k-step rotation, and, for gamma models, by
// testing the strand-forgetting quotient of each fixed puncture.  The
// certificate conjugates rho back to the model power.  Absent when no
// rotation symmetry is found within the cap (the full twist always
// remains available to callers).
struct CommutingPeriodic {
  BraidWord rho;
  PeriodicKind kind = PeriodicKind::Delta;
  long long k = 1;
  // conjugate(rho, conjugator) equals periodic_model(n, kind, k).
  BraidWord conjugator;
};
std::optional<CommutingPeriodic> pa_commuting_periodic(
    const BraidWord& w, std::size_t sss_cap = 100000);

// A braid c with c^k equal to w, searched among products of a half twist
// power and boundedly many permutation braids with the matching exponent
// sum.  Absent when the bounded search space holds no root; throws
// BudgetExceeded when the candidate budget runs out first.
std::optional<BraidWord> kth_root_bounded(const BraidWord& w, long long k,
                                          std::size_t budget = 1000000);

// The two-generator centralizer of a pseudo-Anosov braid: a root of the
// braid itself (possibly corrected by the periodic part, falling back to
// the braid when the root search is inconclusive) and a commuting
// conjugated rotation (falling back to the full twist).
GeneratorSet pa_centralizer_gens(const BraidWord& w,
                                 std::size_t sss_cap = 100000,
                                 std::size_t root_budget = 1000000);

struct CentralizerConfig {
  std::size_t sss_cap = 100000;
  std::size_t root_budget = 1000000;
};

// Generators of the centralizer of an arbitrary braid, dispatching on its
// dynamical class: conjugated rotation generators for periodic braids,
// root and rotation for pseudo-Anosov ones, and for reducible braids the
// centralizer generators of one interior braid per orbit class embedded in
// its tubes, plus filled tube-level generators, assembled on the regular
// form and conjugated back.  Every generator is certified to commute with
// the input and the count is checked against bound_p.  When a budget runs
// out mid-way the set degrades (no orbit merging, or a minimal certified
// set) and is flagged incomplete.
GeneratorSet centralizer_gens(const BraidWord& w,
                              const CentralizerConfig& cfg = {});

}  // namespace braidcent
