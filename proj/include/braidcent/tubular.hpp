#pragma once

#include <cstddef>
#include <vector>

#include "braidcent/braid_word.hpp"
#include "braidcent/curves.hpp"

namespace braidcent {

// A braid preserving a family of disjoint round circles splits into the
// braid of the tubes and one braid inside each tube.  The stored system
// covers every puncture: the invariant circles plus a degenerate one-strand
// circle for each puncture left outside.  Tubes are numbered by their slot
// in the rounded position, and the tube travelling from circle c to its
// image carries the interior braid recorded at the image's slot.
struct TubularDecomposition {
  BraidWord base;                 // the decomposed braid, on n strands
  BraidWord rounding_conjugator;  // conjugate(base, rounding_conjugator)
                                  // preserves `system`
  RoundMulticurve system;         // disjoint circles covering all punctures
  std::vector<std::vector<int>> orbits;  // cycles of slots under the tubular
                                         // braid, each starting from its
                                         // smallest slot
  BraidWord tubular;              // induced braid, one strand per tube
  std::vector<std::vector<BraidWord>> interiors;  // interiors[i][k]: braid in
                                  // the tube from circle k to circle k+1
                                  // (cyclically) of orbit i

  int tube_count() const { return static_cast<int>(system.size()); }
  int orbit_count() const { return static_cast<int>(orbits.size()); }
  int tube_size(int slot) const {
    return system[slot].b - system[slot].a + 1;
  }
  int orbit_size(int orbit) const { return tube_size(orbits[orbit][0]); }
  int orbit_length(int orbit) const {
    return static_cast<int>(orbits[orbit].size());
  }
  BraidWord rounded() const {
    return free_reduce(conjugate(base, rounding_conjugator));
  }
};

// A decomposition conjugated so that each orbit carries at most one
// nontrivial interior braid, sitting in the tube that closes the cycle, and
// interiors of distinct orbits are either literally equal or non-conjugate.
struct RegularForm {
  TubularDecomposition decomposition;
  std::vector<BraidWord> nontrivial;  // the designated interior per orbit
  BraidWord conjugator;               // from decomposition.base
};

// Splits conjugate(w, rounding_conjugator) along the given invariant circles.
// The circles must be disjoint; punctures not enclosed become one-strand
// tubes.  Throws NotInvariant if the conjugate does not preserve them.
TubularDecomposition decompose(const BraidWord& w,
                               const RoundMulticurve& circles,
                               const BraidWord& rounding_conjugator);

// Pushes all interior braids of each orbit into its closing tube, then
// conjugates interiors of distinct orbits to literally equal words whenever
// they are conjugate.  The returned conjugator starts from the original
// braid of `d`.
RegularForm to_regular_form(const TubularDecomposition& d,
                            std::size_t sss_cap = 100000);

// Conjugator relocating the designated interior of the given orbit into the
// tube leaving its k-th circle (1 <= k <= length - 1).  Trivial tubular
// part; its own interiors equal that braid at circles k+1, ..., length.
BraidWord mu(const RegularForm& rf, int orbit, int k);

// The braid with `inner` inside every tube of the given orbit and nothing
// anywhere else.  `inner` must commute with the orbit's designated interior;
// the result then commutes with the regular braid.
BraidWord g_embed(const RegularForm& rf, int orbit, const BraidWord& inner);

// The tube-level braid `eta` performed with trivial interiors.  Tube sizes
// must agree along the permutation of `eta`, so that the result preserves
// the system.
BraidWord psi(const TubularDecomposition& d, const BraidWord& eta);

// The braid induced on the tubes by a braid preserving the system of `d`.
// A homomorphism; left inverse of psi.  Throws NotTubePreserving.
BraidWord project_p(const TubularDecomposition& d, const BraidWord& alpha);

}  // namespace braidcent
