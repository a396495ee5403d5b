#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "braidcent/braid_word.hpp"
#include "braidcent/curves.hpp"

namespace braidcent {

// Dynamical classification of a braid: conjugate to a rotation, preserving
// a round multicurve up to conjugacy, or neither.  The first two cases come
// with machine-checkable certificates.

enum class PeriodicKind { Delta, Gamma };

// Rotation models: delta = s1 s2 ... s_{n-1} with delta^n = Delta^2, and
// gamma = s1 * delta with gamma^{n-1} = Delta^2.
BraidWord periodic_delta(int n);
BraidWord periodic_gamma(int n);
// delta^k resp. gamma^k.
BraidWord periodic_model(int n, PeriodicKind kind, long long k);

struct Periodic {
  PeriodicKind kind = PeriodicKind::Delta;
  long long k = 0;
  // conjugate(w, conjugator) equals periodic_model(n, kind, k).
  BraidWord conjugator;
};

struct Reducible {
  // Outermost invariant round system of the rounded conjugate.
  RoundMulticurve reduction;
  // conjugate(w, rounding_conjugator) preserves `reduction`.
  BraidWord rounding_conjugator;
  // Whether the power scan saw one single laminar family of invariant
  // round curves; best effort, see crs_power_scan.
  bool crs_exact = false;
};

struct PseudoAnosov {};

using NTClass = std::variant<Periodic, Reducible, PseudoAnosov>;

// Periodicity from the normal forms of w^n and w^{n-1}: w is periodic iff
// one of the two is a power of the full twist (empty factor list, even
// infimum).  The recovered exponent is cross-checked against the exponent
// sum.
std::optional<std::pair<PeriodicKind, long long>> is_periodic(const BraidWord& w);

// A conjugator c with conjugate(w, c) equal to the model power; requires
// is_periodic(w) == (kind, k).  The result is verified before returning;
// failure to find one indicates a bug and throws ConjugacySearchFailed.
BraidWord periodic_certificate(const BraidWord& w, PeriodicKind kind,
                               long long k, std::size_t sss_cap = 100000);

struct ReductionSearchConfig {
  std::size_t sss_cap = 100000;
  SystemEnumerationConfig curves{};
};

struct Reduction {
  RoundMulticurve system;
  BraidWord conjugator;
};

// Scans the super summit set of w -- the input's own summit representative
// first, then the remaining elements in canonical order -- for an element
// preserving a nonempty round system.  Returns the reduction circles
// visible on that element (curves of invariant round systems compatible
// with all their peers, outermost only) with the tracked conjugator.
// Absent iff no summit conjugate preserves any round system; requires w
// non-periodic.
std::optional<Reduction> find_reduction(const BraidWord& w,
                                        const ReductionSearchConfig& cfg = {});

struct CrsScan {
  // The input system plus all compatible power-invariant round curves.
  RoundMulticurve curves;
  // Least j certifying invariance under w^j, aligned with `curves`
  // (0 for an input curve not individually invariant within the bound).
  std::vector<int> found_at;
  // True when every power-invariant round curve found fits one laminar
  // family.
  bool exact = false;
};

// Augments an invariant round system of w with the round curves invariant
// under some power w^j, 1 <= j <= power_bound (default: strand count),
// keeping those compatible with every other power-invariant curve found.
CrsScan crs_power_scan(const BraidWord& w, const RoundMulticurve& reduction,
                       int power_bound = 0);

struct ClassifyConfig {
  std::size_t sss_cap = 100000;
  SystemEnumerationConfig curves{};
  int power_bound = 0;
};

// Trichotomy with verified certificates: Periodic wins over Reducible.
NTClass classify(const BraidWord& w, const ClassifyConfig& cfg = {});

}  // namespace braidcent
