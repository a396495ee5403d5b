#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "braidcent/braid_word.hpp"
#include "braidcent/garside.hpp"

namespace braidcent {

// A round curve: a circle enclosing the consecutive punctures a..b (1-based).
struct RoundCurve {
  int a = 0;
  int b = 0;

  friend bool operator==(const RoundCurve&, const RoundCurve&) = default;
  friend auto operator<=>(const RoundCurve&, const RoundCurve&) = default;
};

// A system of disjoint round curves, kept sorted and duplicate free.
using RoundMulticurve = std::vector<RoundCurve>;

// Encloses at least 2 and at most n-1 punctures.
bool essential(int n, const RoundCurve& c);
// Disjoint or nested; round curves sharing a puncture without nesting cross.
bool compatible(const RoundCurve& x, const RoundCurve& y);
bool is_laminar(const RoundMulticurve& c);
RoundMulticurve normalize_system(RoundMulticurve c);
// The curves of c not strictly contained in another curve of c.
RoundMulticurve outermost_of(const RoundMulticurve& c);

// Text form "{[1,3],[4,5]}"; the empty system is "{}".
RoundMulticurve parse_system(const std::string& text);
std::string format_system(const RoundMulticurve& c);

// Exact integer coordinates of a multicurve on the n-punctured disk, length
// 2n-4: for each interior puncture p = 2..n-1 half the difference between
// passes below and above p, then for each p half the difference of crossing
// numbers with the vertical lines left and right of p.  The zero vector
// encodes the empty multicurve, and coordinates add over disjoint unions.
//
// Alongside the vector we keep one free homotopy class per component (a
// reduced cyclic word in the punctured-disk loop generators x_1..x_n).  The
// braid action transports the classes exactly and recounts the coordinates;
// equality and hashing use the coordinate vector only.
struct LaminationCoords {
  int n = 2;
  std::vector<mpz_class> coords;
  std::vector<std::vector<int>> classes;  // action state, one word per curve

  friend bool operator==(const LaminationCoords& x, const LaminationCoords& y) {
    return x.n == y.n && x.coords == y.coords;
  }
};

// Coordinates of a system of disjoint circles around consecutive punctures.
LaminationCoords encode_round(int n, const RoundMulticurve& c);

// Coordinates of the image multicurve under the braid.
LaminationCoords act(const BraidWord& w, const LaminationCoords& x);

// Image of a round curve under a permutation braid: round exactly when the
// permutation maps the enclosed interval onto an interval.
std::optional<RoundCurve> round_image(const Permutation& s,
                                      const RoundCurve& c);

// Image of a round system transported factor by factor through the normal
// form.  A normal form carries a round curve with round image through round
// intermediate stages, so nullopt proves the image system is not round.
std::optional<RoundMulticurve> system_image(const GarsideNF& nf,
                                            const RoundMulticurve& c);

// Does w map the system to itself (components may be permuted)?
bool is_invariant(const BraidWord& w, const RoundMulticurve& c);

struct SystemEnumerationConfig {
  int max_strands = 12;
  std::size_t max_systems = 100000;
};

// All nonempty laminar families of essential round curves invariant under w,
// sorted.  Candidate curves are filtered by the underlying permutation, then
// whole orbits are verified and combined into compatible unions.
std::vector<RoundMulticurve> invariant_round_systems(
    const BraidWord& w, const SystemEnumerationConfig& cfg = {});

}  // namespace braidcent
