#include "braidcent/tubular.hpp"

#include <doctest.h>

#include <vector>

#include "braidcent/errors.hpp"
#include "braidcent/garside.hpp"

using namespace braidcent;

namespace {

using Orbits = std::vector<std::vector<int>>;

BraidWord cabled(const char* tubular, std::vector<int> sizes,
                 std::vector<BraidWord> interiors) {
  return cable(parse_braid(tubular), CablePattern{sizes, interiors});
}

const char* kFiveStrand = "B5: 3 4 2 3 1 2 2 3 4 1 2 3";

// Three 2-strand tubes carried around a cycle, with interior braids a, b, c
// met in that order along the orbit of the first tube.
BraidWord three_cycle(const BraidWord& a, const BraidWord& b,
                      const BraidWord& c) {
  return cabled("B3: 1 2", {2, 2, 2}, {c, b, a});
}

// The thirteen-strand braid assembled from a six-tube braid with orbit
// lengths 3, 2, 1 and the interiors used throughout its construction.
BraidWord thirteen_strand() {
  return cabled("B6: 3 3 2 1 5 5 4", {2, 2, 2, 3, 3, 1},
                {BraidWord(2), parse_braid("B2: 1 1"), parse_braid("B2: -1"),
                 parse_braid("B3: -1 2"), parse_braid("B3: 1 2"),
                 BraidWord(1)});
}

}  // namespace

TEST_CASE("decomposing along invariant circles") {
  SUBCASE("interior twists with a trivial tube braid") {
    BraidWord w = parse_braid("B4: 1 3 3");
    TubularDecomposition d =
        decompose(w, parse_system("{[1,2],[3,4]}"), BraidWord(4));
    CHECK(is_trivial(d.tubular));
    CHECK(d.tubular.n == 2);
    CHECK(format_system(d.system) == "{[1,2],[3,4]}");
    CHECK(d.orbits == Orbits{{0}, {1}});
    CHECK(nf_equal(d.interiors[0][0], parse_braid("B2: 1")));
    CHECK(nf_equal(d.interiors[1][0], parse_braid("B2: 1 1")));
    CHECK(d.tube_size(0) == 2);
    CHECK(d.orbit_length(0) == 1);
  }

  SUBCASE("two tubes exchanging twice with nothing inside") {
    TubularDecomposition d = decompose(
        parse_braid(kFiveStrand), parse_system("{[1,3],[4,5]}"), BraidWord(5));
    CHECK(nf_equal(d.tubular, parse_braid("B2: 1 1")));
    CHECK(format_system(d.system) == "{[1,3],[4,5]}");
    CHECK(d.orbits == Orbits{{0}, {1}});
    CHECK(is_trivial(d.interiors[0][0]));
    CHECK(is_trivial(d.interiors[1][0]));
  }

  SUBCASE("thirteen strands round-trip to the data they were built from") {
    BraidWord w = thirteen_strand();
    TubularDecomposition d = decompose(
        w, parse_system("{[1,2],[3,4],[5,6],[7,9],[10,12]}"), BraidWord(13));
    CHECK(nf_equal(d.tubular, parse_braid("B6: 3 3 2 1 5 5 4")));
    CHECK(format_system(d.system) ==
          "{[1,2],[3,4],[5,6],[7,9],[10,12],[13,13]}");
    CHECK(d.orbits == Orbits{{0, 1, 2}, {3, 4}, {5}});
    CHECK(nf_equal(d.interiors[0][0], parse_braid("B2: 1 1")));
    CHECK(nf_equal(d.interiors[0][1], parse_braid("B2: -1")));
    CHECK(is_trivial(d.interiors[0][2]));
    CHECK(nf_equal(d.interiors[1][0], parse_braid("B3: 1 2")));
    CHECK(nf_equal(d.interiors[1][1], parse_braid("B3: -1 2")));
    CHECK(is_trivial(d.interiors[2][0]));
    CHECK(d.orbit_size(0) == 2);
    CHECK(d.orbit_size(1) == 3);
    CHECK(d.orbit_size(2) == 1);
  }

  SUBCASE("interiors travel along a three-cycle") {
    BraidWord a = parse_braid("B2: 1"), b = parse_braid("B2: 1"),
              c = parse_braid("B2: -1");
    TubularDecomposition d =
        decompose(three_cycle(a, b, c), parse_system("{[1,2],[3,4],[5,6]}"),
                  BraidWord(6));
    CHECK(d.orbits == Orbits{{0, 2, 1}});
    CHECK(nf_equal(d.interiors[0][0], a));
    CHECK(nf_equal(d.interiors[0][1], b));
    CHECK(nf_equal(d.interiors[0][2], c));
  }

  SUBCASE("a braid crossing a proposed circle is rejected") {
    BraidWord w = parse_braid("B4: 1 3 3");
    CHECK_THROWS_AS(decompose(w, parse_system("{[2,3]}"), BraidWord(4)),
                    NotInvariant);
    CHECK_THROWS_AS(decompose(w, parse_system("{[1,2],[2,3]}"), BraidWord(4)),
                    InvalidArgument);
    CHECK_THROWS_AS(decompose(w, parse_system("{[1,4]}"), BraidWord(4)),
                    InvalidArgument);
  }

  SUBCASE("rounding through a conjugator") {
    BraidWord w = parse_braid("B4: 1 3 3");
    BraidWord c = parse_braid("B4: 2 1 -3");
    BraidWord moved = free_reduce(conjugate(w, invert(c)));
    TubularDecomposition d =
        decompose(moved, parse_system("{[1,2],[3,4]}"), c);
    CHECK(nf_equal(d.rounded(), w));
    CHECK(nf_equal(d.interiors[0][0], parse_braid("B2: 1")));
    CHECK(nf_equal(d.interiors[1][0], parse_braid("B2: 1 1")));
  }
}

TEST_CASE("regular form") {
  SUBCASE("already regular braids keep their conjugator") {
    TubularDecomposition d = decompose(
        parse_braid("B4: 1 3 3"), parse_system("{[1,2],[3,4]}"), BraidWord(4));
    RegularForm rf = to_regular_form(d);
    CHECK(rf.conjugator.letters.empty());
    CHECK(nf_equal(rf.nontrivial[0], parse_braid("B2: 1")));
    CHECK(nf_equal(rf.nontrivial[1], parse_braid("B2: 1 1")));
  }

  SUBCASE("a cycle's interiors collect into the closing tube") {
    BraidWord a = parse_braid("B2: 1"), b = parse_braid("B2: 1"),
              c = parse_braid("B2: -1");
    RegularForm rf = to_regular_form(
        decompose(three_cycle(a, b, c), parse_system("{[1,2],[3,4],[5,6]}"),
                  BraidWord(6)));
    CHECK(nf_equal(rf.nontrivial[0], concat(a, b, c)));
    CHECK(is_trivial(rf.decomposition.interiors[0][0]));
    CHECK(is_trivial(rf.decomposition.interiors[0][1]));
    CHECK(nf_equal(rf.decomposition.interiors[0][2], parse_braid("B2: 1")));
  }

  SUBCASE("conjugate interiors of distinct orbits become equal words") {
    BraidWord w = cabled("B2:", {3, 3},
                         {parse_braid("B3: 1"), parse_braid("B3: 2 1 -2")});
    RegularForm rf = to_regular_form(
        decompose(w, parse_system("{[1,3],[4,6]}"), BraidWord(6)));
    CHECK(nf_equal(rf.nontrivial[0], parse_braid("B3: 1")));
    CHECK(nf_equal(rf.nontrivial[1], parse_braid("B3: 1")));
    CHECK(nf_equal(free_reduce(conjugate(w, rf.conjugator)),
                   parse_braid("B6: 1 4")));
  }

  SUBCASE("non-conjugate interiors are left alone") {
    BraidWord w = thirteen_strand();
    RegularForm rf = to_regular_form(decompose(
        w, parse_system("{[1,2],[3,4],[5,6],[7,9],[10,12]}"), BraidWord(13)));
    CHECK(nf_equal(rf.nontrivial[0], parse_braid("B2: 1")));
    CHECK(nf_equal(rf.nontrivial[1], parse_braid("B3: 1 2 -1 2")));
    CHECK(is_trivial(rf.nontrivial[2]));
    const TubularDecomposition& e = rf.decomposition;
    CHECK(is_trivial(e.interiors[0][0]));
    CHECK(is_trivial(e.interiors[0][1]));
    CHECK(nf_equal(e.interiors[0][2], parse_braid("B2: 1")));
    CHECK(is_trivial(e.interiors[1][0]));
    CHECK(nf_equal(e.interiors[1][1], parse_braid("B3: 1 2 -1 2")));
    CHECK(nf_equal(e.rounded(), free_reduce(conjugate(w, rf.conjugator))));
  }
}

TEST_CASE("relocating the designated interior") {
  BraidWord a = parse_braid("B2: 1"), b = parse_braid("B2: 1"),
            c = parse_braid("B2: -1");
  BraidWord w = three_cycle(a, b, c);
  RoundMulticurve circles = parse_system("{[1,2],[3,4],[5,6]}");
  RegularForm rf = to_regular_form(decompose(w, circles, BraidWord(6)));

  SUBCASE("each admissible slot receives the braid") {
    for (int k = 1; k <= 2; ++k) {
      BraidWord m = mu(rf, 0, k);
      TubularDecomposition d =
          decompose(w, circles, free_reduce(concat(rf.conjugator, m)));
      for (int j = 0; j < 3; ++j) {
        if (j == k - 1)
          CHECK(nf_equal(d.interiors[0][j], rf.nontrivial[0]));
        else
          CHECK(is_trivial(d.interiors[0][j]));
      }
    }
  }

  SUBCASE("undoing the relocation restores the regular form") {
    BraidWord m = mu(rf, 0, 1);
    BraidWord back = free_reduce(concat(rf.conjugator, m, invert(m)));
    TubularDecomposition d = decompose(w, circles, back);
    CHECK(nf_equal(d.interiors[0][2], rf.nontrivial[0]));
    CHECK(is_trivial(d.interiors[0][0]));
  }

  SUBCASE("the conjugator itself sits in the trailing circles") {
    BraidWord w8 = cabled("B4: 1 2 3", {2, 2, 2, 2},
                          {parse_braid("B2: 1"), BraidWord(2), BraidWord(2),
                           BraidWord(2)});
    RoundMulticurve sys = parse_system("{[1,2],[3,4],[5,6],[7,8]}");
    RegularForm rf8 = to_regular_form(decompose(w8, sys, BraidWord(8)));
    CHECK(rf8.decomposition.orbits == Orbits{{0, 3, 2, 1}});
    TubularDecomposition d = decompose(mu(rf8, 0, 2), sys, BraidWord(8));
    CHECK(d.orbits == Orbits{{0}, {1}, {2}, {3}});
    CHECK(is_trivial(d.interiors[0][0]));
    CHECK(nf_equal(d.interiors[1][0], parse_braid("B2: 1")));
    CHECK(nf_equal(d.interiors[2][0], parse_braid("B2: 1")));
    CHECK(is_trivial(d.interiors[3][0]));
  }

  SUBCASE("slots outside the orbit are rejected") {
    CHECK_THROWS_AS(mu(rf, 0, 0), IndexOutOfRange);
    CHECK_THROWS_AS(mu(rf, 0, 3), IndexOutOfRange);
    CHECK_THROWS_AS(mu(rf, 1, 1), IndexOutOfRange);
  }
}

TEST_CASE("filling an orbit with a commuting interior") {
  TubularDecomposition d = decompose(
      parse_braid("B4: 1 3 3"), parse_system("{[1,2],[3,4]}"), BraidWord(4));
  RegularForm rf = to_regular_form(d);

  SUBCASE("single tubes receive the braid verbatim") {
    CHECK(nf_equal(g_embed(rf, 0, parse_braid("B2: 1")), parse_braid("B4: 1")));
    CHECK(nf_equal(g_embed(rf, 1, parse_braid("B2: -1")),
                   parse_braid("B4: -3")));
    CHECK(commutes(g_embed(rf, 0, parse_braid("B2: 1")),
                   g_embed(rf, 1, parse_braid("B2: -1"))));
  }

  SUBCASE("every tube of a longer orbit is filled") {
    BraidWord w = cabled("B2: 1", {2, 2}, {parse_braid("B2: 1"), BraidWord(2)});
    RegularForm r2 = to_regular_form(
        decompose(w, parse_system("{[1,2],[3,4]}"), BraidWord(4)));
    CHECK(r2.decomposition.orbits == Orbits{{0, 1}});
    BraidWord g = g_embed(r2, 0, parse_braid("B2: 1 1"));
    CHECK(nf_equal(g, parse_braid("B4: 1 1 3 3")));
    CHECK(commutes(g, w));
  }

  SUBCASE("interiors that fail to commute are rejected") {
    BraidWord w = cabled("B2:", {3, 3},
                         {parse_braid("B3: 1"), parse_braid("B3: 2 1 -2")});
    RegularForm r3 = to_regular_form(
        decompose(w, parse_system("{[1,3],[4,6]}"), BraidWord(6)));
    CHECK_THROWS_AS(g_embed(r3, 0, parse_braid("B3: 2")),
                    NotInCentralizerOfInterior);
    CHECK(nf_equal(g_embed(r3, 0, parse_braid("B3: 1")), parse_braid("B6: 1")));
  }

  SUBCASE("mismatched widths and bad orbits are rejected") {
    CHECK_THROWS_AS(g_embed(rf, 0, parse_braid("B3: 1")), StrandMismatch);
    CHECK_THROWS_AS(g_embed(rf, 5, parse_braid("B2: 1")), IndexOutOfRange);
  }
}

TEST_CASE("tube-level braids and the projection") {
  TubularDecomposition d4 = decompose(
      parse_braid("B4: 1 3 3"), parse_system("{[1,2],[3,4]}"), BraidWord(4));
  TubularDecomposition d5 = decompose(
      parse_braid(kFiveStrand), parse_system("{[1,3],[4,5]}"), BraidWord(5));

  SUBCASE("a tube swap expands to the block transposition") {
    BraidWord sw = psi(d4, parse_braid("B2: 1"));
    CHECK(nf_equal(sw, block_transposition_word(4, 1, 2, 2)));
    CHECK(nf_equal(project_p(d4, sw), parse_braid("B2: 1")));
    CHECK(is_trivial(psi(d4, BraidWord(2))));
  }

  SUBCASE("swapping tubes of different sizes is inconsistent") {
    CHECK_THROWS_AS(psi(d5, parse_braid("B2: 1")), InconsistentPermutation);
    BraidWord tw = psi(d5, parse_braid("B2: 1 1"));
    CHECK(nf_equal(project_p(d5, tw), parse_braid("B2: 1 1")));
    CHECK_THROWS_AS(psi(d4, parse_braid("B3: 1")), StrandMismatch);
  }

  SUBCASE("projection is a homomorphism killing the interiors") {
    RegularForm rf = to_regular_form(d4);
    BraidWord g = g_embed(rf, 0, parse_braid("B2: 1"));
    BraidWord sw = psi(d4, parse_braid("B2: 1"));
    CHECK(is_trivial(project_p(d4, g)));
    CHECK(nf_equal(project_p(d4, free_reduce(concat(sw, g))),
                   parse_braid("B2: 1")));
    CHECK(nf_equal(project_p(d4, parse_braid("B4: 1 3 3")), BraidWord(2)));
  }

  SUBCASE("the thirteen-strand braid projects onto its tube braid") {
    BraidWord w = thirteen_strand();
    TubularDecomposition d = decompose(
        w, parse_system("{[1,2],[3,4],[5,6],[7,9],[10,12]}"), BraidWord(13));
    CHECK(nf_equal(project_p(d, w), parse_braid("B6: 3 3 2 1 5 5 4")));
  }

  SUBCASE("braids crossing the tubes are rejected") {
    CHECK_THROWS_AS(project_p(d4, parse_braid("B4: 2")), NotTubePreserving);
    CHECK_THROWS_AS(project_p(d4, parse_braid("B5: 1")), StrandMismatch);
  }
}

TEST_CASE("centralizing braids with trivial tube part are interior fills") {
  BraidWord w = parse_braid("B4: 1 3 3");
  RoundMulticurve circles = parse_system("{[1,2],[3,4]}");
  RegularForm rf = to_regular_form(decompose(w, circles, BraidWord(4)));
  BraidWord g0 = g_embed(rf, 0, parse_braid("B2: 1"));
  BraidWord g1 = g_embed(rf, 1, parse_braid("B2: -1 -1"));
  BraidWord alpha = free_reduce(concat(g0, g1));
  CHECK(commutes(alpha, w));
  CHECK(is_trivial(project_p(rf.decomposition, alpha)));

  TubularDecomposition da = decompose(alpha, circles, BraidWord(4));
  CHECK(is_trivial(da.tubular));
  BraidWord rebuilt = free_reduce(
      concat(g_embed(rf, 0, da.interiors[0][0]),
             g_embed(rf, 1, da.interiors[1][0])));
  CHECK(nf_equal(rebuilt, alpha));
}

TEST_CASE("tubes exchanged by a centralizing braid carry equal interiors") {
  BraidWord even = parse_braid("B4: 1 3");
  TubularDecomposition de =
      decompose(even, parse_system("{[1,2],[3,4]}"), BraidWord(4));
  BraidWord sw = psi(de, parse_braid("B2: 1"));
  CHECK(commutes(sw, even));

  BraidWord uneven = parse_braid("B4: 1 3 3");
  TubularDecomposition du =
      decompose(uneven, parse_system("{[1,2],[3,4]}"), BraidWord(4));
  CHECK_FALSE(commutes(psi(du, parse_braid("B2: 1")), uneven));
  TubularDecomposition swapped =
      decompose(uneven, parse_system("{[1,2],[3,4]}"),
                psi(du, parse_braid("B2: 1")));
  CHECK(nf_equal(swapped.interiors[0][0], parse_braid("B2: 1 1")));
  CHECK(nf_equal(swapped.interiors[1][0], parse_braid("B2: 1")));
}
