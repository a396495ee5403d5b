#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidcent/garside.hpp"
#include "support/artin_action.hpp"
#include "support/rand_words.hpp"

using namespace braidcent;
using namespace braidcent::testing;

namespace {

// Structural invariants of the left greedy normal form.
bool well_formed(const GarsideNF& nf) {
  Permutation half = delta_perm(nf.n);
  for (const Permutation& f : nf.factors) {
    if (f.is_identity() || f == half) return false;
  }
  for (int j = 0; j + 1 < nf.len(); ++j) {
    std::vector<int> fin = finishing_set(nf.factors[j]);
    std::vector<int> sta = starting_set(nf.factors[j + 1]);
    if (!std::includes(fin.begin(), fin.end(), sta.begin(), sta.end()))
      return false;
  }
  return true;
}

BraidWord insert_relator(const BraidWord& w, std::mt19937& rng) {
  std::uniform_int_distribution<int> posd(0, w.length());
  int pos = posd(rng);
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<int> ins;
  std::uniform_int_distribution<int> gen(1, w.n - 1);
  int i = gen(rng);
  switch (kind(rng)) {
    case 0:
      ins = {i, -i};
      break;
    case 1:
      if (i + 1 <= w.n - 1)
        ins = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
      else
        ins = {-i, i};
      break;
    default:
      if (i + 2 <= w.n - 1)
        ins = {i, i + 2, -i, -(i + 2)};
      else
        ins = {i, -i};
      break;
  }
  BraidWord out = w;
  out.letters.insert(out.letters.begin() + pos, ins.begin(), ins.end());
  return out;
}

}  // namespace

TEST_CASE("half twist") {
  CHECK(delta_perm(4).images() == std::vector<int>{3, 2, 1, 0});
  for (int n = 2; n <= 6; ++n) {
    BraidWord d = delta_word(n);
    CHECK(d.length() == n * (n - 1) / 2);
    CHECK(permutation_of(d) == delta_perm(n));
  }
  CHECK(delta_word(3).letters == std::vector<int>{1, 2, 1});
}

TEST_CASE("starting and finishing sets") {
  Permutation rot({2, 0, 1});  // sigma_1 sigma_2
  CHECK(starting_set(rot) == std::vector<int>{1});
  CHECK(finishing_set(rot) == std::vector<int>{2});
  Permutation half = delta_perm(4);
  CHECK(starting_set(half) == std::vector<int>{1, 2, 3});
  CHECK(finishing_set(half) == std::vector<int>{1, 2, 3});
  CHECK(starting_set(Permutation::identity(4)).empty());
}

TEST_CASE("tau and right complements") {
  CHECK(tau_simple(Permutation::adjacent_transposition(4, 0)) ==
        Permutation::adjacent_transposition(4, 2));
  CHECK(tau_simple(delta_perm(5)) == delta_perm(5));
  for (const Permutation& s : all_simples(4)) {
    CHECK(tau_simple(tau_simple(s)) == s);
    CHECK(s.then(right_complement(s)) == delta_perm(4));
    CHECK(tau_power(s, 2) == s);
    CHECK(tau_power(s, -1) == tau_simple(s));
  }
}

TEST_CASE("left weighting a pair") {
  Permutation a = Permutation::adjacent_transposition(3, 0);
  Permutation b = a;
  CHECK_FALSE(make_left_weighted(a, b));  // sigma_1 . sigma_1 already weighted

  Permutation c = Permutation::adjacent_transposition(3, 1);
  CHECK(make_left_weighted(a, c));  // sigma_1 . sigma_2 -> (sigma_1 sigma_2) . 1
  CHECK(a == Permutation({2, 0, 1}));
  CHECK(c.is_identity());
}

TEST_CASE("normal forms of fixed words") {
  GarsideNF s1 = nf_of_word(parse_braid("B3: 1"));
  CHECK(s1 == GarsideNF{3, 0, {Permutation({1, 0, 2})}});

  // In B_2 every power of the generator is a power of the half twist.
  CHECK(nf_of_word(parse_braid("B2: 1")) == GarsideNF{2, 1, {}});
  CHECK(nf_of_word(parse_braid("B2: -1")) == GarsideNF{2, -1, {}});
  CHECK(nf_of_word(parse_braid("B2: 1 1 1")) == GarsideNF{2, 3, {}});

  CHECK(nf_of_word(delta_word(4)) == GarsideNF{4, 1, {}});
  CHECK(nf_of_word(power(parse_braid("B3: 1 2"), 3)) == GarsideNF{3, 2, {}});

  // sigma_1^-1 = Delta^-1 (sigma_1 sigma_2).
  CHECK(nf_of_word(parse_braid("B3: -1")) ==
        GarsideNF{3, -1, {Permutation({2, 0, 1})}});

  CHECK(nf_of_word(parse_braid("B3: 1 2")) ==
        GarsideNF{3, 0, {Permutation({2, 0, 1})}});
  CHECK(nf_of_word(parse_braid("B3: 2 1")) ==
        GarsideNF{3, 0, {Permutation({1, 2, 0})}});
  CHECK(nf_of_word(parse_braid("B3: 1 1")) ==
        GarsideNF{3, 0,
                  {Permutation({1, 0, 2}), Permutation({1, 0, 2})}});
  CHECK(nf_of_word(parse_braid("B4: 2 1 3 2")) ==
        GarsideNF{4, 0, {Permutation({2, 3, 0, 1})}});

  CHECK(nf_of_word(parse_braid("B4:")).is_identity());
  CHECK(nf_of_word(parse_braid("B3: 1 -1")).is_identity());
}

TEST_CASE("normal form against the free group oracle") {
  std::mt19937 rng(101);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 60; ++t) {
      BraidWord w = random_word(n, 9 - n, rng);
      GarsideNF nf = nf_of_word(w);
      CHECK(well_formed(nf));
      CHECK(oracle_equal(word_of_nf(nf), w));

      BraidWord m = insert_relator(insert_relator(w, rng), rng);
      CHECK(nf_of_word(m) == nf);
    }
  }
}

TEST_CASE("normal form arithmetic") {
  std::mt19937 rng(202);
  for (int t = 0; t < 80; ++t) {
    int n = 2 + t % 3;
    BraidWord a = random_word(n, 6, rng), b = random_word(n, 6, rng);
    GarsideNF na = nf_of_word(a), nb = nf_of_word(b);
    CHECK(nf_product(na, nb) == nf_of_word(concat(a, b)));
    CHECK(nf_inverse(na) == nf_of_word(invert(a)));
    CHECK(nf_product(na, nf_inverse(na)).is_identity());
    CHECK(well_formed(nf_product(na, nb)));
  }
}

TEST_CASE("word problem") {
  CHECK(nf_equal(parse_braid("B3: 1 2 1"), parse_braid("B3: 2 1 2")));
  CHECK(nf_equal(parse_braid("B4: 1 3"), parse_braid("B4: 3 1")));
  CHECK_FALSE(nf_equal(parse_braid("B3: 1"), parse_braid("B3: 2")));
  CHECK(is_trivial(parse_braid("B3: 1 2 1 -2 -1 -2")));
  CHECK_FALSE(is_trivial(parse_braid("B3: 1 1")));

  BraidWord full = power(parse_braid("B4: 1 2 3"), 4);
  std::mt19937 rng(303);
  for (int t = 0; t < 10; ++t)
    CHECK(commutes(full, random_word(4, 6, rng)));
  CHECK_FALSE(commutes(parse_braid("B3: 1"), parse_braid("B3: 2")));
}

TEST_CASE("canonical comparison") {
  GarsideNF a = nf_of_word(parse_braid("B3: 1"));
  GarsideNF b = nf_of_word(parse_braid("B3: 2"));
  GarsideNF c = nf_of_word(parse_braid("B3: -1"));
  CHECK(compare_nf(a, a) == std::strong_ordering::equal);
  CHECK(compare_nf(c, a) == std::strong_ordering::less);  // smaller inf first
  // With equal inf, lexicographic on image tables: [0,2,1] before [1,0,2].
  CHECK(compare_nf(b, a) == std::strong_ordering::less);
  CHECK(compare_nf(a, b) == std::strong_ordering::greater);
}

TEST_CASE("simple element enumeration") {
  CHECK(all_simples(1).size() == 1);
  CHECK(all_simples(2).size() == 2);
  CHECK(all_simples(3).size() == 6);
  CHECK(all_simples(4).size() == 24);
  std::vector<Permutation> s = all_simples(3);
  CHECK(std::is_sorted(s.begin(), s.end()));
}
