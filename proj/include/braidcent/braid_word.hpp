#pragma once

#include <string>
#include <vector>

namespace braidcent {

// Permutation on {0, ..., n-1}; img[i] is where position i ends up.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> img);

  static Permutation identity(int n);
  // Swaps positions i and i+1 (0-based i).
  static Permutation adjacent_transposition(int n, int i);

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  bool is_identity() const;

  // Composition "apply *this first, then next".
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image table; used for canonical orderings.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

// A word in the Artin generators of the braid group on n strands.
// Letters are nonzero integers e with |e| <= n-1; e > 0 means the positive
// crossing of strands |e|, |e|+1 (1-based), e < 0 its inverse.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  BraidWord() = default;
  explicit BraidWord(int strands) : n(strands) {}
  BraidWord(int strands, std::vector<int> ls);

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Text form "Bn: e1 e2 ... ek"; the empty word is "Bn:".
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& w);

// Cancels adjacent e, -e pairs until none remain.
BraidWord free_reduce(const BraidWord& w);
// Reverses the word and negates every letter.
BraidWord invert(const BraidWord& w);
long long exponent_sum(const BraidWord& w);
// Underlying permutation; a homomorphism for concatenation under then().
Permutation permutation_of(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c);
BraidWord power(const BraidWord& w, int k);
// c^-1 w c.
BraidWord conjugate(const BraidWord& w, const BraidWord& c);
// Letters |e| -> |e| + offset inside a group on new_n strands.
BraidWord shift_letters(const BraidWord& w, int offset, int new_n);

// Removes the strand at starting position p (1-based), following it through
// the word; crossings involving it are deleted, the rest renumbered.
BraidWord forget_strand(const BraidWord& w, int p);

// Positive word realizing a permutation as a permutation braid: each pair of
// strands crosses at most once.  Deterministic (smallest descent first).
BraidWord positive_word_of_permutation(const Permutation& p);

// Positive word for the block transposition where the s strands starting at
// position p (1-based) cross the following t strands, as one fat crossing.
BraidWord block_transposition_word(int n, int p, int s, int t);

// Cabling data: sizes[j] is the width of the tube starting at slot j, and
// interiors[j] the braid inserted into the tube arriving at final slot j.
struct CablePattern {
  std::vector<int> sizes;
  std::vector<BraidWord> interiors;
};

// Replaces each strand of `tubular` by a tube of the given width.  Each
// tubular letter becomes a block transposition of the two adjacent tubes;
// the interiors are appended at the end inside their tubes.
BraidWord cable(const BraidWord& tubular, const CablePattern& pattern);

}  // namespace braidcent
