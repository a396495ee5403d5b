#include "braidcent/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidcent/errors.hpp"

namespace braidcent {

Permutation::Permutation(int n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v])
      throw InvalidArgument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) { return Permutation(n); }

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 0 || i + 1 >= n) throw InvalidArgument("transposition out of range");
  Permutation p(n);
  std::swap(p.img_[i], p.img_[i + 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (size() != next.size()) throw StrandMismatch("permutation sizes differ");
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < size(); ++i) r.img_[i] = next.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < size(); ++i) r.img_[img_[i]] = i;
  return r;
}

BraidWord::BraidWord(int strands, std::vector<int> ls)
    : n(strands), letters(std::move(ls)) {
  if (n < 1) throw InvalidArgument("braid group needs at least one strand");
  for (int e : letters)
    if (e == 0 || std::abs(e) > n - 1)
      throw InvalidArgument("letter out of range for " + std::to_string(n) +
                            " strands");
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head) || head.size() < 3 || head[0] != 'B' ||
      head.back() != ':')
    throw ParseError("expected \"Bn: e1 e2 ...\"");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(head.substr(1, head.size() - 2), &used);
    if (used + 2 != head.size()) throw ParseError("bad strand count");
  } catch (const std::exception&) {
    throw ParseError("bad strand count in \"" + head + "\"");
  }
  if (n < 1) throw ParseError("strand count must be positive");
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    int e = 0;
    try {
      size_t used = 0;
      e = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad letter");
    } catch (const std::exception&) {
      throw ParseError("bad letter \"" + tok + "\"");
    }
    if (e == 0 || std::abs(e) > n - 1)
      throw ParseError("letter " + tok + " out of range for B" +
                       std::to_string(n));
    letters.push_back(e);
  }
  return BraidWord(n, std::move(letters));
}

std::string format_braid(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.n) + ":";
  for (int e : w.letters) out += " " + std::to_string(e);
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r(w.n);
  for (int e : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -e)
      r.letters.pop_back();
    else
      r.letters.push_back(e);
  }
  return r;
}

BraidWord invert(const BraidWord& w) {
  BraidWord r(w.n);
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int e : w.letters) s += e > 0 ? 1 : -1;
  return s;
}

Permutation permutation_of(const BraidWord& w) {
  std::vector<int> img(w.n);
  std::iota(img.begin(), img.end(), 0);
  for (int e : w.letters) {
    int i = std::abs(e) - 1;
    // img maps start position to current position; crossing i swaps the
    // strands currently at positions i, i+1.
    for (int& v : img)
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
  }
  return Permutation(std::move(img));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw StrandMismatch("concat of words on different strands");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  return concat(concat(a, b), c);
}

BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k >= 0 ? w : invert(w);
  BraidWord r(w.n);
  for (int i = 0; i < std::abs(k); ++i) r = concat(r, base);
  return r;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& c) {
  return concat(invert(c), w, c);
}

BraidWord shift_letters(const BraidWord& w, int offset, int new_n) {
  BraidWord r(new_n);
  r.letters.reserve(w.letters.size());
  for (int e : w.letters) {
    int i = std::abs(e) + offset;
    if (i < 1 || i > new_n - 1) throw InvalidArgument("shifted letter escapes");
    r.letters.push_back(e > 0 ? i : -i);
  }
  return r;
}

BraidWord forget_strand(const BraidWord& w, int p) {
  if (p < 1 || p > w.n) throw InvalidArgument("no strand at position " +
                                              std::to_string(p));
  if (w.n == 1) return BraidWord(1);
  BraidWord r(w.n - 1);
  int q = p;  // current position of the forgotten strand, 1-based
  for (int e : w.letters) {
    int i = std::abs(e);
    if (i == q) {
      q = i + 1;  // crossing involves the forgotten strand; drop it
    } else if (i + 1 == q) {
      q = i;
    } else if (i > q) {
      r.letters.push_back(e > 0 ? i - 1 : -(i - 1));
    } else {
      r.letters.push_back(e);
    }
  }
  return r;
}

BraidWord positive_word_of_permutation(const Permutation& p) {
  BraidWord w(p.size());
  std::vector<int> img = p.images();
  // Undo descents of the inverse picture: repeatedly emit the smallest i
  // whose images are out of order.  Yields a reduced positive word for p.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < p.size(); ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        w.letters.push_back(i + 1);
        changed = true;
      }
    }
  }
  return w;
}

BraidWord block_transposition_word(int n, int p, int s, int t) {
  if (p < 1 || s < 1 || t < 1 || p + s + t - 1 > n)
    throw InvalidArgument("block transposition out of range");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int j = 0; j < s; ++j) img[p - 1 + j] = p - 1 + t + j;
  for (int j = 0; j < t; ++j) img[p - 1 + s + j] = p - 1 + j;
  return positive_word_of_permutation(Permutation(std::move(img)));
}

BraidWord cable(const BraidWord& tubular, const CablePattern& pattern) {
  const auto& sizes = pattern.sizes;
  if (static_cast<int>(sizes.size()) != tubular.n)
    throw InvalidArgument("pattern width differs from tubular strand count");
  for (int s : sizes)
    if (s < 1) throw InvalidArgument("tube sizes must be positive");
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);

  std::vector<int> cur = sizes;  // tube widths by current slot
  BraidWord out(total);
  auto offset_of = [&](int slot) {  // strands before 1-based slot
    int off = 0;
    for (int j = 0; j < slot - 1; ++j) off += cur[j];
    return off;
  };
  for (int e : tubular.letters) {
    int i = std::abs(e);
    int off = offset_of(i);
    int s = cur[i - 1], t = cur[i];
    // A negative crossing undoes the positive crossing that ends in the
    // current layout, so it inverts the transposition for the swapped widths;
    // otherwise cabling a word and its inverse would not cancel.
    BraidWord swap_word =
        e > 0 ? block_transposition_word(total, off + 1, s, t)
              : invert(block_transposition_word(total, off + 1, t, s));
    out = concat(out, swap_word);
    std::swap(cur[i - 1], cur[i]);
  }

  if (!pattern.interiors.empty()) {
    if (static_cast<int>(pattern.interiors.size()) != tubular.n)
      throw InvalidArgument("need one interior per tube");
    for (int j = 1; j <= tubular.n; ++j) {
      const BraidWord& inner = pattern.interiors[j - 1];
      if (inner.n != cur[j - 1])
        throw StrandMismatch("interior " + std::to_string(j) +
                             " does not match arriving tube width");
      out = concat(out, shift_letters(inner, offset_of(j), total));
    }
  }
  return out;
}

}  // namespace braidcent
