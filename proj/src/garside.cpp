#include "braidcent/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "braidcent/errors.hpp"

namespace braidcent {

Permutation delta_perm(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
  return Permutation(std::move(img));
}

BraidWord delta_word(int n) {
  BraidWord w(n);
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i) w.letters.push_back(i);
  return w;
}

std::vector<int> starting_set(const Permutation& s) {
  std::vector<int> out;
  for (int i = 1; i < s.size(); ++i)
    if (s[i - 1] > s[i]) out.push_back(i);
  return out;
}

std::vector<int> finishing_set(const Permutation& s) {
  return starting_set(s.inverse());
}

Permutation tau_simple(const Permutation& s) {
  Permutation w0 = delta_perm(s.size());
  return w0.then(s).then(w0);
}

Permutation tau_power(const Permutation& s, long long k) {
  return (k % 2 == 0) ? s : tau_simple(s);
}

Permutation right_complement(const Permutation& s) {
  return s.inverse().then(delta_perm(s.size()));
}

bool make_left_weighted(Permutation& a, Permutation& b) {
  bool changed = false;
  for (;;) {
    // Move a generator that starts b but does not finish a.
    std::vector<int> fin = finishing_set(a);
    int move = 0;
    for (int i : starting_set(b)) {
      if (!std::binary_search(fin.begin(), fin.end(), i)) {
        move = i;
        break;
      }
    }
    if (move == 0) return changed;
    Permutation t = Permutation::adjacent_transposition(a.size(), move - 1);
    a = a.then(t);
    b = t.then(b);
    changed = true;
  }
}

void normalize(GarsideNF& nf) {
  const Permutation id = Permutation::identity(nf.n);
  const Permutation w0 = delta_perm(nf.n);
  auto& fs = nf.factors;
  bool changed = true;
  int guard = 0;
  const int limit = 4 * static_cast<int>(fs.size()) + 16;
  while (changed) {
    changed = false;
    if (++guard > limit)
      throw InternalError("normal form failed to converge");
    for (size_t j = 0; j + 1 < fs.size(); ++j)
      if (make_left_weighted(fs[j], fs[j + 1])) changed = true;
    // Drop trivial factors and absorb half twists into the infimum.
    std::erase_if(fs, [&](const Permutation& f) { return f == id; });
    while (!fs.empty() && fs.front() == w0) {
      fs.erase(fs.begin());
      nf.inf += 1;
      changed = true;
    }
  }
}

GarsideNF nf_of_word(const BraidWord& w) {
  GarsideNF nf;
  nf.n = w.n;
  if (w.n == 1) {
    if (!w.letters.empty()) throw InvalidArgument("letters in B1");
    return nf;
  }
  const Permutation w0 = delta_perm(w.n);
  for (int e : w.letters) {
    int i = std::abs(e);
    Permutation t = Permutation::adjacent_transposition(w.n, i - 1);
    if (e > 0) {
      nf.factors.push_back(t);
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); carrying Delta^-1 to the
      // front twists every factor already present by tau.
      for (auto& f : nf.factors) f = tau_simple(f);
      nf.inf -= 1;
      nf.factors.push_back(w0.then(t));
    }
  }
  normalize(nf);
  return nf;
}

BraidWord word_of_nf(const GarsideNF& nf) {
  BraidWord w(nf.n);
  BraidWord d = delta_word(nf.n);
  if (nf.inf < 0) d = invert(d);
  for (int i = 0; i < std::abs(nf.inf); ++i) w = concat(w, d);
  for (const auto& f : nf.factors)
    w = concat(w, positive_word_of_permutation(f));
  return w;
}

GarsideNF nf_product(const GarsideNF& a, const GarsideNF& b) {
  if (a.n != b.n) throw StrandMismatch("product on different strand counts");
  GarsideNF nf;
  nf.n = a.n;
  nf.inf = a.inf + b.inf;
  // a.factors must pass right through Delta^b.inf.
  for (const auto& f : a.factors) nf.factors.push_back(tau_power(f, b.inf));
  for (const auto& f : b.factors) nf.factors.push_back(f);
  normalize(nf);
  return nf;
}

GarsideNF nf_inverse(const GarsideNF& a) {
  // With f_j r_j = Delta, (Delta^p f_1 .. f_k)^-1 expands to
  // (r_k Delta^-1)(r_{k-1} Delta^-1) ... (r_1 Delta^-1) Delta^-p.
  // Collecting the Delta inverses at the front twists r_j once for every
  // Delta^-1 initially to its right: j of them plus p.
  GarsideNF nf;
  nf.n = a.n;
  nf.inf = -a.inf - a.len();
  for (int j = a.len() - 1; j >= 0; --j) {
    Permutation c = right_complement(a.factors[j]);
    nf.factors.push_back(tau_power(c, a.inf + j + 1));
  }
  normalize(nf);
  return nf;
}

GarsideNF nf_power(const GarsideNF& a, long long k) {
  GarsideNF acc;
  acc.n = a.n;
  GarsideNF base = k < 0 ? nf_inverse(a) : a;
  unsigned long long m = k < 0 ? -static_cast<unsigned long long>(k) : k;
  while (m) {
    if (m & 1) acc = nf_product(acc, base);
    m >>= 1;
    if (m) base = nf_product(base, base);
  }
  return acc;
}

bool nf_equal(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw StrandMismatch("comparing words on different strands");
  return nf_of_word(a) == nf_of_word(b);
}

bool is_trivial(const BraidWord& a) { return nf_of_word(a).is_identity(); }

bool commutes(const BraidWord& a, const BraidWord& b) {
  return nf_equal(concat(a, b), concat(b, a));
}

std::strong_ordering compare_nf(const GarsideNF& a, const GarsideNF& b) {
  if (auto c = a.inf <=> b.inf; c != 0) return c;
  if (auto c = a.factors <=> b.factors; c != 0)
    return c == std::weak_ordering::less ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<Permutation> all_simples(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace braidcent
