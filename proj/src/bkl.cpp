#include "braidcent/bkl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "braidcent/errors.hpp"

namespace braidcent {

Permutation bkl_delta_perm(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(std::move(img));
}

BraidWord band_word(int n, int s, int t) {
  if (s < 1 || t <= s || t > n) throw InvalidArgument("bad band endpoints");
  BraidWord w(n);
  for (int i = t - 1; i >= s; --i) w.letters.push_back(i);
  for (int i = s + 1; i <= t - 1; ++i) w.letters.push_back(-i);
  return w;
}

namespace {

// Labels each position with the smallest element of its cycle.
std::vector<int> cycle_labels(const Permutation& p) {
  int n = p.size();
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    int m = i;
    for (int j = p[i]; j != i; j = p[j]) m = std::min(m, j);
    label[i] = m;
    for (int j = p[i]; j != i; j = p[j]) label[j] = m;
  }
  return label;
}

}  // namespace

bool is_nc_simple(const Permutation& p) {
  int n = p.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc{i};
    seen[i] = 1;
    for (int j = p[i]; j != i; j = p[j]) {
      cyc.push_back(j);
      seen[j] = 1;
    }
    if (cyc.size() == 1) continue;
    // Ascending cycle: each element maps to the next larger one.
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    for (size_t u = 0; u < sorted.size(); ++u) {
      int expect = u + 1 == sorted.size() ? sorted.front() : sorted[u + 1];
      if (p[sorted[u]] != expect) return false;
    }
    blocks.push_back(std::move(sorted));
  }
  // Pairwise noncrossing: merged owner sequence never alternates a b a b.
  for (size_t x = 0; x < blocks.size(); ++x) {
    for (size_t y = x + 1; y < blocks.size(); ++y) {
      std::vector<std::pair<int, int>> merged;
      for (int v : blocks[x]) merged.push_back({v, 0});
      for (int v : blocks[y]) merged.push_back({v, 1});
      std::sort(merged.begin(), merged.end());
      int alternations = 0, last = -1;
      for (auto& [v, owner] : merged) {
        if (owner != last) {
          ++alternations;
          last = owner;
        }
      }
      if (alternations >= 4) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> nc_blocks(const Permutation& p) {
  int n = p.size();
  std::vector<int> label = cycle_labels(p);
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(n, -1);
  for (int i = 0; i < n; ++i) {
    if (p[i] == i) continue;
    if (index[label[i]] < 0) {
      index[label[i]] = static_cast<int>(blocks.size());
      blocks.push_back({});
    }
    blocks[index[label[i]]].push_back(i);
  }
  return blocks;
}

Permutation nc_simple_from_blocks(
    int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (const auto& b : blocks) {
    for (size_t u = 0; u < b.size(); ++u)
      img[b[u]] = u + 1 == b.size() ? b.front() : b[u + 1];
  }
  return Permutation(std::move(img));
}

Permutation nc_meet(const Permutation& a, const Permutation& b) {
  int n = a.size();
  std::vector<int> la = cycle_labels(a), lb = cycle_labels(b);
  // Common refinement: blocks are classes of the label pair.
  std::vector<std::vector<int>> groups;
  std::vector<std::pair<int, int>> keys;
  for (int i = 0; i < n; ++i) {
    std::pair<int, int> k{la[i], lb[i]};
    size_t g = 0;
    while (g < keys.size() && keys[g] != k) ++g;
    if (g == keys.size()) {
      keys.push_back(k);
      groups.push_back({});
    }
    groups[g].push_back(i);
  }
  return nc_simple_from_blocks(n, groups);
}

bool nc_refines(const Permutation& a, const Permutation& b) {
  std::vector<int> lb = cycle_labels(b);
  for (int i = 0; i < a.size(); ++i)
    if (lb[i] != lb[a[i]]) return false;
  return true;
}

Permutation bkl_right_complement(const Permutation& s) {
  return s.inverse().then(bkl_delta_perm(s.size()));
}

Permutation bkl_tau_power(const Permutation& s, long long k) {
  int n = s.size();
  int r = static_cast<int>(((k % n) + n) % n);
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = (s[(x + n - r) % n] + r) % n;
  return Permutation(std::move(img));
}

bool bkl_make_left_weighted(Permutation& a, Permutation& b) {
  Permutation t = nc_meet(bkl_right_complement(a), b);
  if (t.is_identity()) return false;
  a = a.then(t);
  b = t.inverse().then(b);
  return true;
}

void bkl_normalize(BKLNF& nf) {
  const Permutation id = Permutation::identity(nf.n);
  const Permutation d = bkl_delta_perm(nf.n);
  auto& fs = nf.factors;
  bool changed = true;
  int guard = 0;
  const int limit = 4 * static_cast<int>(fs.size()) + 16;
  while (changed) {
    changed = false;
    if (++guard > limit)
      throw InternalError("dual normal form failed to converge");
    for (size_t j = 0; j + 1 < fs.size(); ++j)
      if (bkl_make_left_weighted(fs[j], fs[j + 1])) changed = true;
    std::erase_if(fs, [&](const Permutation& f) { return f == id; });
    while (nf.n > 1 && !fs.empty() && fs.front() == d) {
      fs.erase(fs.begin());
      nf.inf += 1;
      changed = true;
    }
  }
}

BKLNF bkl_nf_of_word(const BraidWord& w) {
  BKLNF nf;
  nf.n = w.n;
  if (w.n == 1) {
    if (!w.letters.empty()) throw InvalidArgument("letters in B1");
    return nf;
  }
  const Permutation d = bkl_delta_perm(w.n);
  for (int e : w.letters) {
    int i = std::abs(e);
    Permutation t = Permutation::adjacent_transposition(w.n, i - 1);
    if (e > 0) {
      nf.factors.push_back(t);
    } else {
      // sigma_i^-1 = delta^-1 (delta sigma_i^-1); carrying delta^-1 to the
      // front rotates every factor already present.
      for (auto& f : nf.factors) f = bkl_tau_power(f, -1);
      nf.inf -= 1;
      nf.factors.push_back(d.then(t));
    }
  }
  bkl_normalize(nf);
  return nf;
}

BraidWord bkl_word_of_simple(const Permutation& s) {
  BraidWord w(s.size());
  for (const auto& b : nc_blocks(s)) {
    for (size_t u = b.size() - 1; u > 0; --u)
      w = concat(w, band_word(s.size(), b[u - 1] + 1, b[u] + 1));
  }
  return w;
}

BraidWord word_of_bkl_nf(const BKLNF& nf) {
  BraidWord d(nf.n);
  for (int i = nf.n - 1; i >= 1; --i) d.letters.push_back(i);
  BraidWord w = power(d, nf.inf);
  for (const auto& f : nf.factors) w = concat(w, bkl_word_of_simple(f));
  return w;
}

std::strong_ordering compare_bkl_nf(const BKLNF& a, const BKLNF& b) {
  if (auto c = a.inf <=> b.inf; c != 0) return c;
  if (auto c = a.factors <=> b.factors; c != 0)
    return c == std::weak_ordering::less ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// Noncrossing partitions of [lo, hi): the block of lo is grown element by
// element, and each gap between consecutive chosen elements is partitioned
// independently.
void gen_nc(int lo, int hi, std::vector<std::vector<int>>& acc,
            const std::function<void()>& done);

void grow_nc(size_t idx, int e, int hi, std::vector<std::vector<int>>& acc,
             const std::function<void()>& done) {
  gen_nc(e + 1, hi, acc, done);
  for (int c = e + 1; c < hi; ++c) {
    gen_nc(e + 1, c, acc, [&acc, idx, c, hi, &done]() {
      acc[idx].push_back(c);
      grow_nc(idx, c, hi, acc, done);
      acc[idx].pop_back();
    });
  }
}

void gen_nc(int lo, int hi, std::vector<std::vector<int>>& acc,
            const std::function<void()>& done) {
  if (lo >= hi) {
    done();
    return;
  }
  size_t idx = acc.size();
  acc.push_back({lo});
  grow_nc(idx, lo, hi, acc, done);
  acc.pop_back();
}

}  // namespace

std::vector<Permutation> all_bkl_simples(int n) {
  std::vector<Permutation> out;
  std::vector<std::vector<int>> acc;
  gen_nc(0, n, acc, [&]() { out.push_back(nc_simple_from_blocks(n, acc)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braidcent
