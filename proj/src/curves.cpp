#include "braidcent/curves.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "braidcent/errors.hpp"

namespace braidcent {

namespace {

// ---- free-group plumbing ------------------------------------------------
//
// A multicurve component is stored as the reduced cyclic word of its free
// homotopy class in pi_1 of the punctured disk, letters +-j for the loop
// around puncture j.  All coordinate entries are crossing counts of the
// component with a fixed family of arcs, and each count is computable from
// the cyclic word alone: crossing numbers with a separating arc equal the
// number of alternations between the two letter blocks it separates, and
// crossing numbers with a puncture-to-boundary arc equal the number of
// occurrences of the loop letter in the basis adapted to that arc.

void push_letter(std::vector<int>& w, int g) {
  if (!w.empty() && w.back() == -g)
    w.pop_back();
  else
    w.push_back(g);
}

std::vector<int> cyclic_reduced(std::vector<int> w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return std::vector<int>(w.begin() + lo, w.begin() + hi);
}

// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i (inverse letters dual).
std::vector<int> apply_braid_letter(int e, const std::vector<int>& w) {
  const int i = e > 0 ? e : -e;
  std::vector<int> out;
  out.reserve(w.size() + 2);
  for (int g : w) {
    if (e > 0) {
      if (g == i) {
        push_letter(out, i);
        push_letter(out, i + 1);
        push_letter(out, -i);
      } else if (g == -i) {
        push_letter(out, i);
        push_letter(out, -(i + 1));
        push_letter(out, -i);
      } else if (g == i + 1) {
        push_letter(out, i);
      } else if (g == -(i + 1)) {
        push_letter(out, -i);
      } else {
        push_letter(out, g);
      }
    } else {
      if (g == i) {
        push_letter(out, i + 1);
      } else if (g == -i) {
        push_letter(out, -(i + 1));
      } else if (g == i + 1) {
        push_letter(out, -(i + 1));
        push_letter(out, i);
        push_letter(out, i + 1);
      } else if (g == -(i + 1)) {
        push_letter(out, -(i + 1));
        push_letter(out, -i);
        push_letter(out, i + 1);
      } else {
        push_letter(out, g);
      }
    }
  }
  return out;
}

// Crossings with the vertical line between punctures j and j+1: cyclic
// alternations between letters with index <= j and letters with index > j.
int line_crossings(const std::vector<int>& cyc, int j) {
  const int k = static_cast<int>(cyc.size());
  if (k == 0) return 0;
  int count = 0;
  for (int t = 0; t < k; ++t) {
    bool left = std::abs(cyc[t]) <= j;
    bool left_next = std::abs(cyc[(t + 1) % k]) <= j;
    if (left != left_next) ++count;
  }
  return count;
}

int letter_count(const std::vector<int>& cyc, int p) {
  int count = 0;
  for (int g : cyc)
    if (std::abs(g) == p) ++count;
  return count;
}

// Change of basis adapted to the arc from puncture p downward: loops around
// punctures beyond p are rerouted below p via x_s -> (x_1..x_p)^-1 x_s
// (x_1..x_p).  Occurrences of x_p afterwards count passes below p.
std::vector<int> below_basis(const std::vector<int>& cyc, int p) {
  std::vector<int> out;
  for (int g : cyc) {
    if (std::abs(g) > p) {
      for (int t = p; t >= 1; --t) push_letter(out, -t);
      push_letter(out, g);
      for (int t = 1; t <= p; ++t) push_letter(out, t);
    } else {
      push_letter(out, g);
    }
  }
  return cyclic_reduced(std::move(out));
}

std::vector<mpz_class> coords_of_classes(
    int n, const std::vector<std::vector<int>>& classes) {
  std::vector<long long> a(std::max(n - 2, 0), 0), b(std::max(n - 2, 0), 0);
  for (const std::vector<int>& cyc : classes) {
    if (cyc.empty()) throw InternalError("null-homotopic curve component");
    for (int p = 2; p <= n - 1; ++p) {
      int above = letter_count(cyc, p);
      int below = letter_count(below_basis(cyc, p), p);
      if ((below - above) % 2 != 0)
        throw InternalError("odd above/below defect in curve counting");
      a[p - 2] += (below - above) / 2;
    }
    std::vector<int> nu(n, 0);  // nu[j], j = 1..n-1
    for (int j = 1; j <= n - 1; ++j) nu[j] = line_crossings(cyc, j);
    for (int j = 1; j <= n - 2; ++j) {
      if ((nu[j] - nu[j + 1]) % 2 != 0)
        throw InternalError("odd line-crossing defect in curve counting");
      b[j - 1] += (nu[j] - nu[j + 1]) / 2;
    }
  }
  std::vector<mpz_class> coords;
  coords.reserve(2 * a.size());
  for (long long v : a) coords.emplace_back(static_cast<long>(v));
  for (long long v : b) coords.emplace_back(static_cast<long>(v));
  return coords;
}

}  // namespace

bool essential(int n, const RoundCurve& c) {
  int size = c.b - c.a + 1;
  return c.a >= 1 && c.b <= n && size >= 2 && size <= n - 1;
}

bool compatible(const RoundCurve& x, const RoundCurve& y) {
  if (x.b < y.a || y.b < x.a) return true;                // disjoint
  if (x.a <= y.a && y.b <= x.b) return true;              // y inside x
  if (y.a <= x.a && x.b <= y.b) return true;              // x inside y
  return false;
}

bool is_laminar(const RoundMulticurve& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!compatible(c[i], c[j])) return false;
  return true;
}

RoundMulticurve normalize_system(RoundMulticurve c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

RoundMulticurve outermost_of(const RoundMulticurve& c) {
  RoundMulticurve out;
  for (const RoundCurve& x : c) {
    bool inner = false;
    for (const RoundCurve& y : c)
      if (!(x == y) && y.a <= x.a && x.b <= y.b) inner = true;
    if (!inner) out.push_back(x);
  }
  return normalize_system(std::move(out));
}

RoundMulticurve parse_system(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw ParseError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(i) + " in curve system");
    ++i;
  };
  auto number = [&]() -> int {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start)
      throw ParseError("expected a puncture number at position " +
                       std::to_string(i) + " in curve system");
    return std::stoi(text.substr(start, i - start));
  };

  RoundMulticurve out;
  expect('{');
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    while (true) {
      expect('[');
      int a = number();
      expect(',');
      int b = number();
      expect(']');
      if (a < 1 || b <= a)
        throw ParseError("curve [" + std::to_string(a) + "," +
                         std::to_string(b) + "] is not an increasing interval");
      out.push_back({a, b});
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect('}');
      break;
    }
  }
  skip();
  if (i != text.size())
    throw ParseError("trailing text after curve system at position " +
                     std::to_string(i));
  return normalize_system(std::move(out));
}

std::string format_system(const RoundMulticurve& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(c[i].a) + ',' + std::to_string(c[i].b) + ']';
  }
  out += '}';
  return out;
}

LaminationCoords encode_round(int n, const RoundMulticurve& c) {
  RoundMulticurve sys = normalize_system(c);
  for (const RoundCurve& x : sys)
    if (!essential(n, x))
      throw InvalidArgument("curve " + format_system({x}) +
                            " is not essential on " + std::to_string(n) +
                            " strands");
  if (!is_laminar(sys))
    throw NotLaminar("curves cross: " + format_system(sys));

  LaminationCoords out;
  out.n = n;
  std::vector<long long> b(std::max(n - 2, 0), 0);
  for (const RoundCurve& x : sys) {
    if (x.a >= 2) b[x.a - 2] -= 1;
    if (x.b <= n - 1) b[x.b - 2] += 1;
    out.classes.emplace_back();
    for (int j = x.a; j <= x.b; ++j) out.classes.back().push_back(j);
  }
  for (int j = 0; j < n - 2; ++j) out.coords.emplace_back(0);
  for (long long v : b) out.coords.emplace_back(static_cast<long>(v));

  if (out.coords != coords_of_classes(n, out.classes))
    throw InternalError("round-curve coordinates disagree with counting");
  return out;
}

LaminationCoords act(const BraidWord& w, const LaminationCoords& x) {
  if (w.n != x.n)
    throw StrandMismatch("braid on " + std::to_string(w.n) +
                         " strands acting on coordinates for " +
                         std::to_string(x.n));
  LaminationCoords out;
  out.n = x.n;
  out.classes.reserve(x.classes.size());
  for (const std::vector<int>& cyc : x.classes) {
    std::vector<int> cur = cyc;
    for (int e : w.letters) cur = apply_braid_letter(e, cur);
    out.classes.push_back(cyclic_reduced(std::move(cur)));
  }
  out.coords = coords_of_classes(out.n, out.classes);
  return out;
}

std::optional<RoundCurve> round_image(const Permutation& s,
                                      const RoundCurve& c) {
  int lo = s.size(), hi = -1;
  for (int i = c.a - 1; i <= c.b - 1; ++i) {
    lo = std::min(lo, s[i]);
    hi = std::max(hi, s[i]);
  }
  if (hi - lo != c.b - c.a) return std::nullopt;
  return RoundCurve{lo + 1, hi + 1};
}

std::optional<RoundMulticurve> system_image(const GarsideNF& nf,
                                            const RoundMulticurve& c) {
  const int n = nf.n;
  RoundMulticurve cur = normalize_system(c);
  if (nf.inf % 2 != 0) {
    for (RoundCurve& x : cur) x = {n + 1 - x.b, n + 1 - x.a};
  }
  for (const Permutation& f : nf.factors) {
    for (RoundCurve& x : cur) {
      auto img = round_image(f, x);
      if (!img) return std::nullopt;
      x = *img;
    }
  }
  return normalize_system(std::move(cur));
}

bool is_invariant(const BraidWord& w, const RoundMulticurve& c) {
  RoundMulticurve sys = normalize_system(c);
  for (const RoundCurve& x : sys)
    if (!essential(w.n, x))
      throw InvalidArgument("curve " + format_system({x}) +
                            " is not essential on " + std::to_string(w.n) +
                            " strands");
  if (!is_laminar(sys)) throw NotLaminar("curves cross: " + format_system(sys));
  auto img = system_image(nf_of_word(w), sys);
  return img && *img == sys;
}

std::vector<RoundMulticurve> invariant_round_systems(
    const BraidWord& w, const SystemEnumerationConfig& cfg) {
  if (w.n > cfg.max_strands)
    throw TooManySystems("curve system enumeration limited to " +
                         std::to_string(cfg.max_strands) + " strands");
  const int n = w.n;
  const Permutation perm = permutation_of(w);
  const GarsideNF nf = nf_of_word(w);

  std::vector<RoundCurve> cand;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (essential(n, {a, b})) cand.push_back({a, b});
  auto index_of = [&](const RoundCurve& c) -> int {
    auto it = std::lower_bound(cand.begin(), cand.end(), c);
    return static_cast<int>(it - cand.begin());
  };

  // Candidate orbit structure comes from the permutation alone; a curve of
  // an invariant system must map to a curve enclosing the permuted interval.
  std::vector<int> next(cand.size(), -1);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    auto img = round_image(perm, cand[i]);
    if (img) next[i] = index_of(*img);
  }

  std::vector<RoundMulticurve> orbits;
  std::vector<char> used(cand.size(), 0);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> chain;
    std::vector<char> in_chain(cand.size(), 0);
    int cur = static_cast<int>(i);
    while (cur != -1 && !in_chain[cur]) {
      in_chain[cur] = 1;
      chain.push_back(cur);
      cur = next[cur];
    }
    for (int idx : chain) used[idx] = 1;
    if (cur != static_cast<int>(i)) continue;  // fell off or merged: no orbit
    RoundMulticurve sys;
    for (int idx : chain) sys.push_back(cand[idx]);
    sys = normalize_system(std::move(sys));
    if (!is_laminar(sys)) continue;
    auto img = system_image(nf, sys);
    if (!img || *img != sys) continue;
    orbits.push_back(std::move(sys));
  }
  std::sort(orbits.begin(), orbits.end());

  const std::size_t k = orbits.size();
  std::vector<std::vector<char>> ok(k, std::vector<char>(k, 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      for (const RoundCurve& x : orbits[i])
        for (const RoundCurve& y : orbits[j])
          if (!compatible(x, y)) ok[i][j] = ok[j][i] = 0;
    }

  // Invariant systems are exactly the unions of pairwise-compatible orbits.
  std::vector<RoundMulticurve> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t at) {
    if (at == k) {
      if (chosen.empty()) return;
      RoundMulticurve u;
      for (std::size_t idx : chosen)
        u.insert(u.end(), orbits[idx].begin(), orbits[idx].end());
      if (out.size() >= cfg.max_systems)
        throw TooManySystems("more than " + std::to_string(cfg.max_systems) +
                             " invariant curve systems");
      out.push_back(normalize_system(std::move(u)));
      return;
    }
    grow(at + 1);
    for (std::size_t idx : chosen)
      if (!ok[idx][at]) return;
    chosen.push_back(at);
    grow(at + 1);
    chosen.pop_back();
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braidcent
