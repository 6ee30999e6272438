#include "bh/rootweyl.hpp"

#include "bh/error.hpp"

#include <algorithm>
#include <deque>

namespace bh {

namespace {

std::string key_of(const SignedPerm& g) {
  std::string k;
  for (size_t j = 0; j < g.perm.size(); ++j) {
    k += char('a' + g.perm[j]);
    k += g.signs[j] > 0 ? '+' : '-';
  }
  return k;
}

Vec basis2(int n, int i, int si, int j = -1, int sj = 0) {
  Vec v(n, 0);
  v[i] += 2 * si;
  if (j >= 0) v[j] += 2 * sj;
  return v;
}

}  // namespace

std::string RootDatum::name() const {
  return std::string(family == Family::C ? "C" : "D") + std::to_string(n);
}

bool is_positive(const Vec& v) {
  for (int x : v)
    if (x) return x > 0;
  return false;
}

RootDatum build_root_datum(Family f, int n) {
  if (f == Family::C && (n < 2 || n > kMaxRank))
    throw MathError("rank", "type C needs 2 <= n <= " + std::to_string(kMaxRank));
  if (f == Family::D && (n < 3 || n > kMaxRank))
    throw MathError("rank", "type D needs 3 <= n <= " + std::to_string(kMaxRank));
  RootDatum d;
  d.family = f;
  d.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      d.positive.push_back({basis2(n, i, 1, j, -1), false});
      d.positive.push_back({basis2(n, i, 1, j, 1), false});
    }
  if (f == Family::C)
    for (int i = 0; i < n; ++i) d.positive.push_back({basis2(n, i, 1), true});

  auto find = [&](const Vec& v) {
    for (size_t k = 0; k < d.positive.size(); ++k)
      if (d.positive[k].xi == v) return int(k);
    throw MathError("internal", "simple root not found");
  };
  for (int i = 0; i + 1 < n; ++i) d.simples.push_back(find(basis2(n, i, 1, i + 1, -1)));
  if (f == Family::C)
    d.simples.push_back(find(basis2(n, n - 1, 1)));
  else
    d.simples.push_back(find(basis2(n, n - 2, 1, n - 1, 1)));

  d.rho.assign(n, 0);
  d.rho_eps.assign(n, 0);
  for (auto& r : d.positive)
    for (int k = 0; k < n; ++k) {
      d.rho[k] += r.xi[k];
      if (r.is_long) d.rho_eps[k] += r.xi[k];
    }
  for (int k = 0; k < n; ++k) {
    d.rho[k] /= 2;
    d.rho_eps[k] /= 2;
  }
  return d;
}

Vec act(const SignedPerm& g, const Vec& v) {
  if (v.size() != g.perm.size()) throw MathError("dimension", "vector/rank mismatch");
  Vec r(v.size());
  for (size_t j = 0; j < v.size(); ++j) r[g.perm[j]] = g.signs[g.perm[j]] * v[j];
  return r;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  size_t n = a.perm.size();
  SignedPerm r{std::vector<int>(n), std::vector<int>(n)};
  for (size_t j = 0; j < n; ++j) {
    int mid = b.perm[j];
    int tgt = a.perm[mid];
    r.perm[j] = tgt;
    r.signs[tgt] = a.signs[tgt] * b.signs[mid];
  }
  return r;
}

SignedPerm inverse(const SignedPerm& a) {
  size_t n = a.perm.size();
  SignedPerm r{std::vector<int>(n), std::vector<int>(n)};
  for (size_t j = 0; j < n; ++j) {
    r.perm[a.perm[j]] = int(j);
    r.signs[j] = a.signs[a.perm[j]];
  }
  return r;
}

SignedPerm identity_perm(int n) {
  SignedPerm g{std::vector<int>(n), std::vector<int>(n, 1)};
  for (int j = 0; j < n; ++j) g.perm[j] = j;
  return g;
}

SignedPerm simple_reflection(const RootDatum& d, int i) {
  if (i < 1 || i > d.n) throw MathError("index", "simple index out of range");
  SignedPerm g = identity_perm(d.n);
  if (i < d.n) {
    std::swap(g.perm[i - 1], g.perm[i]);
  } else if (d.family == Family::C) {
    g.signs[d.n - 1] = -1;
  } else {
    std::swap(g.perm[d.n - 2], g.perm[d.n - 1]);
    g.signs[d.n - 2] = g.signs[d.n - 1] = -1;
  }
  return g;
}

int length_of(const RootDatum& d, const SignedPerm& g) {
  int l = 0;
  for (auto& r : d.positive)
    if (!is_positive(act(g, r.xi))) ++l;
  return l;
}

SignedPerm word_product(const RootDatum& d, const std::vector<int>& word) {
  SignedPerm g = identity_perm(d.n);
  for (int i : word) g = compose(g, simple_reflection(d, i));
  return g;
}

int WeylGroup::index_of(const SignedPerm& g) const {
  auto it = index_.find(key_of(g));
  return it == index_.end() ? -1 : it->second;
}

WeylGroup enumerate_weyl(const RootDatum& d) {
  std::vector<SignedPerm> refl;
  for (int i = 1; i <= d.n; ++i) refl.push_back(simple_reflection(d, i));

  // BFS by left multiplication; length grows by one per layer.
  std::vector<SignedPerm> all{identity_perm(d.n)};
  std::unordered_map<std::string, int> seen{{key_of(all[0]), 0}};
  for (size_t k = 0; k < all.size(); ++k)
    for (auto& s : refl) {
      SignedPerm h = compose(s, all[k]);
      auto key = key_of(h);
      if (!seen.count(key)) {
        seen.emplace(key, int(all.size()));
        all.push_back(h);
      }
    }

  std::vector<WeylElt> elts(all.size());
  for (size_t k = 0; k < all.size(); ++k) {
    elts[k].g = all[k];
    elts[k].length = length_of(d, all[k]);
  }
  // lex-smallest reduced word: first letter is the smallest left descent
  std::vector<int> order(all.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = int(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return elts[a].length < elts[b].length; });
  for (int k : order) {
    auto& w = elts[k];
    if (w.length == 0) continue;
    for (int i = 1; i <= d.n; ++i) {
      SignedPerm h = compose(refl[i - 1], w.g);
      int hk = seen.at(key_of(h));
      if (elts[hk].length < w.length) {
        w.parent = hk;
        w.word = {i};
        w.word.insert(w.word.end(), elts[hk].word.begin(), elts[hk].word.end());
        break;
      }
    }
  }
  std::vector<int> rank(all.size());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (elts[a].length != elts[b].length) return elts[a].length < elts[b].length;
    return elts[a].word < elts[b].word;
  });
  for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = int(k);

  WeylGroup G;
  G.datum = d;
  G.elts.resize(all.size());
  for (size_t k = 0; k < all.size(); ++k) {
    WeylElt w = elts[order[k]];
    if (w.parent >= 0) w.parent = rank[w.parent];
    G.elts[k] = std::move(w);
    G.index_.emplace(key_of(G.elts[k].g), int(k));
  }
  return G;
}

}  // namespace bh
