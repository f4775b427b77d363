#pragma once

// Independent model of type A_n: roots e_i - e_j, Weyl group S_{n+1} acting
// on one-line permutations. Nothing here calls into the library.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace model {

using Perm = std::vector<int>;  // one-line notation on 0..n

struct RootE {
  int i, j;  // e_i - e_j, i != j
  bool positive() const { return i < j; }
};

// Simple-root coefficients of e_i - e_j (sign included).
inline std::vector<int> coefficients(int rank, RootE r) {
  std::vector<int> c(rank, 0);
  const int lo = std::min(r.i, r.j), hi = std::max(r.i, r.j);
  const int sign = r.i < r.j ? 1 : -1;
  for (int k = lo; k < hi; ++k) c[k] = sign;
  return c;
}

inline std::vector<RootE> positive_roots(int rank) {
  std::vector<RootE> out;
  for (int i = 0; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) out.push_back({i, j});
  return out;
}

// Inner product of e-vectors; A_n is simply laced so this is the coroot pairing.
inline int inner(RootE a, RootE b) {
  auto e = [](RootE r, int k) { return (r.i == k) - (r.j == k); };
  int s = 0;
  for (int k = 0; k <= std::max({a.i, a.j, b.i, b.j}); ++k) s += e(a, k) * e(b, k);
  return s;
}

inline Perm identity(int rank) {
  Perm p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// w * s_k: swap positions k, k+1.
inline Perm times_simple(Perm w, int k) {
  std::swap(w[k], w[k + 1]);
  return w;
}

inline Perm from_word(int rank, const std::vector<int>& word) {
  Perm w = identity(rank);
  for (int k : word) w = times_simple(w, k);
  return w;
}

inline RootE act(const Perm& w, RootE r) { return {w[r.i], w[r.j]}; }

inline int inversions(const Perm& w) {
  int n = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b) n += w[a] > w[b];
  return n;
}

// Tableau criterion: sorted prefixes compared entrywise.
inline bool bruhat_leq(const Perm& u, const Perm& v) {
  for (size_t k = 1; k <= u.size(); ++k) {
    std::vector<int> a(u.begin(), u.begin() + k), b(v.begin(), v.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t t = 0; t < k; ++t)
      if (a[t] > b[t]) return false;
  }
  return true;
}

// 0-Hecke action: multiply by s_k only if the length goes up.
inline Perm demazure(Perm u, const std::vector<int>& word_of_v) {
  for (int k : word_of_v) {
    Perm t = times_simple(u, k);
    if (inversions(t) > inversions(u)) u = t;
  }
  return u;
}

inline std::vector<Perm> all_perms(int rank) {
  std::vector<Perm> out;
  Perm p = identity(rank);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace model
