#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the library's linear algebra: matrices are plain nested vectors and
// every routine is the textbook method, chosen to differ from the
// implementation under test (Bareiss elimination, cofactors, Laufer's
// procedure).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "surfgerm/dualgraph.hpp"
#include "surfgerm/generators.hpp"
#include "surfgerm/rational.hpp"

namespace oracle {

using surfgerm::Rat;
using Mat = std::vector<std::vector<Rat>>;

/// Intersection matrix straight from weights and an edge list of indices.
inline Mat matrix(const std::vector<long>& w, const std::vector<std::pair<int, int>>& edges) {
  const std::size_t n = w.size();
  Mat m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = -w[i];
  for (auto [a, b] : edges) m[a][b] = m[b][a] = 1;
  return m;
}

inline Mat matrix(const surfgerm::DualGraph& g) {
  std::vector<long> w;
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < g.size(); ++i) {
    w.push_back(g.weight(i));
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return matrix(w, e);
}

/// Determinant by the Leibniz sum over permutations (n <= 8 or so).
inline Rat leibniz_det(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rat total = 0;
  do {
    Rat term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][p[i]];
    if (term == 0) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += inversions % 2 ? Rat(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Gauss-Jordan inverse over Q with first-nonzero pivoting.
inline std::optional<Mat> inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rat p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

/// Determinant by Gaussian elimination (row swaps flip the sign).
inline Rat det(Mat a) {
  const std::size_t n = a.size();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rat f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return d;
}

/// Coefficients c_0..c_n of det(t I - M) by the Faddeev-LeVerrier recursion.
inline std::vector<Rat> charpoly(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Mat mk(n, std::vector<Rat>(n, Rat(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += m[i][l] * mk[l][j];
      next[i][i] += c[n - k + 1];
    }
    Rat trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * next[l][i];
    c[n - k] = -trace / Rat(static_cast<long>(k));
    mk = std::move(next);
  }
  return c;
}

/// A real symmetric matrix has only negative eigenvalues iff every
/// coefficient of its characteristic polynomial is positive (all roots are
/// real, so Descartes' rule is exact here).
inline bool negative_definite(const Mat& m) {
  const auto c = charpoly(m);
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x > 0; });
}

/// Componentwise minimum of all integer cycles Z with 1 <= z_i <= bound and
/// Z.Delta_i <= 0 for every i; nullopt when none exists in the box. Uses
/// integer arithmetic only.
inline std::optional<std::vector<long>> brute_fundamental(const std::vector<long>& w,
                                                          const std::vector<std::vector<int>>& adj,
                                                          long bound) {
  const std::size_t n = w.size();
  std::vector<long> z(n, 1), best(n, bound + 1);
  bool found = false;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      long dot = -w[i] * z[i];
      for (int j : adj[i]) dot += z[j];
      ok = dot <= 0;
    }
    if (ok) {
      found = true;
      for (std::size_t i = 0; i < n; ++i) best[i] = std::min(best[i], z[i]);
    }
    std::size_t k = 0;
    while (k < n && z[k] == bound) z[k++] = 1;
    if (k == n) break;
    ++z[k];
  }
  if (!found) return std::nullopt;
  return best;
}

inline std::vector<std::vector<int>> adjacency(const surfgerm::DualGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j : g.neighbors(i)) adj[i].push_back(static_cast<int>(j));
  return adj;
}

inline std::vector<long> weights(const surfgerm::DualGraph& g) {
  std::vector<long> w;
  for (std::size_t i = 0; i < g.size(); ++i) w.push_back(g.weight(i));
  return w;
}

/// Random connected simple graph on n vertices (ids "v0".."v{n-1}"): a
/// random tree plus, with probability 1/4, one extra edge.
inline surfgerm::DualGraph random_graph(surfgerm::Rng& rng, std::size_t n, long wlo, long whi) {
  std::vector<surfgerm::DualGraph::Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), rng.uniform(wlo, whi)});
  std::vector<surfgerm::DualGraph::Edge> es;
  std::vector<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1));
    es.emplace_back(vs[p].id, vs[i].id);
    used.emplace_back(p, i);
  }
  if (n >= 3 && rng.uniform(0, 3) == 0) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const std::pair<std::size_t, std::size_t> e{std::min(a, b), std::max(a, b)};
    if (a != b && std::find(used.begin(), used.end(), e) == used.end())
      es.emplace_back(vs[a].id, vs[b].id);
  }
  return surfgerm::DualGraph(std::move(vs), es);
}

}  // namespace oracle
