#include "surfgerm/dualgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "surfgerm/errors.hpp"

namespace surfgerm {

// ---------------------------------------------------------------------------
// DualGraph

DualGraph::DualGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw InvalidGraph("dual graph has no vertices");

  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.id.empty()) throw InvalidGraph("empty vertex id");
    if (!seen.insert(v.id).second) throw InvalidGraph("duplicate vertex id '" + v.id + "'");
    if (v.weight < 1) throw InvalidGraph("vertex '" + v.id + "' has weight < 1");
    if (v.weight == 1 && n > 1)
      throw InvalidGraph("vertex '" + v.id +
                         "' has weight 1; only the one-vertex smooth-point graph may");
  }

  adj_.assign(n * n, false);
  nbrs_.assign(n, {});
  for (const auto& [a, b] : edges) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia) throw InvalidGraph("edge references unknown vertex '" + a + "'");
    if (!ib) throw InvalidGraph("edge references unknown vertex '" + b + "'");
    if (*ia == *ib) throw InvalidGraph("loop at vertex '" + a + "'");
    if (adj_[*ia * n + *ib]) throw InvalidGraph("repeated edge " + a + "-" + b);
    adj_[*ia * n + *ib] = adj_[*ib * n + *ia] = true;
    nbrs_[*ia].push_back(*ib);
    nbrs_[*ib].push_back(*ia);
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());

  // connectivity
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : nbrs_[v]) {
      if (!reached[u]) {
        reached[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != n) throw InvalidGraph("dual graph is not connected");
}

DualGraph DualGraph::chain(std::span<const long> weights) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({std::to_string(i + 1), weights[i]});
    if (i > 0) es.emplace_back(std::to_string(i), std::to_string(i + 1));
  }
  return DualGraph(std::move(vs), es);
}

DualGraph DualGraph::d_shape(std::span<const long> chain_weights) {
  if (chain_weights.empty()) throw InvalidGraph("D-shape needs a nonempty chain");
  const std::size_t k = chain_weights.size();
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < k; ++i) {
    vs.push_back({std::to_string(i + 1), chain_weights[i]});
    if (i > 0) es.emplace_back(std::to_string(i), std::to_string(i + 1));
  }
  vs.push_back({std::to_string(k + 1), 2});
  vs.push_back({std::to_string(k + 2), 2});
  es.emplace_back(std::to_string(k), std::to_string(k + 1));
  es.emplace_back(std::to_string(k), std::to_string(k + 2));
  return DualGraph(std::move(vs), es);
}

DualGraph DualGraph::smooth_point() { return DualGraph({{"E", 1}}, {}); }

std::optional<std::size_t> DualGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t DualGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& nb : nbrs_) e += nb.size();
  return e / 2;
}

// ---------------------------------------------------------------------------
// IntersectionMatrix / Cycle

IntersectionMatrix IntersectionMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  IntersectionMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntersectionMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Cycle::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

Cycle& Cycle::operator+=(const Cycle& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Cycle& Cycle::operator*=(const Rat& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

IntersectionMatrix build_intersection_matrix(const DualGraph& g) {
  const std::size_t n = g.size();
  IntersectionMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -g.weight(i);
    for (auto j : g.neighbors(i)) m(i, j) = 1;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

using IntRow = std::vector<BigInt>;

// Rows of [m | extra] cleared of denominators. Each row is multiplied by
// the positive lcm of its denominators; `scale` receives those factors.
std::vector<IntRow> integer_rows(const IntersectionMatrix& m, const std::vector<Cycle>& extra,
                                 std::vector<BigInt>* scale) {
  const std::size_t n = m.size();
  std::vector<IntRow> rows(n, IntRow(n + extra.size()));
  if (scale) scale->assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (const auto& e : extra) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e[i].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    for (std::size_t k = 0; k < extra.size(); ++k)
      rows[i][n + k] = extra[k][i].get_num() * (l / extra[k][i].get_den());
    if (scale) (*scale)[i] = l;
  }
  return rows;
}

// Bareiss forward elimination over the first n columns. With pivoting
// enabled, returns false when a column has no nonzero pivot; without it,
// stops at the first zero pivot and reports its step through `stopped_at`.
// After step k, rows[k][k] equals the (k+1)-th leading minor of the
// (row-permuted) integer matrix.
bool bareiss(std::vector<IntRow>& rows, std::size_t n, bool pivoting, int* swaps,
             std::size_t* stopped_at = nullptr) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  BigInt prev = 1;
  if (swaps) *swaps = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k][k] == 0) {
      if (!pivoting) {
        if (stopped_at) *stopped_at = k;
        return false;
      }
      std::size_t r = k + 1;
      while (r < n && rows[r][k] == 0) ++r;
      if (r == n) return false;
      std::swap(rows[k], rows[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        rows[i][j] = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
        mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  if (stopped_at) *stopped_at = n;
  return true;
}

IntersectionMatrix minor_without(const IntersectionMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  IntersectionMatrix out(n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace

std::vector<Rat> leading_minors(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> scale;
  auto rows = integer_rows(m, {}, &scale);
  std::size_t stopped = n;
  bareiss(rows, n, /*pivoting=*/false, nullptr, &stopped);

  std::vector<Rat> minors(n, Rat(0));
  BigInt scale_prod = 1;
  for (std::size_t k = 0; k < stopped; ++k) {
    scale_prod *= scale[k];
    minors[k] = Rat(rows[k][k], scale_prod);
    minors[k].canonicalize();
  }
  // Past a zero pivot the remaining minors are not produced by the
  // unpivoted sweep; compute them directly.
  for (std::size_t k = stopped; k < n; ++k) {
    IntersectionMatrix lead(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) lead(i, j) = m(i, j);
    minors[k] = determinant(lead);
  }
  return minors;
}

bool is_negative_definite(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> scale;
  auto rows = integer_rows(m, {}, &scale);
  std::size_t stopped = 0;
  if (!bareiss(rows, n, /*pivoting=*/false, nullptr, &stopped)) return false;
  // Row scales are positive, so pivot signs are the minor signs.
  for (std::size_t k = 0; k < n; ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(rows[k][k]) != expected) return false;
  }
  return true;
}

Rat determinant(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  std::vector<BigInt> scale;
  auto rows = integer_rows(m, {}, &scale);
  int swaps = 0;
  if (!bareiss(rows, n, /*pivoting=*/true, &swaps)) return Rat(0);
  BigInt scale_prod = 1;
  for (const auto& s : scale) scale_prod *= s;
  Rat det(rows[n - 1][n - 1], scale_prod);
  det.canonicalize();
  if (swaps % 2) det = -det;
  return det;
}

Cycle solve_linear(const IntersectionMatrix& m, const Cycle& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  auto rows = integer_rows(m, {rhs}, nullptr);
  if (!bareiss(rows, n, /*pivoting=*/true, nullptr)) throw SingularMatrix();

  Cycle x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rat acc(rows[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rat(rows[k][j]) * x[j];
    x[k] = acc / Rat(rows[k][k]);
  }
  return x;
}

Rat inverse_entry(const IntersectionMatrix& m, std::size_t i, std::size_t j) {
  const Rat det = determinant(m);
  if (det == 0) throw SingularMatrix();
  if (m.size() == 1) return Rat(1) / det;
  // (m^-1)_{ij} = (-1)^{i+j} det(m with row j and column i removed) / det m
  Rat cof = determinant(minor_without(m, j, i));
  if ((i + j) % 2) cof = -cof;
  return cof / det;
}

Cycle apply(const IntersectionMatrix& m, const Cycle& x) {
  const std::size_t n = m.size();
  Cycle out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * x[j];
  return out;
}

Rat intersect(const IntersectionMatrix& m, const Cycle& x, const Cycle& y) {
  auto my = apply(m, y);
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * my[i];
  return s;
}

}  // namespace surfgerm
