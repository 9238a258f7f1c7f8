#pragma once

// Weighted resolution dual graphs and the exact linear algebra on their
// intersection matrices.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "surfgerm/rational.hpp"

namespace surfgerm {

/// Weighted dual graph of the exceptional set of a resolution. Vertex i
/// carries weight w_i = -(self-intersection). Simple and connected; every
/// weight >= 2, except the one-vertex weight-1 graph that stands for the
/// blowup of a smooth point.
class DualGraph {
 public:
  struct Vertex {
    std::string id;
    long weight = 0;
  };
  using Edge = std::pair<std::string, std::string>;

  /// Validates and builds; throws InvalidGraph.
  DualGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  /// Chain with ids "1".."n" in the given order.
  static DualGraph chain(std::span<const long> weights);
  /// Chain w_1..w_k (ids "1".."k") whose last vertex carries two weight-2
  /// leaves with ids "k+1" and "k+2".
  static DualGraph d_shape(std::span<const long> chain_weights);
  /// The exceptional curve of the blowup at a smooth point (id "E").
  static DualGraph smooth_point();

  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  const std::string& id(std::size_t i) const { return vertices_[i].id; }
  long weight(std::size_t i) const { return vertices_[i].weight; }
  std::optional<std::size_t> index_of(const std::string& id) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j]; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return nbrs_[i]; }
  std::size_t degree(std::size_t i) const { return nbrs_[i].size(); }
  std::size_t edge_count() const;

  bool is_smooth_point() const { return size() == 1 && vertices_[0].weight == 1; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<bool> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

/// Square symmetric rational matrix. For a dual graph: diagonal -w_i, 1 on
/// edges, 0 elsewhere.
class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(std::size_t n) : n_(n), a_(n * n) {}
  /// Row-major entries; throws std::invalid_argument unless square.
  static IntersectionMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t size() const { return n_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool is_symmetric() const;

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rat> a_;
};

/// Rational divisor supported on the exceptional curves; coefficient i
/// belongs to vertex i of the owning graph.
struct Cycle {
  std::vector<Rat> coeffs;

  Cycle() = default;
  explicit Cycle(std::size_t n) : coeffs(n) {}
  explicit Cycle(std::vector<Rat> c) : coeffs(std::move(c)) {}

  std::size_t size() const { return coeffs.size(); }
  Rat& operator[](std::size_t i) { return coeffs[i]; }
  const Rat& operator[](std::size_t i) const { return coeffs[i]; }
  bool is_zero() const;

  Cycle& operator+=(const Cycle& o);
  Cycle& operator-=(const Cycle& o);
  Cycle& operator*=(const Rat& s);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Rat& s, Cycle a) { return a *= s; }
  friend Cycle operator-(Cycle a) { return a *= Rat(-1); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

IntersectionMatrix build_intersection_matrix(const DualGraph& g);

/// Sylvester test: leading principal minors alternate in sign, starting
/// negative. Precondition: m symmetric.
bool is_negative_definite(const IntersectionMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 0..n-1.
std::vector<Rat> leading_minors(const IntersectionMatrix& m);

Rat determinant(const IntersectionMatrix& m);

/// Exact solution of m*x = rhs by fraction-free elimination. Throws
/// SingularMatrix.
Cycle solve_linear(const IntersectionMatrix& m, const Cycle& rhs);

/// (m^-1)_{ij} by cofactor over determinant. Throws SingularMatrix.
Rat inverse_entry(const IntersectionMatrix& m, std::size_t i, std::size_t j);

/// m * x.
Cycle apply(const IntersectionMatrix& m, const Cycle& x);

/// Intersection number x . y = x^T m y.
Rat intersect(const IntersectionMatrix& m, const Cycle& x, const Cycle& y);

}  // namespace surfgerm
