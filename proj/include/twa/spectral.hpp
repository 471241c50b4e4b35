#pragma once

/**
 * @file spectral.hpp
 * @brief Max-plus matrix algebra: products, maximum cycle mean, star.
 *
 * The spectral radius rho(M) of a max-plus matrix is the largest mean
 * weight of a simple circuit in its graph. It is computed with Karp's
 * algorithm on every nontrivial strongly connected component, in exact
 * rational arithmetic.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "twa/weight.hpp"

namespace twa {

class TropicalMatrix {
 public:
  /// All-zero n x n matrix.
  TropicalMatrix(std::size_t n, SemiringTag tag);

  static TropicalMatrix identity(std::size_t n, SemiringTag tag);

  std::size_t size() const noexcept { return n_; }
  SemiringTag tag() const noexcept { return tag_; }

  const Weight& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Weight w);

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t n_;
  SemiringTag tag_;
  std::vector<Weight> entries_;
};

TropicalMatrix mat_mul(const TropicalMatrix& a, const TropicalMatrix& b);
/// Entrywise oplus.
TropicalMatrix mat_oplus(const TropicalMatrix& a, const TropicalMatrix& b);
/// Row vector times matrix.
std::vector<Weight> vec_mul(const std::vector<Weight>& v, const TropicalMatrix& m);

/// rho(M): the maximum mean weight of a simple circuit, or zero (-inf) when
/// the graph of M is acyclic. Max-plus only.
Weight max_mean_cycle(const TropicalMatrix& m);

/// M* = I + M + M^2 + ... ; throws PositiveCycleError when rho(M) > 0.
TropicalMatrix mat_star(const TropicalMatrix& m);

/// Sparse weighted digraph, the working representation for large automata.
class ArcGraph {
 public:
  struct Arc {
    std::size_t target;
    Rational weight;
  };

  explicit ArcGraph(std::size_t n) : out_(n) {}
  static ArcGraph from_matrix(const TropicalMatrix& m);

  std::size_t size() const noexcept { return out_.size(); }
  /// Keeps the heavier arc when (source, target) is already present.
  void add_arc(std::size_t source, std::size_t target, const Rational& weight);
  const std::vector<Arc>& out(std::size_t v) const { return out_[v]; }

 private:
  std::vector<std::vector<Arc>> out_;
};

/// A simple circuit given by its vertex sequence v0 -> v1 -> ... -> v0.
struct Circuit {
  std::vector<std::size_t> vertices;
  Rational mean;
};

/// A circuit of maximum mean, or nullopt for an acyclic graph.
std::optional<Circuit> critical_circuit(const ArcGraph& graph);

/// Strongly connected components in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const ArcGraph& graph);

/// u = M* v computed by relaxation (Bellman-Ford style) on the sparse
/// graph. Throws PositiveCycleError if the relaxation fails to settle,
/// which happens exactly when a positive circuit reaches a finite entry.
std::vector<Weight> star_times_vector(const ArcGraph& graph, const std::vector<Weight>& v);

}  // namespace twa
