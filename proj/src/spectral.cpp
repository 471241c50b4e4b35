#include "twa/spectral.hpp"

#include <algorithm>
#include <limits>

#include "twa/errors.hpp"

namespace twa {

namespace {

void require_max_plus(SemiringTag tag, const char* what) {
  if (tag != SemiringTag::MaxPlus) {
    throw SemiringError(std::string(what) + " needs a max-plus matrix");
  }
}

}  // namespace

TropicalMatrix::TropicalMatrix(std::size_t n, SemiringTag tag)
    : n_(n), tag_(tag), entries_(n * n) {
  check_conforms(Weight::zero(), tag);
}

TropicalMatrix TropicalMatrix::identity(std::size_t n, SemiringTag tag) {
  TropicalMatrix m(n, tag);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Weight::one());
  return m;
}

void TropicalMatrix::set(std::size_t i, std::size_t j, Weight w) {
  if (i >= n_ || j >= n_) throw DimensionError("matrix index out of range");
  check_conforms(w, tag_);
  entries_[i * n_ + j] = std::move(w);
}

TropicalMatrix mat_mul(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("mat_mul: dimension mismatch");
  if (a.tag() != b.tag()) throw SemiringError("mat_mul: tag mismatch");
  const std::size_t n = a.size();
  TropicalMatrix c(n, a.tag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Weight& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        c.set(i, j, oplus(c(i, j), otimes(aik, b(k, j), a.tag()), a.tag()));
      }
    }
  }
  return c;
}

TropicalMatrix mat_oplus(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("mat_oplus: dimension mismatch");
  if (a.tag() != b.tag()) throw SemiringError("mat_oplus: tag mismatch");
  TropicalMatrix c(a.size(), a.tag());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c.set(i, j, oplus(a(i, j), b(i, j), a.tag()));
  return c;
}

std::vector<Weight> vec_mul(const std::vector<Weight>& v, const TropicalMatrix& m) {
  if (v.size() != m.size()) throw DimensionError("vec_mul: dimension mismatch");
  std::vector<Weight> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      out[j] = oplus(out[j], otimes(v[i], m(i, j), m.tag()), m.tag());
    }
  }
  return out;
}

ArcGraph ArcGraph::from_matrix(const TropicalMatrix& m) {
  ArcGraph g(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j).is_finite()) g.add_arc(i, j, m(i, j).value());
  return g;
}

void ArcGraph::add_arc(std::size_t source, std::size_t target, const Rational& weight) {
  if (source >= size() || target >= size()) throw DimensionError("arc endpoint out of range");
  for (auto& arc : out_[source]) {
    if (arc.target == target) {
      if (weight > arc.weight) arc.weight = weight;
      return;
    }
  }
  out_[source].push_back(Arc{target, weight});
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const ArcGraph& graph) {
  // Iterative Tarjan; recursion depth would otherwise follow path length.
  const std::size_t n = graph.size();
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_arc;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const auto& arcs = graph.out(frame.v);
      if (frame.next_arc < arcs.size()) {
        std::size_t w = arcs[frame.next_arc++].target;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.v] = std::min(low[frame.v], index[w]);
        }
        continue;
      }
      std::size_t v = frame.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

namespace {

// Karp's algorithm on one strongly connected component with at least one
// arc. best[k][v] is the heaviest walk of exactly k arcs from the
// component's first vertex to v; parent[k][v] its last-but-one vertex.
Circuit karp_component(const ArcGraph& graph, const std::vector<std::size_t>& component) {
  const std::size_t m = component.size();
  std::vector<std::size_t> local(graph.size(), m);
  for (std::size_t i = 0; i < m; ++i) local[component[i]] = i;

  std::vector<std::vector<Weight>> best(m + 1, std::vector<Weight>(m));
  std::vector<std::vector<std::size_t>> parent(m + 1, std::vector<std::size_t>(m, m));
  best[0][0] = Weight::one();
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t u = 0; u < m; ++u) {
      if (best[k - 1][u].is_zero()) continue;
      const Rational& base = best[k - 1][u].value();
      for (const auto& arc : graph.out(component[u])) {
        std::size_t v = local[arc.target];
        if (v == m) continue;
        Rational candidate = base + arc.weight;
        if (best[k][v].is_zero() || candidate > best[k][v].value()) {
          best[k][v] = Weight(candidate);
          parent[k][v] = u;
        }
      }
    }
  }

  std::optional<Rational> rho;
  std::size_t argmax = m;
  for (std::size_t v = 0; v < m; ++v) {
    if (best[m][v].is_zero()) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < m; ++k) {
      if (best[k][v].is_zero()) continue;
      Rational ratio = (best[m][v].value() - best[k][v].value()) / Rational(m - k);
      if (!worst || ratio < *worst) worst = ratio;
    }
    if (worst && (!rho || *worst > *rho)) {
      rho = *worst;
      argmax = v;
    }
  }
  if (!rho) throw std::logic_error("karp: component without closed walks");

  // The heaviest m-arc walk into the argmax vertex repeats a vertex; its
  // first simple circuit is critical.
  std::vector<std::size_t> walk(m + 1);
  walk[m] = argmax;
  for (std::size_t k = m; k > 0; --k) walk[k - 1] = parent[k][walk[k]];
  std::vector<std::size_t> seen_at(m, m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    std::size_t v = walk[j];
    if (seen_at[v] != m + 1) {
      Circuit circuit;
      for (std::size_t i = seen_at[v]; i < j; ++i) circuit.vertices.push_back(component[walk[i]]);
      Rational total = 0;
      for (std::size_t i = 0; i < circuit.vertices.size(); ++i) {
        std::size_t from = circuit.vertices[i];
        std::size_t to = circuit.vertices[(i + 1) % circuit.vertices.size()];
        std::optional<Rational> w;
        for (const auto& arc : graph.out(from))
          if (arc.target == to && (!w || arc.weight > *w)) w = arc.weight;
        total += *w;
      }
      circuit.mean = total / Rational(circuit.vertices.size());
      circuit.mean.canonicalize();
      if (circuit.mean != *rho) throw std::logic_error("karp: extracted circuit is not critical");
      return circuit;
    }
    seen_at[v] = j;
  }
  throw std::logic_error("karp: walk without repetition");
}

bool has_internal_arc(const ArcGraph& graph, const std::vector<std::size_t>& component) {
  if (component.size() > 1) return true;
  for (const auto& arc : graph.out(component[0]))
    if (arc.target == component[0]) return true;
  return false;
}

}  // namespace

std::optional<Circuit> critical_circuit(const ArcGraph& graph) {
  std::optional<Circuit> best;
  for (const auto& component : strongly_connected_components(graph)) {
    if (!has_internal_arc(graph, component)) continue;
    Circuit c = karp_component(graph, component);
    if (!best || c.mean > best->mean) best = std::move(c);
  }
  return best;
}

Weight max_mean_cycle(const TropicalMatrix& m) {
  require_max_plus(m.tag(), "max_mean_cycle");
  auto circuit = critical_circuit(ArcGraph::from_matrix(m));
  return circuit ? Weight(circuit->mean) : Weight::zero();
}

TropicalMatrix mat_star(const TropicalMatrix& m) {
  require_max_plus(m.tag(), "mat_star");
  if (is_positive(max_mean_cycle(m))) {
    throw PositiveCycleError("mat_star: matrix has a circuit of positive weight");
  }
  const std::size_t n = m.size();
  TropicalMatrix s = m;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (s(k, j).is_zero()) continue;
        s.set(i, j, oplus(s(i, j), otimes(s(i, k), s(k, j), m.tag()), m.tag()));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) s.set(i, i, oplus(s(i, i), Weight::one(), m.tag()));
  return s;
}

std::vector<Weight> star_times_vector(const ArcGraph& graph, const std::vector<Weight>& v) {
  if (v.size() != graph.size()) throw DimensionError("star_times_vector: dimension mismatch");
  std::vector<Weight> u = v;
  const std::size_t n = graph.size();
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& arc : graph.out(i)) {
        const Weight& uj = u[arc.target];
        if (uj.is_zero()) continue;
        Rational candidate = arc.weight + uj.value();
        if (u[i].is_zero() || candidate > u[i].value()) {
          u[i] = Weight(candidate);
          changed = true;
        }
      }
    }
    if (!changed) return u;
  }
  throw PositiveCycleError("star_times_vector: positive circuit, the star diverges");
}

}  // namespace twa
