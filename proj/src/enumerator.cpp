#include "nquandle/enumerator.hpp"

#include <algorithm>
#include <string>

namespace nquandle {

CapExceeded::CapExceeded(CapKind kind, std::size_t vertex_count)
    : std::runtime_error(std::string(kind == CapKind::vertices ? "vertex"
                                                               : "step") +
                         " cap exceeded at " + std::to_string(vertex_count) +
                         " vertices"),
      kind_(kind),
      vertex_count_(vertex_count) {}

TraceGraph::TraceGraph(std::size_t generator_count, EnumerationLimits limits)
    : generator_count_(generator_count), limits_(limits) {}

TraceGraph TraceGraph::with_generators(std::size_t generator_count,
                                       EnumerationLimits limits) {
  TraceGraph graph(generator_count, limits);
  for (Generator g = 0; g < generator_count; ++g) {
    if (graph.vertex_count() + 1 > limits.max_vertices) {
      throw CapExceeded(CapKind::vertices, graph.vertex_count() + 1);
    }
    const auto v = static_cast<Vertex>(graph.parent_.size());
    graph.parent_.push_back(v);
    graph.origin_.push_back(none);
    graph.origin_letter_.push_back(pos(g));
    graph.table_.resize(graph.table_.size() + 2 * generator_count, none);
    ++graph.live_;
  }
  for (Generator g = 0; g < generator_count; ++g) {
    graph.connect(g, pos(g), g);
  }
  return graph;
}

TraceGraph::Vertex TraceGraph::find(Vertex v) const {
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const Vertex next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

Expression TraceGraph::witness(Vertex v) const {
  std::vector<Letter> reversed;
  while (origin_[v] != none) {
    reversed.push_back(origin_letter_[v]);
    v = origin_[v];
  }
  std::reverse(reversed.begin(), reversed.end());
  return {origin_letter_[v].generator, reduce(reversed)};
}

void TraceGraph::step() {
  if (++steps_ > limits_.max_steps) {
    throw CapExceeded(CapKind::steps, vertex_count());
  }
}

TraceGraph::Vertex TraceGraph::define(Vertex from, Letter l) {
  step();
  if (vertex_count() + 1 > limits_.max_vertices) {
    throw CapExceeded(CapKind::vertices, vertex_count() + 1);
  }
  const auto v = static_cast<Vertex>(parent_.size());
  parent_.push_back(v);
  origin_.push_back(from);
  origin_letter_.push_back(l);
  table_.resize(table_.size() + 2 * generator_count_, none);
  ++live_;
  connect(from, l, v);
  return v;
}

void TraceGraph::connect(Vertex u, Letter l, Vertex v) {
  table_[slot(u, l)] = v;
  table_[slot(v, l.inverse())] = u;
}

TraceGraph::Vertex TraceGraph::trace(Vertex start, const Word& w) {
  Vertex f = find(start);
  for (const Letter& l : w) {
    step();
    const Vertex next = edge(f, l);
    f = next == none ? define(f, l) : next;
  }
  return f;
}

void TraceGraph::trace(Vertex start, const Word& w, Vertex end) {
  Vertex f = find(start);
  Vertex b = find(end);
  std::size_t i = 0;
  std::size_t j = w.size();
  // Scan forward, then backward, as far as edges already exist.
  while (i < j) {
    const Vertex next = edge(f, w[i]);
    if (next == none) break;
    step();
    f = next;
    ++i;
  }
  if (i == j) {
    merge(f, b);
    return;
  }
  while (j > i) {
    const Vertex prev = edge(b, w[j - 1].inverse());
    if (prev == none) break;
    step();
    b = prev;
    --j;
  }
  if (i == j) {
    merge(f, b);
    return;
  }
  while (j - i > 1) {
    f = define(f, w[i]);
    ++i;
  }
  // One letter is left. Its slot at b can have been taken by the defines
  // above when w is not cyclically reduced and start == end.
  const Vertex taken = edge(b, w[i].inverse());
  if (taken != none) {
    merge(taken, f);
  } else {
    connect(f, w[i], b);
  }
}

void TraceGraph::merge(Vertex u, Vertex v) { pending_.emplace_back(u, v); }

void TraceGraph::collapse() {
  while (!pending_.empty()) {
    const auto [u, v] = pending_.front();
    pending_.pop_front();
    coincidence(find(u), find(v));
  }
}

void TraceGraph::coincidence(Vertex u, Vertex v) {
  if (u == v) return;
  step();
  if (v < u) std::swap(u, v);
  parent_[v] = u;
  --live_;

  // Detach every edge at v, then re-attach it at u.
  std::vector<std::pair<Letter, Vertex>> moved;
  for (Generator g = 0; g < generator_count_; ++g) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      const Letter l{g, s};
      const Vertex x = table_[slot(v, l)];
      if (x == none) continue;
      table_[slot(v, l)] = none;
      table_[slot(x, l.inverse())] = none;
      moved.emplace_back(l, x);
    }
  }
  for (const auto& [l, x] : moved) {
    const Vertex t = find(x);
    const Vertex y = edge(u, l);
    if (y != none) {
      if (y != t) merge(y, t);
      continue;
    }
    const Vertex z = edge(t, l.inverse());
    if (z != none) {
      merge(z, u);
      continue;
    }
    connect(u, l, t);
  }
}

std::vector<TraceGraph::Vertex> TraceGraph::live_vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_);
  for (Vertex v = 0; v < parent_.size(); ++v) {
    if (is_live(v)) out.push_back(v);
  }
  return out;
}

FiniteQuandle seal(const TraceGraph& graph, const Presentation& p) {
  const std::size_t g = graph.generator_count();
  const auto live = graph.live_vertices();
  std::vector<Element> index(graph.vertex_count(), ~Element{0});
  for (std::size_t i = 0; i < live.size(); ++i) {
    index[live[i]] = static_cast<Element>(i);
  }
  std::vector<Element> action(live.size() * g);
  std::vector<Element> inverse(live.size() * g);
  std::vector<Expression> witnesses;
  witnesses.reserve(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (Generator j = 0; j < g; ++j) {
      const auto fwd = graph.edge(live[i], pos(j));
      const auto bwd = graph.edge(live[i], neg(j));
      if (fwd == TraceGraph::none || bwd == TraceGraph::none) {
        throw std::logic_error("sealing an incomplete Cayley graph");
      }
      action[i * g + j] = index[graph.find(fwd)];
      inverse[i * g + j] = index[graph.find(bwd)];
    }
    witnesses.push_back(graph.witness(live[i]));
  }
  FiniteQuandle::Generators gens;
  gens.names = p.generator_names;
  gens.component_of = p.component_of;
  gens.orders = p.orders;
  for (Generator j = 0; j < g; ++j) {
    gens.element_of.push_back(index[graph.find(j)]);
  }
  return FiniteQuandle(std::move(gens), std::move(action), std::move(inverse),
                       std::move(witnesses));
}

EnumerationOutcome run_schedule(TraceGraph& graph, const Presentation& p) {
  auto relations = secondary_relations(p);
  std::stable_partition(relations.begin(), relations.end(), [](const auto& r) {
    return r.kind == UniversalRelation::Kind::order;
  });
  try {
    graph.collapse();
    // vertex_count() grows while the sweep runs; new vertices are visited too.
    for (TraceGraph::Vertex v = 0; v < graph.vertex_count(); ++v) {
      for (const auto& r : relations) {
        if (!graph.is_live(v)) break;
        graph.trace(v, r.word, v);
        graph.collapse();
      }
    }
  } catch (const CapExceeded& e) {
    return EnumerationOutcome(Exceeded{e.kind(), e.vertex_count()});
  }
  return EnumerationOutcome(seal(graph, p));
}

EnumerationOutcome enumerate(const Presentation& p,
                             const EnumerationLimits& limits) {
  p.validate();
  if (!p.has_orders()) {
    throw PresentationError("enumeration needs N; none was supplied");
  }
  if (limits.max_vertices < 1 || limits.max_steps < 1) {
    throw std::invalid_argument("enumeration limits must be positive");
  }
  try {
    TraceGraph graph = TraceGraph::with_generators(p.generator_count(), limits);
    for (const auto& r : p.relations) {
      graph.trace(r.base, r.word, r.target);
      graph.collapse();
    }
    return run_schedule(graph, p);
  } catch (const CapExceeded& e) {
    return EnumerationOutcome(Exceeded{e.kind(), e.vertex_count()});
  }
}

}  // namespace nquandle
