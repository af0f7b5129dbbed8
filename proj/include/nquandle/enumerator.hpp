#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "nquandle/presentation.hpp"
#include "nquandle/quandle.hpp"
#include "nquandle/words.hpp"

namespace nquandle {

struct EnumerationLimits {
  std::size_t max_vertices = 100'000;
  std::uint64_t max_steps = 100'000'000;
};

enum class CapKind { vertices, steps };

/// Thrown out of TraceGraph operations when a cap is hit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(CapKind kind, std::size_t vertex_count);
  CapKind kind() const { return kind_; }
  std::size_t vertex_count() const { return vertex_count_; }

 private:
  CapKind kind_;
  std::size_t vertex_count_;
};

/// Partial Cayley graph under construction.
///
/// Vertices are numbered consecutively from 0 in creation order and are never
/// renumbered; merged vertices forward to the smallest label through a
/// union-find. For each letter (generator and sign) a live vertex has at most
/// one outgoing edge, and an edge u --l--> v is always stored together with
/// v --l̄--> u.
class TraceGraph {
 public:
  using Vertex = std::uint32_t;
  static constexpr Vertex none = ~Vertex{0};

  TraceGraph(std::size_t generator_count, EnumerationLimits limits = {});

  /// Creates a vertex for each generator plus its idempotence loop.
  static TraceGraph with_generators(std::size_t generator_count,
                                    EnumerationLimits limits = {});

  std::size_t generator_count() const { return generator_count_; }
  /// Total vertices ever created.
  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t live_count() const { return live_; }
  std::uint64_t steps() const { return steps_; }

  Vertex find(Vertex v) const;
  bool is_live(Vertex v) const { return parent_[v] == v; }
  /// Target of the l-edge out of live vertex v, or `none`.
  Vertex edge(Vertex v, Letter l) const { return table_[slot(v, l)]; }
  /// a^w naming v, where v was created by following w from generator a.
  Expression witness(Vertex v) const;

  /// New vertex reached from `from` along l.
  Vertex define(Vertex from, Letter l);

  /// Ensures a path labelled w leaves `start` and ends at the returned vertex.
  Vertex trace(Vertex start, const Word& w);
  /// Ensures a path labelled w runs from `start` to `end`, creating vertices
  /// only where neither end can be followed; conflicting endpoints are
  /// queued for merging.
  void trace(Vertex start, const Word& w, Vertex end);

  /// Queues u = v.
  void merge(Vertex u, Vertex v);
  bool has_pending() const { return !pending_.empty(); }
  /// Drains the merge queue to a fixpoint.
  void collapse();

  /// Live vertices in label order.
  std::vector<Vertex> live_vertices() const;

 private:
  std::size_t slot(Vertex v, Letter l) const {
    return static_cast<std::size_t>(v) * 2 * generator_count_ +
           2 * l.generator + (l.sign == Sign::minus ? 1 : 0);
  }
  void connect(Vertex u, Letter l, Vertex v);
  void coincidence(Vertex u, Vertex v);
  void step();

  std::size_t generator_count_;
  EnumerationLimits limits_;
  std::vector<Vertex> table_;
  mutable std::vector<Vertex> parent_;
  // Creation record: parent vertex and letter (none for generator vertices).
  std::vector<Vertex> origin_;
  std::vector<Letter> origin_letter_;
  std::deque<std::pair<Vertex, Vertex>> pending_;
  std::size_t live_ = 0;
  std::uint64_t steps_ = 0;
};

struct Exceeded {
  CapKind cap;
  std::size_t vertex_count;
};

class EnumerationOutcome {
 public:
  explicit EnumerationOutcome(FiniteQuandle q) : value_(std::move(q)) {}
  explicit EnumerationOutcome(Exceeded e) : value_(e) {}

  bool finite() const { return std::holds_alternative<FiniteQuandle>(value_); }
  const FiniteQuandle& quandle() const { return std::get<FiniteQuandle>(value_); }
  const Exceeded& exceeded() const { return std::get<Exceeded>(value_); }

 private:
  std::variant<FiniteQuandle, Exceeded> value_;
};

/// Runs the relation sweep on a graph whose generator vertices, loops and
/// primary relations are already traced: every live vertex, in label order
/// and including vertices created along the way, has each order relation and
/// then each secondary relation traced and collapsed. Returns the sealed
/// quandle or the cap that stopped it.
EnumerationOutcome run_schedule(TraceGraph& graph, const Presentation& p);

/// Enumerates the N-quandle presented by p (whose orders must be set).
EnumerationOutcome enumerate(const Presentation& p,
                             const EnumerationLimits& limits = {});

/// Seals a complete graph: live vertices renumbered in label order.
FiniteQuandle seal(const TraceGraph& graph, const Presentation& p);

}  // namespace nquandle
