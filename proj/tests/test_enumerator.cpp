#include <doctest.h>

#include "nquandle/enumerator.hpp"
#include "nquandle/families.hpp"

using namespace nquandle;

namespace {

constexpr Generator a = 0, b = 1;

std::size_t cardinality(const Presentation& p, EnumerationLimits limits = {}) {
  const auto out = enumerate(p, limits);
  REQUIRE(out.finite());
  return out.quandle().size();
}

Presentation family(std::string_view id, std::vector<int> orders,
                    std::optional<int> k = {}) {
  return augment_orders(builtin_family(id, {k}), std::move(orders));
}

// Every stored edge has its partner and points at a live vertex.
bool edges_paired(const TraceGraph& g) {
  for (auto v : g.live_vertices()) {
    for (Generator j = 0; j < g.generator_count(); ++j) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const Letter l{j, s};
        const auto t = g.edge(v, l);
        if (t == TraceGraph::none) continue;
        if (!g.is_live(t) || g.edge(t, l.inverse()) != v) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("enumerator") {

TEST_CASE("enumerate reaches the known sizes") {
  CHECK(cardinality(family("T28", {2, 3})) == 20);
  CHECK(cardinality(parse_presentation("gens a; comp a:1; N 5")) == 1);
  CHECK(cardinality(family("Mk", {2, 3}, 2)) == 62);
}

TEST_CASE("an infinite quandle stops at the vertex cap") {
  EnumerationLimits limits;
  limits.max_vertices = 10000;
  const auto out = enumerate(family("Wirtinger:trefoil", {6}), limits);
  REQUIRE_FALSE(out.finite());
  CHECK(out.exceeded().cap == CapKind::vertices);
  CHECK(out.exceeded().vertex_count > 10000);
}

TEST_CASE("the step cap is reported separately") {
  EnumerationLimits limits;
  limits.max_steps = 50;
  const auto out = enumerate(family("T33", {2, 3, 5}), limits);
  REQUIRE_FALSE(out.finite());
  CHECK(out.exceeded().cap == CapKind::steps);
}

TEST_CASE("enumerate rejects a presentation without N") {
  CHECK_THROWS_AS(enumerate(builtin_family("T24")), PresentationError);
}

TEST_CASE("tracing along the idempotence loop adds nothing") {
  auto g = TraceGraph::with_generators(1);
  CHECK(g.edge(0, pos(a)) == 0);
  g.trace(0, Word{pos(a), pos(a)}, 0);
  g.collapse();
  CHECK(g.vertex_count() == 1);
}

TEST_CASE("tracing a fresh letter creates one named vertex") {
  auto g = TraceGraph::with_generators(2);
  const auto v = g.trace(a, Word{pos(b)});
  CHECK(v == 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.witness(v) == Expression{a, Word{pos(b)}});
  CHECK(g.edge(v, neg(b)) == a);
}

TEST_CASE("tracing a primary relation identifies its end with the target") {
  auto g = TraceGraph::with_generators(2);
  const auto end = g.trace(a, Word{pos(b), pos(a), pos(b)});
  CHECK(end != a);
  g.merge(end, a);
  g.collapse();
  CHECK(g.find(end) == a);
  CHECK(edges_paired(g));
}

TEST_CASE("collapse propagates to same-labelled targets") {
  auto g = TraceGraph::with_generators(2);
  const auto x = g.define(a, pos(b));
  const auto y = g.define(b, pos(b));
  REQUIRE(g.find(x) != g.find(y));
  g.merge(a, b);
  g.collapse();
  CHECK(g.find(a) == g.find(b));
  CHECK(g.find(x) == g.find(y));
  CHECK(g.find(b) == a);
  CHECK(edges_paired(g));
}

TEST_CASE("merging a vertex with itself is a no-op") {
  auto g = TraceGraph::with_generators(2);
  g.merge(a, a);
  g.collapse();
  CHECK(g.live_count() == 2);
}

TEST_CASE("relations that are not cyclically reduced keep edges paired") {
  auto g = TraceGraph::with_generators(2);
  g.trace(a, Word{pos(b), pos(a), pos(a), neg(b)}, a);
  g.collapse();
  CHECK(edges_paired(g));
  CHECK(cardinality(family("Mk", {2, 3}, 1)) == 26);
}

TEST_CASE("run_schedule on the torus fixtures") {
  CHECK(cardinality(family("T24", {3, 3})) == 8);
  CHECK(cardinality(family("T33", {2, 3, 3})) == 14);
  CHECK(cardinality(family("T26", {2, 5})) == 42);
  CHECK(cardinality(parse_presentation("gens a; comp a:1; N 1")) == 1);
}

TEST_CASE("run_schedule on a hand-built graph") {
  const auto p = family("T24", {3, 4});
  auto g = TraceGraph::with_generators(p.generator_count());
  for (const auto& r : p.relations) {
    g.trace(r.base, r.word, r.target);
    g.collapse();
  }
  const auto out = run_schedule(g, p);
  REQUIRE(out.finite());
  CHECK(out.quandle().size() == 14);
  CHECK(g.live_count() == 14);
}

TEST_CASE("enumeration is deterministic") {
  const auto p = family("T33", {2, 3, 5});
  const auto first = enumerate(p);
  const auto second = enumerate(p);
  REQUIRE(first.finite());
  REQUIRE(second.finite());
  CHECK(first.quandle() == second.quandle());
}

TEST_CASE("raising the cap does not change a finite result") {
  const auto p = family("T210", {2, 3});
  const auto base = enumerate(p, {1000, 100'000'000});
  REQUIRE(base.finite());
  for (std::size_t cap : {5000u, 100000u, 1000000u}) {
    const auto out = enumerate(p, {cap, 100'000'000});
    REQUIRE(out.finite());
    CHECK(out.quandle() == base.quandle());
  }
}

TEST_CASE("witnesses name generators by their own letter") {
  const auto out = enumerate(family("T24", {3, 3}));
  REQUIRE(out.finite());
  const auto& q = out.quandle();
  CHECK(q.witness(q.generator_element(a)) == Expression{a, Word{}});
  CHECK(q.witness(q.generator_element(b)) == Expression{b, Word{}});
}

}  // TEST_SUITE
