#include <doctest.h>

#include <set>

#include "nquandle/diagram.hpp"
#include "nquandle/families.hpp"
#include "nquandle/presentation.hpp"

using namespace nquandle;

namespace {

constexpr Generator a = 0, b = 1, c = 2;

}  // namespace

TEST_SUITE("presentation") {

TEST_CASE("parses the (3,4) torus link presentation") {
  const auto p = parse_presentation(
      "gens a b; comp a:1 b:2; N 3 4; rel a^[b a b]=a; rel b^[a b a]=b");
  CHECK(p.generator_names == std::vector<std::string>{"a", "b"});
  CHECK(p.component_of == std::vector<int>{1, 2});
  CHECK(p.orders == std::vector<int>{3, 4});
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] == PrimaryRelation{a, Word{pos(b), pos(a), pos(b)}, a});
  CHECK(p.relations[1] == PrimaryRelation{b, Word{pos(a), pos(b), pos(a)}, b});
}

TEST_CASE("a lone generator needs no relations") {
  const auto p = parse_presentation("gens a; comp a:1; N 2;");
  CHECK(p.generator_count() == 1);
  CHECK(p.relations.empty());
  CHECK(p.orders == std::vector<int>{2});
}

TEST_CASE("inverse letters, powers and comments") {
  const auto p = parse_presentation(
      "# twist\ngens a b c\ncomp a:1 b:1 c:2\nrel a^[c a c' a c' a' c]=a\n"
      "rel b^[(a b)^2 c^-1]=a\n");
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].word ==
        Word{pos(c), pos(a), neg(c), pos(a), neg(c), neg(a), pos(c)});
  CHECK(p.relations[1].word == Word{pos(a), pos(b), pos(a), pos(b), neg(c)});
  CHECK_FALSE(p.has_orders());
}

TEST_CASE("parse errors name the problem") {
  CHECK_THROWS_WITH_AS(parse_presentation("gens a; comp a:1; N 2; rel a^[q]=a"),
                       doctest::Contains("unknown generator"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a b; comp a:1 b:2; N 3"),
                  PresentationError);
  CHECK_THROWS_AS(parse_presentation("gens a b; comp a:1 b:3; N 3 3 3"),
                  PresentationError);
  CHECK_THROWS_AS(parse_presentation("gens a; comp a:1; rel a^[a=a"), ParseError);
  try {
    parse_presentation("gens a\ncomp a:1\nrel a^[a z]=a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("print and parse round-trip every builtin") {
  for (const auto& id : builtin_family_ids()) {
    for (int k : {-3, 2, 5}) {
      FamilyParams params;
      if (family_takes_k(id)) params.k = k;
      const auto p = builtin_family(id, params);
      CAPTURE(id);
      CHECK(parse_presentation(print_presentation(p)) == p);
      const auto with_n =
          augment_orders(p, std::vector<int>(static_cast<std::size_t>(p.component_count()), 3));
      CHECK(parse_presentation(print_presentation(with_n)) == with_n);
    }
  }
}

TEST_CASE("builtin component labels cover every component") {
  for (const auto& id : builtin_family_ids()) {
    FamilyParams params;
    if (family_takes_k(id)) params.k = 3;
    const auto p = builtin_family(id, params);
    std::set<int> seen(p.component_of.begin(), p.component_of.end());
    CAPTURE(id);
    CHECK(static_cast<int>(seen.size()) == p.component_count());
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == p.component_count());
  }
}

TEST_CASE("augment_orders checks the length") {
  const auto p = builtin_family("T24");
  CHECK(augment_orders(p, {3, 4}).orders == std::vector<int>{3, 4});
  CHECK(augment_orders(p, {1, 1}).orders == std::vector<int>{1, 1});
  CHECK_THROWS_AS(augment_orders(p, {3}), PresentationError);
}

TEST_CASE("secondary relations are conjugation-shaped") {
  Presentation p = parse_presentation("gens a b; comp a:1 b:1; rel a^[b a b]=a");
  auto rels = secondary_relations(p);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].kind == UniversalRelation::Kind::secondary);
  CHECK(rels[0].word == Word{neg(b), neg(a), neg(b), pos(a), pos(b), pos(a),
                             pos(b), neg(a)});

  p = parse_presentation("gens a b c; comp a:1 b:1 c:2; rel c^[a b]=c");
  CHECK(secondary_relations(p).at(0).word ==
        Word{neg(b), neg(a), pos(c), pos(a), pos(b), neg(c)});

  p = parse_presentation("gens a; comp a:1; N 2");
  rels = secondary_relations(p);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].kind == UniversalRelation::Kind::order);
  CHECK(rels[0].word == Word{pos(a), pos(a)});
}

TEST_CASE("fixture families match their displayed relations") {
  const auto t33 = builtin_family("T33");
  CHECK(t33.relations ==
        std::vector<PrimaryRelation>{{a, Word{pos(c), pos(b)}, a},
                                     {b, Word{pos(a), pos(c)}, b},
                                     {c, Word{pos(b), pos(a)}, c}});

  const auto l3 = builtin_family("Lk", {3});
  CHECK(l3.component_of == std::vector<int>{1, 1, 2});
  CHECK(l3.relations ==
        std::vector<PrimaryRelation>{{c, Word{pos(a), pos(b)}, c},
                                     {a, Word{pos(b), pos(a), pos(b), pos(c)}, b},
                                     {b, Word{pos(a), pos(b), pos(c)}, a}});

  const auto l4 = builtin_family("Lk", {4});
  CHECK(l4.component_of == std::vector<int>{1, 2, 3});
  CHECK(l4.relations ==
        std::vector<PrimaryRelation>{{c, Word{pos(a), pos(b)}, c},
                                     {a, Word{pos(b), pos(a), pos(b), pos(c)}, a},
                                     {b, Word{pos(a), pos(b), pos(a), pos(b), pos(c)}, b}});

  // a^{c a c' a} = a^{c' a c} is stored one-sided.
  const auto m2 = builtin_family("Mk", {2});
  CHECK(m2.component_of == std::vector<int>{1, 1, 2});
  CHECK(m2.relations.at(1) ==
        PrimaryRelation{a, Word{pos(c), pos(a), neg(c), pos(a), neg(c), neg(a), pos(c)}, a});
  CHECK(m2.relations.at(2) ==
        PrimaryRelation{a, Word{neg(c), pos(a), pos(c), neg(b), neg(a)}, b});
}

TEST_CASE("family parameter errors") {
  CHECK_THROWS_AS(builtin_family("Lk", {0}), PresentationError);
  CHECK_THROWS_AS(builtin_family("Lk"), PresentationError);
  CHECK_THROWS_AS(builtin_family("T99"), PresentationError);
  CHECK_NOTHROW(builtin_family("Mk", {0}));
}

}  // TEST_SUITE

TEST_SUITE("diagram") {

TEST_CASE("trefoil closed braid gives three arcs and three crossings") {
  const auto d = closed_braid(2, {1, 1, 1});
  const auto p = wirtinger(d);
  CHECK(p.generator_count() == 3);
  CHECK(p.relations.size() == 3);
  CHECK(p.component_count() == 1);
  // Each relation conjugates one arc by a single other arc.
  for (const auto& r : p.relations) {
    REQUIRE(r.word.size() == 1);
    CHECK(r.word[0].sign == Sign::plus);
    CHECK(r.base != r.target);
    CHECK(r.word[0].generator != r.base);
  }
}

TEST_CASE("a single unknotted arc") {
  const auto d = parse_diagram(R"({"arc_components": {"0": 1}})");
  const auto p = wirtinger(d);
  CHECK(p.generator_count() == 1);
  CHECK(p.relations.empty());
}

TEST_CASE("Hopf link has two components") {
  const auto p = wirtinger(closed_braid(2, {1, 1}));
  CHECK(p.generator_count() == 2);
  CHECK(p.relations.size() == 2);
  CHECK(p.component_count() == 2);
}

TEST_CASE("negative crossings use the inverse letter") {
  const auto p = wirtinger(closed_braid(2, {-1, -1, -1}));
  for (const auto& r : p.relations) CHECK(r.word[0].sign == Sign::minus);
}

TEST_CASE("diagram text round-trips") {
  const auto d = closed_braid(3, {1, 2, 1, 2});
  CHECK(parse_diagram(print_diagram(d)) == d);
}

TEST_CASE("wiring errors name the arc") {
  const char* twice =
      "{\"over\":0,\"under_in\":1,\"under_out\":2,\"sign\":\"+\"}\n"
      "{\"over\":0,\"under_in\":1,\"under_out\":2,\"sign\":\"+\"}\n"
      "{\"arc_components\":{\"0\":1,\"1\":1,\"2\":1}}\n";
  try {
    wirtinger(parse_diagram(twice));
    FAIL("expected a wiring error");
  } catch (const DiagramError& e) {
    CHECK(e.arc() == 2);
  }
  CHECK_THROWS_AS(parse_diagram("{\"over\":0}"), PresentationError);
}

}  // TEST_SUITE
