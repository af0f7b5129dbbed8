#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nquandle/presentation.hpp"
#include "nquandle/words.hpp"

namespace nquandle {

using Element = std::uint32_t;

/// A finite quandle stored as its Cayley graph: the action of each generator
/// (and its inverse) on every element, plus an a^w name for each element.
/// The operation x ▷ y for arbitrary y is recovered from y's name.
class FiniteQuandle {
 public:
  struct Generators {
    std::vector<std::string> names;
    /// 1-based link component per generator.
    std::vector<int> component_of;
    /// n per component.
    std::vector<int> orders;
    /// Element each generator names.
    std::vector<Element> element_of;

    friend bool operator==(const Generators&, const Generators&) = default;
  };

  /// `action[x * g + j]` is x ▷ (generator j), `inverse` likewise for ▷⁻¹.
  /// Only shapes are checked; use verify_axioms for the algebra.
  FiniteQuandle(Generators generators, std::vector<Element> action,
                std::vector<Element> inverse,
                std::vector<Expression> witnesses);

  /// Derives the inverse table; throws std::invalid_argument when some
  /// generator does not act bijectively.
  static FiniteQuandle from_action(Generators generators,
                                   std::vector<Element> action,
                                   std::vector<Expression> witnesses);

  std::size_t size() const { return witnesses_.size(); }
  std::size_t generator_count() const { return gens_.names.size(); }

  Element act(Element x, Generator g, Sign s = Sign::plus) const {
    const std::size_t i = x * generator_count() + g;
    return s == Sign::plus ? action_[i] : inverse_[i];
  }
  Element act(Element x, Letter l) const { return act(x, l.generator, l.sign); }
  Element walk(Element x, const Word& w) const {
    for (const Letter& l : w) x = act(x, l);
    return x;
  }

  Element generator_element(Generator g) const { return gens_.element_of[g]; }
  int component_of_generator(Generator g) const { return gens_.component_of[g]; }
  int order_of_generator(Generator g) const {
    return gens_.orders[static_cast<std::size_t>(gens_.component_of[g] - 1)];
  }
  const Generators& generators() const { return gens_; }
  std::span<const std::string> generator_names() const { return gens_.names; }
  const Expression& witness(Element x) const { return witnesses_[x]; }
  std::string witness_text(Element x) const {
    return format_expression(witnesses_[x], gens_.names);
  }

  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;

 private:
  Generators gens_;
  std::vector<Element> action_;
  std::vector<Element> inverse_;
  std::vector<Expression> witnesses_;
};

/// x ▷ y (or x ▷⁻¹ y): conjugate the base generator of y's name by its
/// exponent, i.e. walk w̄, then the base letter, then w.
Element full_op(const FiniteQuandle& q, Element x, Element y,
                Sign s = Sign::plus);

/// Dense n×n tables of ▷ and ▷⁻¹, row y holding S_y.
struct OperationTable {
  std::size_t size = 0;
  std::vector<Element> op;
  std::vector<Element> inv;

  Element at(Element x, Element y) const { return op[y * size + x]; }
  Element inv_at(Element x, Element y) const { return inv[y * size + x]; }
};

OperationTable densify(const FiniteQuandle& q);

struct Violation {
  std::string rule;
  std::vector<Element> elements;
};

/// Result of a verification pass: empty `violation` means pass.
struct VerificationReport {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
  std::string describe() const;
};

/// Exhaustive A1 over x, A2 over pairs, A3 over triples.
VerificationReport verify_axioms(const FiniteQuandle& q);

/// x ▷ y^{n_i} = x for all x, y with n_i read from y's orbit.
VerificationReport verify_orders(const FiniteQuandle& q);

/// Every primary relation of p holds on the generator elements and every
/// universal relation closes at every element; witnesses name their elements.
VerificationReport verify_relations(const FiniteQuandle& q,
                                    const Presentation& p);

struct OrbitPartition {
  /// Orbits are numbered by their smallest element.
  std::vector<std::size_t> orbit_of;
  std::size_t orbit_count = 0;

  std::vector<std::size_t> sizes() const;
};

/// Connected components of the Cayley graph under all generator actions.
OrbitPartition orbits(const FiniteQuandle& q);

/// S_x as a permutation: result[y] = y ▷ x.
std::vector<Element> point_symmetry(const FiniteQuandle& q, Element x);

bool is_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2);

/// Graphviz rendering: solid/dashed/dotted edges for the first three
/// generators, undirected where a generator acts as an involution on a pair.
std::string export_dot(const FiniteQuandle& q);

/// Adjacency JSON: {"size", "generators", "elements", "action", "inverse_action"}.
std::string export_json(const FiniteQuandle& q);

}  // namespace nquandle
