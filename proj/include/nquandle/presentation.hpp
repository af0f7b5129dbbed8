#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nquandle/words.hpp"

namespace nquandle {

/// Raised for structurally invalid presentations and presentation text.
class PresentationError : public std::runtime_error {
 public:
  explicit PresentationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Syntax error in presentation text, with 1-based position.
class ParseError : public PresentationError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// base^word = target
struct PrimaryRelation {
  Generator base = 0;
  Word word;
  Generator target = 0;

  friend bool operator==(const PrimaryRelation&,
                         const PrimaryRelation&) = default;
};

/// y^word = y for every element y.
struct UniversalRelation {
  enum class Kind { order, secondary };

  Word word;
  Kind kind = Kind::secondary;

  friend bool operator==(const UniversalRelation&,
                         const UniversalRelation&) = default;
};

/// A quandle presentation together with its link-component labelling and the
/// per-component orders N = (n_1, ..., n_k).
struct Presentation {
  std::vector<std::string> generator_names;
  /// 1-based link component of each generator.
  std::vector<int> component_of;
  /// n_i per component; empty until supplied.
  std::vector<int> orders;
  std::vector<PrimaryRelation> relations;

  std::size_t generator_count() const { return generator_names.size(); }
  int component_count() const;
  bool has_orders() const { return !orders.empty(); }
  /// n for the component containing g; requires has_orders().
  int order_of(Generator g) const {
    return orders[static_cast<std::size_t>(component_of[g] - 1)];
  }
  std::optional<Generator> find_generator(std::string_view name) const;

  /// Throws PresentationError if an invariant is broken.
  void validate() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Parses the `gens` / `comp` / `N` / `rel` text format.
Presentation parse_presentation(std::string_view text);

/// Deterministic printer; parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const Presentation& p);

/// Returns p with N attached; the length must match the component count.
Presentation augment_orders(Presentation p, std::vector<int> orders);

/// Universal relations of the N-quandle: one w̄·x_j·w·x̄_k per primary
/// relation (kind secondary), followed by x_j^{n_j} for each generator
/// (kind order). Order relations are omitted when N is unset.
std::vector<UniversalRelation> secondary_relations(const Presentation& p);

}  // namespace nquandle
