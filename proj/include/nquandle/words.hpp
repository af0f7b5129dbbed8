#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nquandle {

/// Index into a presentation's generator table.
using Generator = std::uint32_t;

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// A generator or its formal inverse: x or x̄.
struct Letter {
  Generator generator = 0;
  Sign sign = Sign::plus;

  constexpr Letter inverse() const { return {generator, flip(sign)}; }
  constexpr bool cancels(const Letter& other) const {
    return generator == other.generator && sign != other.sign;
  }
  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter pos(Generator g) { return {g, Sign::plus}; }
constexpr Letter neg(Generator g) { return {g, Sign::minus}; }

/// Freely reduced element of the free group on the generators.
///
/// Every constructor path goes through reduce(), so a Word never holds an
/// adjacent cancelling pair.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> letters);

/// w⁻¹: letters reversed with signs flipped.
Word invert(const Word& w);

/// Reduced product u·v.
Word concat(const Word& u, const Word& v);

template <typename... Words>
Word concat(const Word& u, const Word& v, const Words&... rest) {
  return concat(concat(u, v), rest...);
}

/// w repeated |e| times, using w⁻¹ when e < 0.
Word power(const Word& w, int e);

/// An expression a^w naming a quandle element: base generator acted on by
/// the exponent word from left to right.
struct Expression {
  Generator base = 0;
  Word exponent;

  friend bool operator==(const Expression&, const Expression&) = default;
};

/// Re-association of (a^u) ▷^{±1} (b^v) into a^{u v̄ b^{±1} v}.
Expression apply_expression(const Expression& target,
                            const Expression& operand, Sign sign);

/// Renders a word with the given generator names, e.g. "b a' b".
std::string format_word(const Word& w, std::span<const std::string> names);

/// Renders a^[w] (or the bare name when w is empty).
std::string format_expression(const Expression& e,
                              std::span<const std::string> names);

}  // namespace nquandle
