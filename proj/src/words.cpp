#include "nquandle/words.hpp"

#include <algorithm>

namespace nquandle {

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  // Stack-based reduction: one pass reaches the fixpoint.
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(out);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(out);
}

Word power(const Word& w, int e) {
  const Word base = e < 0 ? invert(w) : w;
  std::vector<Letter> out;
  const int reps = e < 0 ? -e : e;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return Word(out);
}

Expression apply_expression(const Expression& target,
                            const Expression& operand, Sign sign) {
  const Word middle{Letter{operand.base, sign}};
  return {target.base, concat(target.exponent, invert(operand.exponent),
                              middle, operand.exponent)};
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += names[w[i].generator];
    if (w[i].sign == Sign::minus) out += '\'';
  }
  return out;
}

std::string format_expression(const Expression& e,
                              std::span<const std::string> names) {
  std::string out = names[e.base];
  if (!e.exponent.empty()) {
    out += "^[" + format_word(e.exponent, names) + "]";
  }
  return out;
}

}  // namespace nquandle
