#include <doctest.h>

#include <random>
#include <vector>

#include "nquandle/words.hpp"

using namespace nquandle;

namespace {

constexpr Generator a = 0, b = 1, c = 2;

// Oracle: erase the first cancelling pair until none is left.
std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].cancels(w[i + 1])) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::vector<Letter> as_vector(const Word& w) { return {w.begin(), w.end()}; }

Letter letter_from_code(unsigned code) {
  return {code / 2, code % 2 ? Sign::minus : Sign::plus};
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("reduce cancels adjacent inverse pairs") {
  const std::vector<Letter> raw{pos(a), pos(b), neg(b), pos(c)};
  CHECK(reduce(raw) == Word{pos(a), pos(c)});
  CHECK(reduce(std::vector<Letter>{}).empty());
  const std::vector<Letter> twice{pos(a), neg(a), pos(b), neg(b)};
  CHECK(reduce(twice).empty());
  CHECK(as_vector(reduce(twice)) == naive_reduce(twice));
}

TEST_CASE("reduce agrees with the rewrite oracle on every short word") {
  // Every word of length <= 8 over a, b, c and their inverses.
  std::vector<Letter> w;
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= 8; ++len) {
    std::vector<unsigned> code(len, 0);
    for (;;) {
      w.clear();
      for (unsigned x : code) w.push_back(letter_from_code(x));
      const Word r = reduce(w);
      REQUIRE(as_vector(r) == naive_reduce(w));
      REQUIRE(reduce(r.letters()) == r);
      REQUIRE(r.size() <= w.size());
      ++checked;
      std::size_t i = 0;
      while (i < len && ++code[i] == 6) code[i++] = 0;
      if (i == len) break;
    }
  }
  CHECK(checked == 2015539);
}

TEST_CASE("reduce agrees with the rewrite oracle on sampled words up to length 12") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> pick(0, 5);
  for (int trial = 0; trial < 200000; ++trial) {
    std::vector<Letter> w(9 + trial % 4);
    for (auto& l : w) l = letter_from_code(pick(rng));
    const Word r = reduce(w);
    REQUIRE(as_vector(r) == naive_reduce(w));
    REQUIRE(reduce(r.letters()) == r);
  }
}

TEST_CASE("invert reverses and flips") {
  CHECK(invert(Word{pos(a), neg(b)}) == Word{pos(b), neg(a)});
  CHECK(invert(Word{}).empty());
  CHECK(invert(Word{pos(a), pos(b), neg(c)}) == Word{pos(c), neg(b), neg(a)});
}

TEST_CASE("invert is an involutive anti-homomorphism") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> pick(0, 5);
  auto random_word = [&] {
    std::vector<Letter> w(rng() % 10);
    for (auto& l : w) l = letter_from_code(pick(rng));
    return reduce(w);
  };
  for (int trial = 0; trial < 5000; ++trial) {
    const Word u = random_word();
    const Word v = random_word();
    REQUIRE(invert(invert(u)) == u);
    REQUIRE(concat(u, invert(u)).empty());
    REQUIRE(invert(concat(u, v)) == concat(invert(v), invert(u)));
  }
}

TEST_CASE("power repeats and inverts") {
  CHECK(power(Word{pos(a), pos(b)}, 2) == Word{pos(a), pos(b), pos(a), pos(b)});
  CHECK(power(Word{pos(a), pos(b)}, -1) == Word{neg(b), neg(a)});
  CHECK(power(Word{pos(a)}, 0).empty());
}

TEST_CASE("apply_expression re-associates nested exponents") {
  // (a^b)^(b) = a^{b b}
  CHECK(apply_expression({a, Word{pos(b)}}, {b, Word{}}, Sign::plus) ==
        Expression{a, Word{pos(b), pos(b)}});
  // a^(b^c) = a^{c' b c}
  CHECK(apply_expression({a, Word{}}, {b, Word{pos(c)}}, Sign::plus) ==
        Expression{a, Word{neg(c), pos(b), pos(c)}});
  // (a^c) acted on by b^c with the inverse operation: c c' b' c = b' c
  CHECK(apply_expression({a, Word{pos(c)}}, {b, Word{pos(c)}}, Sign::minus) ==
        Expression{a, Word{neg(b), pos(c)}});
}

TEST_CASE("acting and then acting back restores the expression") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<unsigned> pick(0, 5);
  auto random_word = [&] {
    std::vector<Letter> w(rng() % 7);
    for (auto& l : w) l = letter_from_code(pick(rng));
    return reduce(w);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const Expression x{static_cast<Generator>(rng() % 3), random_word()};
    const Expression y{static_cast<Generator>(rng() % 3), random_word()};
    REQUIRE(apply_expression(apply_expression(x, y, Sign::plus), y, Sign::minus) == x);
  }
}

TEST_CASE("formatting uses names and primes") {
  const std::vector<std::string> names{"a", "b", "c"};
  CHECK(format_word(Word{pos(b), neg(a), pos(b)}, names) == "b a' b");
  CHECK(format_expression({a, Word{pos(b), pos(a)}}, names) == "a^[b a]");
  CHECK(format_expression({c, Word{}}, names) == "c");
}

}  // TEST_SUITE
