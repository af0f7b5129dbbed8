#include <doctest.h>

#include "nquandle/formula.hpp"

using namespace nquandle;

TEST_SUITE("formula") {

TEST_CASE("evaluates the catalog expressions") {
  CHECK(evaluate_formula("n*|k|+2", {{"n", 4}, {"k", -5}}) == 22);
  CHECK(evaluate_formula("18*|2*k-1|+8", {{"k", -1}}) == 62);
  CHECK(evaluate_formula("2*q*(|k*q-p|+1)", {{"k", 1}, {"p", 1}, {"q", 3}}) == 18);
  CHECK(evaluate_formula("-(3 - 5) * 2", {}) == 4);
  CHECK(evaluate_formula("12", {}) == 12);
}

TEST_CASE("lists variables in first-use order") {
  CHECK(formula_variables("2*(q+1)*|(k-1)*q-p|") ==
        std::vector<std::string>{"q", "k", "p"});
}

TEST_CASE("rejects malformed or unbound formulas") {
  CHECK_THROWS_AS(evaluate_formula("n*", {{"n", 1}}), FormulaError);
  CHECK_THROWS_AS(evaluate_formula("|k", {{"k", 1}}), FormulaError);
  CHECK_THROWS_AS(evaluate_formula("k+1", {}), FormulaError);
  CHECK_THROWS_AS(evaluate_formula("2 2", {}), FormulaError);
}

}  // TEST_SUITE
