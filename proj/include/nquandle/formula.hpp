#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nquandle {

class FormulaError : public std::runtime_error {
 public:
  explicit FormulaError(const std::string& what) : std::runtime_error(what) {}
};

/// Integer arithmetic over named variables: + - * unary minus, |x|, parens.
/// Example: "18*|2*k-1|+8".
long long evaluate_formula(std::string_view formula,
                           const std::map<std::string, long long>& vars);

/// Names the formula reads, in first-use order without repeats.
std::vector<std::string> formula_variables(std::string_view formula);

}  // namespace nquandle
