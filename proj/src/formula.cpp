#include "nquandle/formula.hpp"

#include <algorithm>
#include <cctype>

namespace nquandle {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, long long>* vars)
      : text_(text), vars_(vars) {}

  long long run() {
    const long long v = sum();
    skip();
    if (i_ != text_.size()) fail("unexpected '" + std::string(1, text_[i_]) + "'");
    return v;
  }

  std::vector<std::string> seen;

 private:
  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < text_.size() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw FormulaError("formula '" + std::string(text_) + "': " + why);
  }

  long long sum() {
    long long v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }
  long long product() {
    long long v = unary();
    while (eat('*')) v *= unary();
    return v;
  }
  long long unary() {
    if (eat('-')) return -unary();
    return atom();
  }
  long long atom() {
    skip();
    if (i_ >= text_.size()) fail("unexpected end");
    if (eat('(')) {
      const long long v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (eat('|')) {
      const long long v = sum();
      if (!eat('|')) fail("missing closing '|'");
      return v < 0 ? -v : v;
    }
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        v = v * 10 + (text_[i_++] - '0');
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) ++i_;
      const std::string name(text_.substr(start, i_ - start));
      if (std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
      if (!vars_) return 0;
      const auto it = vars_->find(name);
      if (it == vars_->end()) fail("variable '" + name + "' is unbound");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<std::string, long long>* vars_;
  std::size_t i_ = 0;
};

}  // namespace

long long evaluate_formula(std::string_view formula,
                           const std::map<std::string, long long>& vars) {
  return Parser(formula, &vars).run();
}

std::vector<std::string> formula_variables(std::string_view formula) {
  Parser p(formula, nullptr);
  p.run();
  return p.seen;
}

}  // namespace nquandle
