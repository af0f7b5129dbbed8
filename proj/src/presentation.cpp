#include "nquandle/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace nquandle {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : PresentationError("line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

int Presentation::component_count() const {
  int k = 0;
  for (int c : component_of) k = std::max(k, c);
  return k;
}

std::optional<Generator> Presentation::find_generator(
    std::string_view name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (generator_names[i] == name) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

void Presentation::validate() const {
  const std::size_t g = generator_count();
  if (g == 0) throw PresentationError("presentation has no generators");
  if (component_of.size() != g) {
    throw PresentationError("component labelling does not cover every generator");
  }
  std::set<std::string_view> seen;
  for (const auto& name : generator_names) {
    if (!seen.insert(name).second) {
      throw PresentationError("duplicate generator '" + name + "'");
    }
  }
  const int k = component_count();
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  for (std::size_t i = 0; i < g; ++i) {
    if (component_of[i] < 1) {
      throw PresentationError("component index out of range for generator '" +
                              generator_names[i] + "'");
    }
    used[static_cast<std::size_t>(component_of[i])] = true;
  }
  for (int c = 1; c <= k; ++c) {
    if (!used[static_cast<std::size_t>(c)]) {
      throw PresentationError("component " + std::to_string(c) +
                              " has no generators");
    }
  }
  if (has_orders()) {
    if (orders.size() != static_cast<std::size_t>(k)) {
      throw PresentationError("expected " + std::to_string(k) +
                              " N entries, got " +
                              std::to_string(orders.size()));
    }
    for (int n : orders) {
      if (n < 1) throw PresentationError("N entries must be positive");
    }
  }
  for (const auto& r : relations) {
    auto valid = [g](Generator x) { return x < g; };
    bool ok = valid(r.base) && valid(r.target) &&
              std::all_of(r.word.begin(), r.word.end(),
                          [&](const Letter& l) { return valid(l.generator); });
    if (!ok) throw PresentationError("relation references unknown generator");
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    Presentation p;
    std::vector<bool> has_comp;
    bool any_comp = false;
    while (true) {
      skip_blank(true);
      while (!at_end() && peek() == ';') {
        advance();
        skip_blank(true);
      }
      if (at_end()) break;
      const auto [line, col] = position();
      const std::string keyword = identifier("statement keyword");
      if (keyword == "gens") {
        do {
          const auto [nl, nc] = position();
          std::string name = identifier("generator name");
          if (p.find_generator(name)) {
            throw ParseError("duplicate generator '" + name + "'", nl, nc);
          }
          p.generator_names.push_back(std::move(name));
          p.component_of.push_back(0);
          has_comp.push_back(false);
          skip_blank(false);
        } while (!at_statement_end());
      } else if (keyword == "comp") {
        any_comp = true;
        do {
          const Generator x = generator(p);
          expect(':');
          const auto [il, ic] = position();
          const int c = integer();
          if (c < 1) throw ParseError("component index out of range", il, ic);
          p.component_of[x] = c;
          has_comp[x] = true;
          skip_blank(false);
        } while (!at_statement_end());
      } else if (keyword == "N") {
        p.orders.clear();
        do {
          const auto [il, ic] = position();
          const int n = integer();
          if (n < 1) throw ParseError("N entries must be positive", il, ic);
          p.orders.push_back(n);
          skip_blank(false);
        } while (!at_statement_end());
      } else if (keyword == "rel") {
        PrimaryRelation r;
        r.base = generator(p);
        expect('^');
        expect('[');
        std::vector<Letter> letters;
        parse_letters(p, letters, ']');
        expect(']');
        expect('=');
        r.target = generator(p);
        r.word = reduce(letters);
        p.relations.push_back(std::move(r));
      } else {
        throw ParseError("unknown statement '" + keyword + "'", line, col);
      }
      skip_blank(false);
      if (!at_statement_end()) fail("expected end of statement");
      if (!at_end()) advance();
    }
    if (p.generator_names.empty()) fail("missing 'gens' statement");
    for (std::size_t i = 0; i < has_comp.size(); ++i) {
      if (!has_comp[i]) {
        fail(std::string(any_comp ? "generator '" + p.generator_names[i] +
                                        "' has no component"
                                  : "missing 'comp' statement"));
      }
    }
    const int k = p.component_count();
    if (p.has_orders() && p.orders.size() < static_cast<std::size_t>(k)) {
      fail("missing N entry for component " +
           std::to_string(p.orders.size() + 1));
    }
    if (p.has_orders() && p.orders.size() > static_cast<std::size_t>(k)) {
      fail("component index out of range: N has " +
           std::to_string(p.orders.size()) + " entries but only " +
           std::to_string(k) + " components");
    }
    try {
      p.validate();
    } catch (const PresentationError& e) {
      fail(e.what());
    }
    return p;
  }

 private:
  void parse_letters(const Presentation& p, std::vector<Letter>& out,
                     char close) {
    while (true) {
      skip_blank(true);
      if (at_end() || peek() == close) return;
      std::vector<Letter> item;
      if (peek() == '(') {
        advance();
        parse_letters(p, item, ')');
        expect(')');
      } else {
        const Generator x = generator(p);
        Sign s = Sign::plus;
        if (!at_end() && peek() == '\'') {
          advance();
          s = Sign::minus;
        }
        item.push_back({x, s});
      }
      int e = 1;
      if (!at_end() && peek() == '^') {
        advance();
        e = integer();
      }
      const Word w = power(reduce(item), e);
      out.insert(out.end(), w.begin(), w.end());
    }
  }

  Generator generator(const Presentation& p) {
    skip_blank(false);
    const auto [line, col] = position();
    const std::string name = identifier("generator name");
    auto g = p.find_generator(name);
    if (!g) throw ParseError("unknown generator '" + name + "'", line, col);
    return *g;
  }

  std::string identifier(const char* what) {
    skip_blank(false);
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      fail(std::string("expected ") + what);
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      advance();
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_blank(false);
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) advance();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
    }
    int value = 0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      pos_ = start;
      fail("expected integer");
    }
    return value;
  }

  void expect(char c) {
    skip_blank(false);
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  // Newlines separate statements, so they are only skipped between
  // statements and inside brackets.
  void skip_blank(bool newlines) {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' ||
                 (newlines && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_statement_end() const {
    return at_end() || peek() == ';' || peek() == '\n';
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }
  std::pair<std::size_t, std::size_t> position() const {
    return {line_, pos_ - line_start_ + 1};
  }
  [[noreturn]] void fail(const std::string& message) const {
    const auto [line, col] = position();
    throw ParseError(message, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).run();
}

std::string print_presentation(const Presentation& p) {
  std::string out = "gens";
  for (const auto& name : p.generator_names) out += " " + name;
  out += "\ncomp";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    out += " " + p.generator_names[i] + ":" + std::to_string(p.component_of[i]);
  }
  out += "\n";
  if (p.has_orders()) {
    out += "N";
    for (int n : p.orders) out += " " + std::to_string(n);
    out += "\n";
  }
  for (const auto& r : p.relations) {
    out += "rel " + p.generator_names[r.base] + "^[" +
           format_word(r.word, p.generator_names) + "]=" +
           p.generator_names[r.target] + "\n";
  }
  return out;
}

Presentation augment_orders(Presentation p, std::vector<int> orders) {
  const int k = p.component_count();
  if (orders.size() != static_cast<std::size_t>(k)) {
    throw PresentationError("N has " + std::to_string(orders.size()) +
                            " entries but the link has " + std::to_string(k) +
                            " components");
  }
  p.orders = std::move(orders);
  p.validate();
  return p;
}

std::vector<UniversalRelation> secondary_relations(const Presentation& p) {
  std::vector<UniversalRelation> out;
  for (const auto& r : p.relations) {
    Word w = concat(invert(r.word), Word{pos(r.base)}, r.word,
                    Word{neg(r.target)});
    if (!w.empty()) out.push_back({std::move(w), UniversalRelation::Kind::secondary});
  }
  if (p.has_orders()) {
    for (Generator g = 0; g < p.generator_count(); ++g) {
      out.push_back({power(Word{pos(g)}, p.order_of(g)),
                     UniversalRelation::Kind::order});
    }
  }
  return out;
}

}  // namespace nquandle
