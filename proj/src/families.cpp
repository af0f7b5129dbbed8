#include "nquandle/families.hpp"

#include <charconv>

#include "nquandle/diagram.hpp"

namespace nquandle {

namespace {

constexpr Generator a = 0;
constexpr Generator b = 1;
constexpr Generator c = 2;

Presentation abc(std::vector<int> components) {
  Presentation p;
  const char* names[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < components.size(); ++i) {
    p.generator_names.emplace_back(names[i]);
  }
  p.component_of = std::move(components);
  return p;
}

// (xy)^e as a free-group word.
Word alternating(Generator x, Generator y, int e) {
  return power(Word{pos(x), pos(y)}, e);
}

// T_{2,2m}: a^{(ba)^{m-1} b} = a, b^{(ab)^{m-1} a} = b.
Presentation even_torus(int m) {
  Presentation p = abc({1, 2});
  p.relations.push_back({a, concat(alternating(b, a, m - 1), Word{pos(b)}), a});
  p.relations.push_back({b, concat(alternating(a, b, m - 1), Word{pos(a)}), b});
  return p;
}

Presentation lk(int k) {
  if (k == 0) throw PresentationError("family Lk requires k != 0");
  if (k % 2 != 0) {
    const int t = (k - 1) / 2;
    Presentation p = abc({1, 1, 2});
    p.relations.push_back({c, Word{pos(a), pos(b)}, c});
    p.relations.push_back(
        {a, concat(alternating(b, a, t), Word{pos(b), pos(c)}), b});
    p.relations.push_back({b, concat(alternating(a, b, t), Word{pos(c)}), a});
    return p;
  }
  const int t = k / 2;
  Presentation p = abc({1, 2, 3});
  p.relations.push_back({c, Word{pos(a), pos(b)}, c});
  p.relations.push_back(
      {a, concat(alternating(b, a, t - 1), Word{pos(b), pos(c)}), a});
  p.relations.push_back({b, concat(alternating(a, b, t), Word{pos(c)}), b});
  return p;
}

// The two-sided relations a^u = a^v are stored as a^{u v̄} = a.
Presentation mk(int k) {
  Presentation p = abc({1, 1, 2});
  p.relations.push_back({c, Word{pos(b), pos(a)}, c});
  const Word left{pos(c), pos(a), neg(c), pos(a)};
  const Word right{neg(c), pos(a), pos(c)};
  p.relations.push_back({a, concat(left, invert(right)), a});
  p.relations.push_back(
      {a, concat(right, invert(alternating(a, b, k - 1))), b});
  return p;
}

Presentation braid(int strands, const std::vector<int>& word) {
  return wirtinger(closed_braid(strands, word));
}

Presentation torus_2k(int k) {
  if (k == 0) throw PresentationError("family T2k requires k != 0");
  return braid(2, std::vector<int>(static_cast<std::size_t>(k < 0 ? -k : k),
                                   k < 0 ? -1 : 1));
}

Presentation torus_2k_axis(int k) {
  if (k == 0) throw PresentationError("family T2kC requires k != 0");
  std::vector<int> word(static_cast<std::size_t>(k < 0 ? -k : k),
                        k < 0 ? -1 : 1);
  word.insert(word.end(), {2, 1, 1, 2});
  return braid(3, word);
}

std::vector<int> repeat(std::initializer_list<int> w, int times) {
  std::vector<int> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), w);
  return out;
}

int parse_int(std::string_view s, std::string_view family) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw PresentationError("malformed braid family '" + std::string(family) +
                            "'");
  }
  return v;
}

// Braid:<strands>:<i,j,...>
Presentation braid_family(std::string_view family) {
  const std::string_view rest = family.substr(6);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    throw PresentationError("expected Braid:<strands>:<letters>");
  }
  const int strands = parse_int(rest.substr(0, colon), family);
  std::vector<int> word;
  std::string_view letters = rest.substr(colon + 1);
  while (!letters.empty()) {
    const auto comma = letters.find(',');
    word.push_back(parse_int(letters.substr(0, comma), family));
    if (comma == std::string_view::npos) break;
    letters.remove_prefix(comma + 1);
  }
  return braid(strands, word);
}

int require_k(std::string_view family, const FamilyParams& params) {
  if (!params.k) {
    throw PresentationError("family " + std::string(family) +
                            " requires parameter k");
  }
  return *params.k;
}

}  // namespace

bool family_takes_k(std::string_view family) {
  return family == "Lk" || family == "Mk" || family == "T2k" ||
         family == "T2kC";
}

std::vector<std::string> builtin_family_ids() {
  return {"T24",  "T24C", "T26",  "T28",  "T210", "T33",
          "Lk",   "Mk",   "T2k",  "T2kC", "T34",  "T35",
          "Wirtinger:trefoil",    "Wirtinger:hopf"};
}

Presentation builtin_family(std::string_view family,
                            const FamilyParams& params) {
  Presentation p;
  if (family == "T24") {
    p = even_torus(2);
  } else if (family == "T26") {
    p = even_torus(3);
  } else if (family == "T28") {
    p = even_torus(4);
  } else if (family == "T210") {
    p = even_torus(5);
  } else if (family == "T24C") {
    p = abc({1, 2, 3});
    p.relations.push_back({a, Word{pos(b), pos(a), pos(b), pos(c)}, a});
    p.relations.push_back(
        {b, Word{pos(a), pos(b), pos(a), pos(b), pos(c)}, b});
    p.relations.push_back({c, Word{pos(a), pos(b)}, c});
  } else if (family == "T33") {
    p = abc({1, 2, 3});
    p.relations.push_back({a, Word{pos(c), pos(b)}, a});
    p.relations.push_back({b, Word{pos(a), pos(c)}, b});
    p.relations.push_back({c, Word{pos(b), pos(a)}, c});
  } else if (family == "Lk") {
    p = lk(require_k(family, params));
  } else if (family == "Mk") {
    p = mk(require_k(family, params));
  } else if (family == "T2k") {
    p = torus_2k(require_k(family, params));
  } else if (family == "T2kC") {
    p = torus_2k_axis(require_k(family, params));
  } else if (family == "Wirtinger:trefoil") {
    p = torus_2k(3);
  } else if (family == "Wirtinger:hopf") {
    p = torus_2k(2);
  } else if (family == "T34") {
    p = braid(3, repeat({1, 2}, 4));
  } else if (family == "T35") {
    p = braid(3, repeat({1, 2}, 5));
  } else if (family.starts_with("Braid:")) {
    p = braid_family(family);
  } else {
    throw PresentationError("unknown family '" + std::string(family) + "'");
  }
  p.validate();
  return p;
}

}  // namespace nquandle
