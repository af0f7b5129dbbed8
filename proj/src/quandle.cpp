#include "nquandle/quandle.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nquandle {

FiniteQuandle::FiniteQuandle(Generators generators, std::vector<Element> action,
                             std::vector<Element> inverse,
                             std::vector<Expression> witnesses)
    : gens_(std::move(generators)),
      action_(std::move(action)),
      inverse_(std::move(inverse)),
      witnesses_(std::move(witnesses)) {
  const std::size_t g = gens_.names.size();
  const std::size_t n = witnesses_.size();
  if (gens_.component_of.size() != g || gens_.element_of.size() != g) {
    throw std::invalid_argument("generator tables disagree in length");
  }
  if (action_.size() != n * g || inverse_.size() != n * g) {
    throw std::invalid_argument("action tables must have size * generators entries");
  }
  for (Element x : action_) {
    if (x >= n) throw std::invalid_argument("action entry out of range");
  }
  for (Element x : inverse_) {
    if (x >= n) throw std::invalid_argument("inverse entry out of range");
  }
  for (Element x : gens_.element_of) {
    if (x >= n) throw std::invalid_argument("generator element out of range");
  }
}

FiniteQuandle FiniteQuandle::from_action(Generators generators,
                                         std::vector<Element> action,
                                         std::vector<Expression> witnesses) {
  const std::size_t g = generators.names.size();
  const std::size_t n = witnesses.size();
  if (action.size() != n * g) {
    throw std::invalid_argument("action table must have size * generators entries");
  }
  constexpr Element unset = ~Element{0};
  std::vector<Element> inverse(action.size(), unset);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < g; ++j) {
      const Element y = action[x * g + j];
      if (y >= n || inverse[y * g + j] != unset) {
        throw std::invalid_argument("generator " + generators.names[j] +
                                    " does not act bijectively");
      }
      inverse[y * g + j] = static_cast<Element>(x);
    }
  }
  return FiniteQuandle(std::move(generators), std::move(action),
                       std::move(inverse), std::move(witnesses));
}

Element full_op(const FiniteQuandle& q, Element x, Element y, Sign s) {
  const Expression& name = q.witness(y);
  x = q.walk(x, invert(name.exponent));
  x = q.act(x, name.base, s);
  return q.walk(x, name.exponent);
}

OperationTable densify(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  OperationTable t;
  t.size = n;
  t.op.resize(n * n);
  t.inv.resize(n * n);
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      t.op[y * n + x] = full_op(q, x, y, Sign::plus);
      t.inv[y * n + x] = full_op(q, x, y, Sign::minus);
    }
  }
  return t;
}

std::string VerificationReport::describe() const {
  if (ok()) return "pass";
  std::string out = "fail: " + violation->rule;
  if (!violation->elements.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < violation->elements.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(violation->elements[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

VerificationReport failure(std::string rule, std::vector<Element> elements) {
  return {Violation{std::move(rule), std::move(elements)}};
}

}  // namespace

VerificationReport verify_axioms(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  const OperationTable t = densify(q);
  for (Element x = 0; x < n; ++x) {
    if (t.at(x, x) != x) return failure("A1 x▷x = x", {x});
  }
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      if (t.inv_at(t.at(x, y), y) != x || t.at(t.inv_at(x, y), y) != x) {
        return failure("A2 (x▷y)▷⁻¹y = x = (x▷⁻¹y)▷y", {x, y});
      }
    }
  }
  // Generator-level action must agree with the element-level operation.
  for (Generator g = 0; g < q.generator_count(); ++g) {
    const Element ge = q.generator_element(g);
    for (Element x = 0; x < n; ++x) {
      if (q.act(x, g) != t.at(x, ge) || q.act(x, g, Sign::minus) != t.inv_at(x, ge)) {
        return failure("generator action differs from x▷g", {x, ge});
      }
    }
  }
  for (Element z = 0; z < n; ++z) {
    const Element* sz = &t.op[z * n];
    for (Element y = 0; y < n; ++y) {
      const Element* syz = &t.op[sz[y] * n];
      const Element* sy = &t.op[y * n];
      for (Element x = 0; x < n; ++x) {
        if (sz[sy[x]] != syz[sz[x]]) {
          return failure("A3 (x▷y)▷z = (x▷z)▷(y▷z)", {x, y, z});
        }
      }
    }
  }
  return {};
}

std::vector<std::size_t> OrbitPartition::sizes() const {
  std::vector<std::size_t> out(orbit_count, 0);
  for (std::size_t o : orbit_of) ++out[o];
  return out;
}

OrbitPartition orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  constexpr std::size_t unset = ~std::size_t{0};
  OrbitPartition part;
  part.orbit_of.assign(n, unset);
  std::vector<Element> stack;
  for (Element start = 0; start < n; ++start) {
    if (part.orbit_of[start] != unset) continue;
    const std::size_t id = part.orbit_count++;
    part.orbit_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Element x = stack.back();
      stack.pop_back();
      for (Generator g = 0; g < q.generator_count(); ++g) {
        for (Sign s : {Sign::plus, Sign::minus}) {
          const Element y = q.act(x, g, s);
          if (part.orbit_of[y] == unset) {
            part.orbit_of[y] = id;
            stack.push_back(y);
          }
        }
      }
    }
  }
  return part;
}

VerificationReport verify_orders(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  const OrbitPartition part = orbits(q);
  std::vector<int> orbit_order(part.orbit_count, 0);
  for (Generator g = 0; g < q.generator_count(); ++g) {
    const std::size_t o = part.orbit_of[q.generator_element(g)];
    const int order = q.order_of_generator(g);
    if (orbit_order[o] != 0 && orbit_order[o] != order) {
      return failure("orbit contains generators of different orders",
                     {q.generator_element(g)});
    }
    orbit_order[o] = order;
  }
  for (std::size_t o = 0; o < part.orbit_count; ++o) {
    if (orbit_order[o] == 0) {
      const auto it = std::find(part.orbit_of.begin(), part.orbit_of.end(), o);
      return failure("orbit contains no generator",
                     {static_cast<Element>(it - part.orbit_of.begin())});
    }
  }
  const OperationTable t = densify(q);
  for (Element y = 0; y < n; ++y) {
    const int order = orbit_order[part.orbit_of[y]];
    for (Element x = 0; x < n; ++x) {
      Element z = x;
      for (int i = 0; i < order; ++i) z = t.at(z, y);
      if (z != x) return failure("x▷y^n = x", {x, y});
    }
  }
  return {};
}

VerificationReport verify_relations(const FiniteQuandle& q,
                                    const Presentation& p) {
  if (p.generator_count() != q.generator_count()) {
    return failure("presentation and quandle disagree on generators", {});
  }
  for (const auto& r : p.relations) {
    const Element from = q.generator_element(r.base);
    if (q.walk(from, r.word) != q.generator_element(r.target)) {
      return failure("primary relation " + p.generator_names[r.base] + "^[" +
                         format_word(r.word, p.generator_names) +
                         "]=" + p.generator_names[r.target],
                     {from});
    }
  }
  const auto universal = secondary_relations(p);
  for (Element x = 0; x < q.size(); ++x) {
    for (const auto& u : universal) {
      if (q.walk(x, u.word) != x) {
        return failure("universal relation [" +
                           format_word(u.word, p.generator_names) + "]",
                       {x});
      }
    }
    const Expression& w = q.witness(x);
    if (q.walk(q.generator_element(w.base), w.exponent) != x) {
      return failure("witness does not name its element", {x});
    }
  }
  return {};
}

std::vector<Element> point_symmetry(const FiniteQuandle& q, Element x) {
  std::vector<Element> perm(q.size());
  for (Element y = 0; y < q.size(); ++y) perm[y] = full_op(q, y, x);
  return perm;
}

namespace {

std::vector<std::size_t> cycle_type(std::span<const Element> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

struct Profile {
  std::size_t orbit_size;
  std::vector<std::size_t> cycles;
  friend bool operator==(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const FiniteQuandle& q, const OperationTable& t,
                              const OrbitPartition& part) {
  const auto sizes = part.sizes();
  std::vector<Profile> out;
  out.reserve(q.size());
  for (Element y = 0; y < q.size(); ++y) {
    out.push_back({sizes[part.orbit_of[y]],
                   cycle_type(std::span(t.op).subspan(y * t.size, t.size))});
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteQuandle& q1, const FiniteQuandle& q2)
      : q1_(q1), q2_(q2), t1_(densify(q1)), t2_(densify(q2)) {}

  bool run() {
    if (q1_.size() != q2_.size()) return false;
    const auto part1 = orbits(q1_);
    const auto part2 = orbits(q2_);
    auto s1 = part1.sizes();
    auto s2 = part2.sizes();
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;

    const auto prof1 = profiles(q1_, t1_, part1);
    const auto prof2 = profiles(q2_, t2_, part2);
    for (Generator g = 0; g < q1_.generator_count(); ++g) {
      const Element e = q1_.generator_element(g);
      if (std::find(sources_.begin(), sources_.end(), e) == sources_.end()) {
        sources_.push_back(e);
      }
    }
    candidates_.resize(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      std::vector<bool> orbit_used(part2.orbit_count, false);
      for (Element y = 0; y < q2_.size(); ++y) {
        if (!(prof2[y] == prof1[sources_[i]])) continue;
        // Inner automorphisms act transitively on orbits, so the first
        // image only needs one representative per orbit.
        if (i == 0) {
          if (orbit_used[part2.orbit_of[y]]) continue;
          orbit_used[part2.orbit_of[y]] = true;
        }
        candidates_[i].push_back(y);
      }
      if (candidates_[i].empty()) return false;
    }
    images_.assign(sources_.size(), 0);
    return search(0);
  }

 private:
  bool search(std::size_t depth) {
    if (depth == sources_.size()) return extend();
    for (Element y : candidates_[depth]) {
      images_[depth] = y;
      if (search(depth + 1)) return true;
    }
    return false;
  }

  bool extend() {
    constexpr Element unset = ~Element{0};
    const std::size_t n = q1_.size();
    std::vector<Element> phi(n, unset);
    std::vector<bool> hit(n, false);
    std::vector<Element> queue;
    auto assign = [&](Element x, Element y) {
      if (phi[x] != unset) return phi[x] == y;
      if (hit[y]) return false;
      phi[x] = y;
      hit[y] = true;
      queue.push_back(x);
      return true;
    };
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      if (!assign(sources_[i], images_[i])) return false;
    }
    std::vector<Element> gen_image(q1_.generator_count());
    for (Generator g = 0; g < q1_.generator_count(); ++g) {
      gen_image[g] = phi[q1_.generator_element(g)];
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (Generator g = 0; g < q1_.generator_count(); ++g) {
        if (!assign(q1_.act(x, g), t2_.at(phi[x], gen_image[g]))) return false;
        if (!assign(q1_.act(x, g, Sign::minus),
                    t2_.inv_at(phi[x], gen_image[g]))) {
          return false;
        }
      }
    }
    if (queue.size() != n) return false;
    for (Element y = 0; y < n; ++y) {
      for (Element x = 0; x < n; ++x) {
        if (phi[t1_.at(x, y)] != t2_.at(phi[x], phi[y])) return false;
      }
    }
    return true;
  }

  const FiniteQuandle& q1_;
  const FiniteQuandle& q2_;
  OperationTable t1_;
  OperationTable t2_;
  std::vector<Element> sources_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
};

const char* edge_style(Generator g) {
  static constexpr const char* styles[] = {"solid", "dashed", "dotted", "bold"};
  return styles[g % 4];
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool is_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  return IsoSearch(q1, q2).run();
}

std::string export_dot(const FiniteQuandle& q) {
  std::ostringstream out;
  const bool label_edges = q.generator_count() > 4;
  out << "digraph quandle {\n";
  out << "  // elements " << q.size() << ", generators";
  for (Generator g = 0; g < q.generator_count(); ++g) {
    out << " " << q.generator_names()[g] << "=" << edge_style(g);
  }
  out << "\n  node [shape=circle];\n";
  for (Element x = 0; x < q.size(); ++x) {
    out << "  n" << x << " [label=" << quoted(q.witness_text(x)) << "];\n";
  }
  for (Element x = 0; x < q.size(); ++x) {
    for (Generator g = 0; g < q.generator_count(); ++g) {
      const Element y = q.act(x, g);
      const bool involution = y == q.act(x, g, Sign::minus);
      if (involution && y < x) continue;
      out << "  n" << x << " -> n" << y << " [style=" << edge_style(g);
      if (involution) out << ", dir=none";
      if (label_edges) out << ", label=" << quoted(q.generator_names()[g]);
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const FiniteQuandle& q) {
  using json = nlohmann::ordered_json;
  const OrbitPartition part = orbits(q);
  json doc;
  doc["size"] = q.size();
  json gens = json::array();
  for (Generator g = 0; g < q.generator_count(); ++g) {
    gens.push_back({{"name", q.generator_names()[g]},
                    {"component", q.component_of_generator(g)},
                    {"order", q.order_of_generator(g)},
                    {"element", q.generator_element(g)}});
  }
  doc["generators"] = gens;
  json elements = json::array();
  for (Element x = 0; x < q.size(); ++x) {
    elements.push_back({{"id", x},
                        {"witness", q.witness_text(x)},
                        {"orbit", part.orbit_of[x]}});
  }
  doc["elements"] = elements;
  json action = json::object();
  json inverse = json::object();
  for (Generator g = 0; g < q.generator_count(); ++g) {
    std::vector<Element> fwd(q.size());
    std::vector<Element> bwd(q.size());
    for (Element x = 0; x < q.size(); ++x) {
      fwd[x] = q.act(x, g);
      bwd[x] = q.act(x, g, Sign::minus);
    }
    action[q.generator_names()[g]] = fwd;
    inverse[q.generator_names()[g]] = bwd;
  }
  doc["action"] = action;
  doc["inverse_action"] = inverse;
  return doc.dump(2) + "\n";
}

}  // namespace nquandle
