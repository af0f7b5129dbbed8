#include "nquandle/diagram.hpp"

#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>

namespace nquandle {

namespace {

using json = nlohmann::json;

Sign parse_sign(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "+" || s == "+1") return Sign::plus;
    if (s == "-" || s == "-1") return Sign::minus;
  } else if (v.is_number_integer()) {
    const int s = v.get<int>();
    if (s == 1) return Sign::plus;
    if (s == -1) return Sign::minus;
  }
  throw PresentationError("crossing sign must be \"+\", \"-\", 1 or -1");
}

ArcId parse_arc(const json& obj, const char* field, std::size_t line) {
  if (!obj.contains(field) || !obj[field].is_number_integer()) {
    throw PresentationError("line " + std::to_string(line) +
                            ": crossing needs integer field '" + field + "'");
  }
  return obj[field].get<ArcId>();
}

}  // namespace

Diagram parse_diagram(std::string_view jsonl) {
  Diagram d;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  bool have_components = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw PresentationError("line " + std::to_string(line_no) +
                              ": invalid JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw PresentationError("line " + std::to_string(line_no) +
                              ": expected a JSON object");
    }
    if (obj.contains("arc_components")) {
      const json& m = obj["arc_components"];
      if (!m.is_object()) {
        throw PresentationError("arc_components must be an object");
      }
      for (const auto& [key, value] : m.items()) {
        ArcId arc = 0;
        try {
          std::size_t used = 0;
          arc = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw PresentationError("arc id '" + key + "' is not an integer");
        }
        if (!value.is_number_integer()) {
          throw DiagramError("component of arc " + key + " must be an integer",
                             arc);
        }
        d.arc_component[arc] = value.get<int>();
      }
      have_components = true;
      continue;
    }
    Crossing c;
    c.over = parse_arc(obj, "over", line_no);
    c.under_in = parse_arc(obj, "under_in", line_no);
    c.under_out = parse_arc(obj, "under_out", line_no);
    if (!obj.contains("sign")) {
      throw PresentationError("line " + std::to_string(line_no) +
                              ": crossing needs field 'sign'");
    }
    c.sign = parse_sign(obj["sign"]);
    d.crossings.push_back(c);
  }
  if (!have_components) {
    throw PresentationError("diagram is missing the arc_components line");
  }
  return d;
}

std::string print_diagram(const Diagram& d) {
  std::string out;
  for (const auto& c : d.crossings) {
    json obj = {{"over", c.over},
                {"under_in", c.under_in},
                {"under_out", c.under_out},
                {"sign", c.sign == Sign::plus ? "+" : "-"}};
    out += obj.dump() + "\n";
  }
  json comps = json::object();
  for (const auto& [arc, comp] : d.arc_component) {
    comps[std::to_string(arc)] = comp;
  }
  out += json{{"arc_components", comps}}.dump() + "\n";
  return out;
}

Presentation wirtinger(const Diagram& d) {
  std::map<ArcId, int> ins;
  std::map<ArcId, int> outs;
  std::set<ArcId> referenced;
  auto component = [&](ArcId arc) {
    auto it = d.arc_component.find(arc);
    if (it == d.arc_component.end()) {
      throw DiagramError("arc " + std::to_string(arc) + " has no component",
                         arc);
    }
    return it->second;
  };
  for (const auto& c : d.crossings) {
    for (ArcId arc : {c.over, c.under_in, c.under_out}) {
      if (arc < 0) {
        throw DiagramError("arc " + std::to_string(arc) + " is negative", arc);
      }
      component(arc);
      referenced.insert(arc);
    }
    if (++outs[c.under_out] > 1) {
      throw DiagramError("arc " + std::to_string(c.under_out) +
                             " is used twice as under_out",
                         c.under_out);
    }
    if (++ins[c.under_in] > 1) {
      throw DiagramError("arc " + std::to_string(c.under_in) +
                             " is used twice as under_in",
                         c.under_in);
    }
    if (component(c.under_in) != component(c.under_out)) {
      throw DiagramError("arcs " + std::to_string(c.under_in) + " and " +
                             std::to_string(c.under_out) +
                             " meet at a crossing but lie on different "
                             "components",
                         c.under_out);
    }
  }

  std::map<int, int> arcs_per_component;
  for (const auto& [arc, comp] : d.arc_component) {
    if (arc < 0) {
      throw DiagramError("arc " + std::to_string(arc) + " is negative", arc);
    }
    ++arcs_per_component[comp];
  }
  for (const auto& [arc, comp] : d.arc_component) {
    const int n_in = ins.count(arc) ? ins[arc] : 0;
    const int n_out = outs.count(arc) ? outs[arc] : 0;
    if (n_in != n_out) {
      throw DiagramError(
          "arc " + std::to_string(arc) + (n_out == 0 ? " never starts at" : " never ends at") +
              " an under-crossing",
          arc);
    }
    if (n_in == 0 && arcs_per_component[comp] > 1) {
      throw DiagramError("arc " + std::to_string(arc) +
                             " has no under-crossings but shares component " +
                             std::to_string(comp) + " with other arcs",
                         arc);
    }
  }

  Presentation p;
  std::map<ArcId, Generator> index;
  for (const auto& [arc, comp] : d.arc_component) {
    index[arc] = static_cast<Generator>(p.generator_names.size());
    p.generator_names.push_back("x" + std::to_string(arc));
    p.component_of.push_back(comp);
  }
  for (const auto& c : d.crossings) {
    p.relations.push_back(
        {index[c.under_in], Word{Letter{index[c.over], c.sign}},
         index[c.under_out]});
  }
  try {
    p.validate();
  } catch (const DiagramError&) {
    throw;
  } catch (const PresentationError& e) {
    throw DiagramError(e.what(), d.arc_component.empty()
                                     ? 0
                                     : d.arc_component.begin()->first);
  }
  return p;
}

Diagram closed_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw PresentationError("braid needs at least one strand");
  const auto s = static_cast<std::size_t>(strands);

  // Component of each top position: cycles of the braid permutation.
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : word) {
    const int i = letter < 0 ? -letter : letter;
    if (letter == 0 || i >= strands) {
      throw PresentationError("braid letter " + std::to_string(letter) +
                              " out of range for " + std::to_string(strands) +
                              " strands");
    }
    // perm maps strand start position -> current position.
    for (auto& p : perm) {
      if (p == static_cast<std::size_t>(i - 1)) {
        p = static_cast<std::size_t>(i);
      } else if (p == static_cast<std::size_t>(i)) {
        p = static_cast<std::size_t>(i - 1);
      }
    }
  }
  std::vector<int> cycle_of(s, 0);
  int cycles = 0;
  for (std::size_t start = 0; start < s; ++start) {
    if (cycle_of[start] != 0) continue;
    ++cycles;
    for (std::size_t p = start; cycle_of[p] == 0; p = perm[p]) {
      cycle_of[p] = cycles;
    }
  }

  // Arcs 0..s-1 start at the top; each under-pass starts a new arc.
  std::vector<ArcId> current(s);
  std::iota(current.begin(), current.end(), 0);
  std::vector<int> arc_comp(cycle_of.begin(), cycle_of.end());
  std::vector<Crossing> raw;
  for (int letter : word) {
    const auto i = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    const std::size_t left = i - 1;
    const std::size_t right = i;
    const auto fresh = static_cast<ArcId>(arc_comp.size());
    if (letter > 0) {
      // Left strand passes over to the right.
      const ArcId over = current[left];
      raw.push_back({over, current[right], fresh, Sign::plus});
      arc_comp.push_back(arc_comp[static_cast<std::size_t>(current[right])]);
      current[left] = fresh;
      current[right] = over;
    } else {
      const ArcId over = current[right];
      raw.push_back({over, current[left], fresh, Sign::minus});
      arc_comp.push_back(arc_comp[static_cast<std::size_t>(current[left])]);
      current[right] = fresh;
      current[left] = over;
    }
  }

  // Closing the braid glues the bottom arc at each position to the top arc.
  std::vector<ArcId> parent(arc_comp.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ArcId a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (std::size_t p = 0; p < s; ++p) {
    const ArcId x = find(current[p]);
    const ArcId y = find(static_cast<ArcId>(p));
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }

  std::map<ArcId, ArcId> renumber;
  for (std::size_t a = 0; a < arc_comp.size(); ++a) {
    const ArcId root = find(static_cast<ArcId>(a));
    renumber.try_emplace(root, static_cast<ArcId>(renumber.size()));
  }
  Diagram d;
  for (const auto& c : raw) {
    d.crossings.push_back({renumber[find(c.over)], renumber[find(c.under_in)],
                           renumber[find(c.under_out)], c.sign});
  }
  for (const auto& [root, id] : renumber) {
    d.arc_component[id] = arc_comp[static_cast<std::size_t>(root)];
  }
  return d;
}

}  // namespace nquandle
