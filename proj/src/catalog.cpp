#include "nquandle/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nquandle/families.hpp"
#include "nquandle/formula.hpp"

namespace nquandle {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

// Binds n when `shape` fits `orders`; nullopt when it does not fit.
std::optional<std::map<std::string, long long>> match_shape(
    std::string_view shape, const std::vector<int>& orders) {
  const auto tokens = split(shape, ',');
  if (tokens.size() != orders.size()) return std::nullopt;
  std::map<std::string, long long> bound;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (const auto v = to_int(tokens[i])) {
      if (*v != orders[i]) return std::nullopt;
      continue;
    }
    const std::string name(tokens[i]);
    const auto [it, fresh] = bound.emplace(name, orders[i]);
    if (!fresh && it->second != orders[i]) return std::nullopt;
  }
  return bound;
}

std::vector<int> instantiate(std::string_view shape,
                             const std::map<std::string, long long>& vars) {
  std::vector<int> out;
  for (auto token : split(shape, ',')) {
    if (const auto v = to_int(token)) {
      out.push_back(static_cast<int>(*v));
    } else {
      out.push_back(static_cast<int>(vars.at(std::string(token))));
    }
  }
  return out;
}

const std::string* shape_for(const CatalogEntry& e, std::size_t length) {
  for (const auto& s : e.shapes) {
    if (split(s, ',').size() == length) return &s;
  }
  return nullptr;
}

}  // namespace

bool CatalogEntry::sweeps(std::string_view var) const {
  return std::find(swept.begin(), swept.end(), var) != swept.end();
}

Catalog Catalog::parse(std::string_view text) {
  Catalog catalog;
  bool header = true;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split(line, '\t');
    const auto where = "catalog line " + std::to_string(line_no) + ": ";
    if (header) {
      if (cols.empty() || cols[0] != "id") {
        throw CatalogError(where + "expected the header row");
      }
      header = false;
      continue;
    }
    if (cols.size() < 8 || cols.size() > 9) {
      throw CatalogError(where + "expected 8 or 9 tab-separated fields");
    }
    CatalogEntry e;
    e.id = cols[0];
    e.link = cols[1];
    if (cols[2] != "-") e.family = cols[2];
    if (cols[3] != "-") {
      for (auto p : split(cols[3], ';')) {
        const auto eq = p.find('=');
        if (eq == std::string_view::npos) {
          e.swept.emplace_back(p);
          continue;
        }
        const auto v = to_int(p.substr(eq + 1));
        if (!v) throw CatalogError(where + "bad parameter '" + std::string(p) + "'");
        e.fixed[std::string(p.substr(0, eq))] = *v;
      }
    }
    for (auto s : split(cols[4], '|')) e.shapes.emplace_back(s);
    e.expected = cols[5];
    e.provenance = cols[6];
    if (cols[7] != "in" && cols[7] != "out") {
      throw CatalogError(where + "scope must be 'in' or 'out'");
    }
    e.in_scope = cols[7] == "in";
    if (cols.size() == 9) e.note = cols[8];
    if (e.in_scope && e.family.empty()) {
      throw CatalogError(where + "in-scope row needs a family");
    }
    try {
      formula_variables(e.expected);
    } catch (const FormulaError& err) {
      throw CatalogError(where + err.what());
    }
    if (catalog.find(e.id)) throw CatalogError(where + "duplicate id " + e.id);
    catalog.entries_.push_back(std::move(e));
  }
  return catalog;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = parse(builtin_catalog_text());
  return catalog;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

long long expected_cardinality(const Catalog& catalog, std::string_view link_id,
                               const std::vector<int>& orders,
                               const std::map<std::string, long long>& params) {
  // Rows are addressed by id, or by link name when the N picks the row.
  std::vector<const CatalogEntry*> rows;
  if (const CatalogEntry* e = catalog.find(link_id)) {
    rows.push_back(e);
  } else {
    for (const auto& e : catalog.entries()) {
      if (e.link == link_id) rows.push_back(&e);
    }
  }
  if (rows.empty()) {
    throw CatalogError("no catalog entry '" + std::string(link_id) + "'");
  }
  for (const CatalogEntry* e : rows) {
    for (const auto& shape : e->shapes) {
      auto bound = match_shape(shape, orders);
      if (!bound) continue;
      if (!e->in_scope) {
        throw CatalogError("catalog entry '" + e->id + "' is out of scope");
      }
      std::map<std::string, long long> vars = e->fixed;
      for (const auto& [name, value] : params) vars[name] = value;
      for (const auto& [name, value] : *bound) vars[name] = value;
      try {
        return evaluate_formula(e->expected, vars);
      } catch (const FormulaError& err) {
        throw CatalogError(err.what());
      }
    }
  }
  throw CatalogError("N does not fit catalog entry '" + std::string(link_id) + "'");
}

long long expected_cardinality(std::string_view link_id,
                               const std::vector<int>& orders,
                               const std::map<std::string, long long>& params) {
  return expected_cardinality(Catalog::builtin(), link_id, orders, params);
}

std::string CatalogCase::label() const {
  std::ostringstream out;
  out << entry->id;
  if (k && entry->sweeps("k")) out << " k=" << *k;
  out << " N=(";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out << (i ? "," : "") << orders[i];
  }
  out << ")";
  return out.str();
}

std::vector<CatalogCase> expand(const Catalog& catalog,
                                const SweepRanges& ranges) {
  std::vector<CatalogCase> cases;
  for (const auto& e : catalog.entries()) {
    if (!e.in_scope) continue;
    std::vector<std::optional<int>> ks;
    if (e.sweeps("k")) {
      for (int k = ranges.k_min; k <= ranges.k_max; ++k) {
        if (k != 0) ks.emplace_back(k);
      }
    } else if (const auto it = e.fixed.find("k"); it != e.fixed.end()) {
      ks.emplace_back(static_cast<int>(it->second));
    } else {
      ks.emplace_back(std::nullopt);
    }
    for (const auto& k : ks) {
      const auto p = builtin_family(e.family, {k});
      const std::string* shape =
          shape_for(e, static_cast<std::size_t>(p.component_count()));
      if (!shape) {
        throw CatalogError("catalog entry '" + e.id +
                           "' has no N shape for its component count");
      }
      std::vector<std::optional<int>> ns{std::nullopt};
      if (e.sweeps("n")) {
        ns.clear();
        for (int n = ranges.n_min; n <= ranges.n_max; ++n) ns.emplace_back(n);
      }
      for (const auto& n : ns) {
        std::map<std::string, long long> vars = e.fixed;
        if (k) vars["k"] = *k;
        if (n) vars["n"] = *n;
        CatalogCase c;
        c.entry = &e;
        c.k = k;
        c.orders = instantiate(*shape, vars);
        c.expected = evaluate_formula(e.expected, vars);
        cases.push_back(std::move(c));
      }
    }
  }
  return cases;
}

CaseResult run_case(const CatalogCase& c, const EnumerationLimits& limits,
                    VerifyLevel level) {
  CaseResult r;
  const Presentation p =
      augment_orders(builtin_family(c.entry->family, {c.k}), c.orders);
  r.component_count = p.component_count();
  const auto outcome = enumerate(p, limits);
  if (!outcome.finite()) {
    r.exceeded = outcome.exceeded();
    return r;
  }
  const FiniteQuandle& q = outcome.quandle();
  r.computed = q.size();
  r.orbit_count = orbits(q).orbit_count;
  bool verified = true;
  if (level != VerifyLevel::none) {
    std::vector<VerificationReport> reports{verify_axioms(q), verify_orders(q)};
    if (level == VerifyLevel::full) reports.push_back(verify_relations(q, p));
    r.verification = "pass";
    for (const auto& rep : reports) {
      if (!rep.ok()) {
        r.verification = rep.describe();
        verified = false;
        break;
      }
    }
  }
  r.pass = static_cast<long long>(*r.computed) == c.expected &&
           r.orbit_count == static_cast<std::size_t>(r.component_count) &&
           verified;
  return r;
}

}  // namespace nquandle
