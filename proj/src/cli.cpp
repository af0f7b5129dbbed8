#include "nquandle/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "nquandle/catalog.hpp"
#include "nquandle/diagram.hpp"
#include "nquandle/enumerator.hpp"
#include "nquandle/families.hpp"
#include "nquandle/presentation.hpp"
#include "nquandle/quandle.hpp"

namespace nquandle {

namespace {

// Bad input detected after option parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("malformed N entry '" + item + "'");
    }
    if (out.back() < 1) throw InputError("N entries must be positive");
  }
  if (out.empty()) throw InputError("N is empty");
  return out;
}

std::string format_orders(const std::vector<int>& orders) {
  std::string s = "(";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    s += (i ? "," : "") + std::to_string(orders[i]);
  }
  return s + ")";
}

VerifyLevel parse_level(const std::string& s) {
  if (s == "none") return VerifyLevel::none;
  if (s == "axioms") return VerifyLevel::axioms;
  return VerifyLevel::full;
}

std::string summary(const FiniteQuandle& q) {
  const auto part = orbits(q);
  std::ostringstream out;
  out << q.size() << (q.size() == 1 ? " element" : " elements") << "; orbits "
      << part.orbit_count;
  return out.str();
}

std::string describe_exceeded(const Exceeded& e) {
  return std::string("exceeded ") +
         (e.cap == CapKind::vertices ? "vertex" : "step") + " cap at " +
         std::to_string(e.vertex_count) + " vertices";
}

// Runs fn(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

struct EnumerateOptions {
  std::string family;
  std::optional<int> k;
  std::string file;
  std::string diagram;
  std::string orders;
  std::size_t max_vertices = EnumerationLimits{}.max_vertices;
  std::uint64_t max_steps = EnumerationLimits{}.max_steps;
  std::string dot;
  std::string json;
  std::string verify = "full";
  bool timing = false;
};

Presentation load_presentation(const EnumerateOptions& o) {
  const int sources = !o.family.empty() + !o.file.empty() + !o.diagram.empty();
  if (sources != 1) {
    throw InputError("give exactly one of --family, --file, --diagram");
  }
  Presentation p;
  if (!o.family.empty()) {
    if (family_takes_k(o.family) && !o.k) {
      throw InputError("family " + o.family + " needs --k");
    }
    p = builtin_family(o.family, {o.k});
  } else if (!o.file.empty()) {
    p = parse_presentation(read_file(o.file));
  } else {
    p = wirtinger(parse_diagram(read_file(o.diagram)));
  }
  if (!o.orders.empty()) {
    p = augment_orders(std::move(p), parse_orders(o.orders));
  } else if (!p.has_orders()) {
    throw InputError("no N given; pass --N");
  }
  return p;
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const Presentation p = load_presentation(o);
  const auto t0 = std::chrono::steady_clock::now();
  const auto outcome = enumerate(p, {o.max_vertices, o.max_steps});
  const auto t1 = std::chrono::steady_clock::now();
  if (!outcome.finite()) {
    out << describe_exceeded(outcome.exceeded()) << "\n";
    return exit_exceeded;
  }
  const FiniteQuandle& q = outcome.quandle();
  out << summary(q) << "\n";
  out << "orbit sizes:";
  for (auto s : orbits(q).sizes()) out << " " << s;
  out << "\n";
  int code = exit_ok;
  const VerifyLevel level = parse_level(o.verify);
  if (level != VerifyLevel::none) {
    std::vector<std::pair<const char*, VerificationReport>> reports;
    reports.emplace_back("axioms", verify_axioms(q));
    reports.emplace_back("orders", verify_orders(q));
    if (level == VerifyLevel::full) {
      reports.emplace_back("relations", verify_relations(q, p));
    }
    for (const auto& [name, rep] : reports) {
      out << name << ": " << rep.describe() << "\n";
      if (!rep.ok()) code = exit_verification_failed;
    }
  }
  if (!o.dot.empty()) write_file(o.dot, export_dot(q));
  if (!o.json.empty()) write_file(o.json, export_json(q));
  if (o.timing) {
    out << "time: "
        << std::chrono::duration<double, std::milli>(t1 - t0).count()
        << " ms\n";
  }
  return code;
}

struct CatalogOptions {
  std::string catalog;
  SweepRanges ranges;
  unsigned jobs = 1;
  std::string verify = "axioms";
  std::size_t max_vertices = EnumerationLimits{}.max_vertices;
};

int cmd_verify_catalog(const CatalogOptions& o, std::ostream& out) {
  const Catalog catalog =
      o.catalog.empty() ? Catalog::builtin() : Catalog::parse(read_file(o.catalog));
  const auto cases = expand(catalog, o.ranges);
  std::vector<CaseResult> results(cases.size());
  EnumerationLimits limits;
  limits.max_vertices = o.max_vertices;
  const VerifyLevel level = parse_level(o.verify);
  parallel_for(cases.size(), o.jobs,
               [&](std::size_t i) { results[i] = run_case(cases[i], limits, level); });

  std::size_t passed = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& r = results[i];
    passed += r.pass;
    out << (r.pass ? "PASS " : "FAIL ") << cases[i].label() << " expected "
        << cases[i].expected << " computed ";
    if (r.computed) {
      out << *r.computed << " orbits " << r.orbit_count << "/"
          << r.component_count << " verify " << r.verification;
    } else {
      out << describe_exceeded(*r.exceeded);
    }
    out << "\n";
  }
  for (const auto& e : catalog.entries()) {
    if (e.in_scope) continue;
    ++skipped;
    out << "SKIP " << e.id << " " << e.link << " expected " << e.expected
        << " (out of scope)\n";
  }
  out << passed << " passed, " << cases.size() - passed << " failed, "
      << skipped << " skipped\n";
  return passed == cases.size() ? exit_ok : exit_catalog_mismatch;
}

struct SweepOptions {
  std::string family;
  std::vector<int> k_range;
  std::vector<int> n_range;
  std::string orders;
  unsigned jobs = 1;
  std::size_t max_vertices = EnumerationLimits{}.max_vertices;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  struct Job {
    std::optional<int> k;
    Presentation p;
  };
  std::vector<std::optional<int>> ks{std::nullopt};
  if (!o.k_range.empty()) {
    ks.clear();
    for (int k = o.k_range[0]; k <= o.k_range[1]; ++k) {
      if (k != 0) ks.emplace_back(k);
    }
  }
  if (family_takes_k(o.family) && (ks.empty() || !ks.front())) {
    throw InputError("family " + o.family + " needs a nonempty --k-range");
  }
  const bool has_n = o.orders.find('n') != std::string::npos;
  if (has_n && o.n_range.empty()) throw InputError("N uses n; pass --n-range");
  std::vector<std::string> shapes;
  std::stringstream alternatives(o.orders);
  for (std::string s; std::getline(alternatives, s, '|');) shapes.push_back(s);

  std::vector<Job> jobs;
  for (const auto& k : ks) {
    Presentation base = builtin_family(o.family, {k});
    // Several shapes may be given; the one matching the component count wins.
    const auto fits = std::find_if(shapes.begin(), shapes.end(), [&](const auto& s) {
      return std::count(s.begin(), s.end(), ',') + 1 == base.component_count();
    });
    if (fits == shapes.end()) {
      throw InputError("no N shape fits " + std::to_string(base.component_count()) +
                       " components");
    }
    const int lo = has_n ? o.n_range[0] : 0;
    const int hi = has_n ? o.n_range[1] : 0;
    for (int n = lo; n <= hi; ++n) {
      std::string shape = *fits;
      for (std::size_t at; (at = shape.find('n')) != std::string::npos;) {
        shape.replace(at, 1, std::to_string(n));
      }
      jobs.push_back({k, augment_orders(base, parse_orders(shape))});
    }
  }

  std::vector<std::string> lines(jobs.size());
  std::atomic<bool> any_exceeded{false};
  EnumerationLimits limits;
  limits.max_vertices = o.max_vertices;
  parallel_for(jobs.size(), o.jobs, [&](std::size_t i) {
    std::ostringstream line;
    line << o.family;
    if (jobs[i].k) line << " k=" << *jobs[i].k;
    line << " N=" << format_orders(jobs[i].p.orders) << ": ";
    const auto outcome = enumerate(jobs[i].p, limits);
    if (outcome.finite()) {
      line << summary(outcome.quandle());
    } else {
      line << describe_exceeded(outcome.exceeded());
      any_exceeded = true;
    }
    lines[i] = line.str();
  });
  for (const auto& l : lines) out << l << "\n";
  return any_exceeded ? exit_exceeded : exit_ok;
}

int cmd_convert(const std::string& diagram, const std::string& output,
                std::ostream& out) {
  const std::string text = print_presentation(wirtinger(parse_diagram(read_file(diagram))));
  if (output.empty() || output == "-") {
    out << text;
  } else {
    write_file(output, text);
  }
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Enumerate fundamental N-quandles of links by tracing and collapsing."};
  app.name("nquandle");
  app.require_subcommand(1);

  EnumerateOptions eo;
  auto* en = app.add_subcommand("enumerate", "Enumerate one presentation");
  en->add_option("--family", eo.family, "Builtin family id");
  en->add_option("--k", eo.k, "Family parameter k");
  en->add_option("--file", eo.file, "Presentation file");
  en->add_option("--diagram", eo.diagram, "Diagram JSON-lines file");
  en->add_option("--N", eo.orders, "Comma-separated n per component");
  en->add_option("--max-vertices", eo.max_vertices)->check(CLI::PositiveNumber);
  en->add_option("--max-steps", eo.max_steps)->check(CLI::PositiveNumber);
  en->add_option("--dot", eo.dot, "Write the Cayley graph as DOT");
  en->add_option("--json", eo.json, "Write the Cayley graph as JSON");
  en->add_option("--verify", eo.verify)
      ->check(CLI::IsMember({"none", "axioms", "full"}))
      ->capture_default_str();
  en->add_flag("--timing", eo.timing, "Print elapsed time");

  CatalogOptions co;
  auto* vc = app.add_subcommand("verify-catalog", "Check every in-scope catalog row");
  vc->add_option("--catalog", co.catalog, "Ledger file (default: builtin)");
  vc->add_option("--k-min", co.ranges.k_min)->capture_default_str();
  vc->add_option("--k-max", co.ranges.k_max)->capture_default_str();
  vc->add_option("--n-min", co.ranges.n_min)->capture_default_str();
  vc->add_option("--n-max", co.ranges.n_max)->capture_default_str();
  vc->add_option("--jobs", co.jobs)->check(CLI::PositiveNumber);
  vc->add_option("--verify", co.verify)
      ->check(CLI::IsMember({"none", "axioms", "full"}))
      ->capture_default_str();
  vc->add_option("--max-vertices", co.max_vertices)->check(CLI::PositiveNumber);

  SweepOptions so;
  auto* sw = app.add_subcommand("sweep", "Enumerate a family over parameter ranges");
  sw->add_option("--family", so.family)->required();
  sw->add_option("--k-range", so.k_range, "Inclusive k range")->expected(2);
  sw->add_option("--n-range", so.n_range, "Inclusive n range")->expected(2);
  sw->add_option("--N", so.orders,
                 "N tuple, alternatives separated by '|'; 'n' comes from --n-range")
      ->required();
  sw->add_option("--jobs", so.jobs)->check(CLI::PositiveNumber);
  sw->add_option("--max-vertices", so.max_vertices)->check(CLI::PositiveNumber);

  std::string diagram;
  std::string output;
  auto* cv = app.add_subcommand("convert", "Diagram to presentation text");
  cv->add_option("--diagram", diagram)->required();
  cv->add_option("-o,--output", output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*en) return cmd_enumerate(eo, out);
    if (*vc) return cmd_verify_catalog(co, out);
    if (*sw) return cmd_sweep(so, out);
    return cmd_convert(diagram, output, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return exit_input_error;
}

}  // namespace nquandle
