#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nquandle/enumerator.hpp"
#include "nquandle/presentation.hpp"

namespace nquandle {

class CatalogError : public std::runtime_error {
 public:
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

/// One row of the cardinality ledger.
struct CatalogEntry {
  std::string id;
  std::string link;
  /// Builtin family id, empty for rows without a presentation.
  std::string family;
  /// Parameters pinned by the row, e.g. k=3.
  std::map<std::string, long long> fixed;
  /// Parameters swept by verify-catalog, among "k" and "n".
  std::vector<std::string> swept;
  /// Candidate N tuples as text, e.g. "2,n".
  std::vector<std::string> shapes;
  std::string expected;
  std::string provenance;
  bool in_scope = false;
  std::string note;

  bool sweeps(std::string_view var) const;
};

class Catalog {
 public:
  /// Tab-separated text: '#' comments, one header line, then rows.
  static Catalog parse(std::string_view text);
  /// The ledger compiled into the library.
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(std::string_view id) const;

 private:
  std::vector<CatalogEntry> entries_;
};

std::string_view builtin_catalog_text();

/// Expected size of Q_N for the row `link_id`, with k taken from params
/// (or the row) and n read off N through the row's shapes. Throws
/// CatalogError for unknown or out-of-scope rows and for N matching no shape.
long long expected_cardinality(const Catalog& catalog, std::string_view link_id,
                               const std::vector<int>& orders,
                               const std::map<std::string, long long>& params = {});
long long expected_cardinality(std::string_view link_id,
                               const std::vector<int>& orders,
                               const std::map<std::string, long long>& params = {});

struct SweepRanges {
  int k_min = -6;
  int k_max = 6;
  int n_min = 2;
  int n_max = 5;
};

/// A single enumeration the catalog asks for.
struct CatalogCase {
  const CatalogEntry* entry = nullptr;
  std::optional<int> k;
  std::vector<int> orders;
  long long expected = 0;

  /// "Lk k=5 N=(2,4)"
  std::string label() const;
};

/// In-scope rows expanded over the ranges (k = 0 skipped), in ledger order.
std::vector<CatalogCase> expand(const Catalog& catalog, const SweepRanges& ranges);

enum class VerifyLevel { none, axioms, full };

struct CaseResult {
  std::optional<std::size_t> computed;
  std::optional<Exceeded> exceeded;
  std::size_t orbit_count = 0;
  int component_count = 0;
  /// Verification summary, "pass" or the first violation.
  std::string verification = "skipped";
  bool pass = false;
};

/// Builds the row's presentation, enumerates and checks cardinality, orbit
/// count against component count, and the requested verification.
CaseResult run_case(const CatalogCase& c, const EnumerationLimits& limits = {},
                    VerifyLevel level = VerifyLevel::axioms);

}  // namespace nquandle
