#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nquandle/presentation.hpp"

namespace nquandle {

using ArcId = int;

/// One crossing of an oriented diagram: the under-strand arriving on
/// `under_in` leaves on `under_out` after passing beneath `over`.
struct Crossing {
  ArcId over = 0;
  ArcId under_in = 0;
  ArcId under_out = 0;
  Sign sign = Sign::plus;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Diagram {
  std::vector<Crossing> crossings;
  /// Arc id -> 1-based link component.
  std::map<ArcId, int> arc_component;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Wiring inconsistency in a diagram; `arc()` names the offending arc.
class DiagramError : public PresentationError {
 public:
  DiagramError(const std::string& message, ArcId arc)
      : PresentationError(message), arc_(arc) {}
  ArcId arc() const { return arc_; }

 private:
  ArcId arc_;
};

/// Reads JSON lines: one crossing object per line
/// (`{"over":1,"under_in":0,"under_out":2,"sign":"+"}`) and one
/// `{"arc_components":{"0":1,...}}` line.
Diagram parse_diagram(std::string_view jsonl);

/// Inverse of parse_diagram.
std::string print_diagram(const Diagram& d);

/// Fundamental quandle presentation: one generator `x<arc>` per arc in
/// ascending arc order, one relation under_in^[over^±] = under_out per
/// crossing. N is left unset.
Presentation wirtinger(const Diagram& d);

/// Diagram of the closure of a braid on `strands` strands. The word lists
/// σ_i as i and σ_i⁻¹ as -i (1-based). Components are numbered by the
/// smallest strand position they pass through at the top of the braid.
Diagram closed_braid(int strands, const std::vector<int>& word);

}  // namespace nquandle
