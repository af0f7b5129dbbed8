#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nquandle/presentation.hpp"

namespace nquandle {

struct FamilyParams {
  std::optional<int> k;
};

/// Presentations of the builtin links, with component labels but no N.
///
///   T24 T24C T26 T28 T210 T33   fixed two- and three-generator fixtures
///   Lk                          T_{2,k} ∪ C, k != 0 (parity picks the form)
///   Mk                          twist knot T_k ∪ C
///   T2k                         Wirtinger presentation of the closed 2-braid σ1^k
///   T2kC                        Wirtinger presentation of σ1^k σ2 σ1 σ1 σ2 (T_{2,k} plus axis)
///   T34 T35                     Wirtinger presentations of the closed 3-braids (σ1σ2)^q
///   Wirtinger:trefoil, Wirtinger:hopf
///   Braid:<strands>:<i,j,...>   closure of an arbitrary braid word
///
/// Throws PresentationError for unknown ids or invalid parameters.
Presentation builtin_family(std::string_view family, const FamilyParams& params = {});

/// True when the family reads params.k.
bool family_takes_k(std::string_view family);

/// Ids accepted by builtin_family (excluding the open-ended Braid: form).
std::vector<std::string> builtin_family_ids();

}  // namespace nquandle
