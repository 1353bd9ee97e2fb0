#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "fpc/term.hpp"

namespace fpc {

/// Every one-step successor, leftmost-outermost first, without alpha-duplicates.
std::vector<FTerm> step_fpc(const FTerm& m);

struct Normal {
  FTerm term;
  std::size_t steps;
};
struct OutOfFuel {
  FTerm term;
};
using NormalizeResult = std::variant<Normal, OutOfFuel>;

/// Follows the first successor of step_fpc for at most `fuel` steps.
NormalizeResult normalize(const FTerm& m, std::size_t fuel);

}  // namespace fpc
