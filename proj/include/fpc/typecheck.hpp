#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpc/term.hpp"

namespace fpc {

/// Variable typing; later entries shadow earlier ones.
using TermCtx = std::vector<std::pair<std::string, FType>>;

class TypeError : public std::runtime_error {
 public:
  TypeError(std::string rule, std::string path, const std::string& detail);

  const std::string& rule() const { return rule_; }
  /// Slash-separated route from the root to the offending subterm.
  const std::string& path() const { return path_; }

 private:
  std::string rule_;
  std::string path_;
};

/// Syntax-directed check of theta | gamma |- m : t. Annotation types must be
/// well formed under theta.
FType typecheck_fpc(const TypeCtx& theta, const TermCtx& gamma, const FTerm& m);

}  // namespace fpc
