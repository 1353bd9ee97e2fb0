#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ppcf/term.hpp"

namespace ppcf {

/// Ordered variable typing; later entries shadow earlier ones.
class TypingCtx {
 public:
  TypingCtx() = default;
  TypingCtx(std::initializer_list<std::pair<std::string, PType>> entries) : entries_(entries) {}

  TypingCtx extend(std::string name, PType type) const;
  const PType* lookup(const std::string& name) const;
  const std::vector<std::pair<std::string, PType>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, PType>> entries_;
};

class TypeError : public std::runtime_error {
 public:
  TypeError(std::string rule, std::string path, const std::string& detail);

  /// Name of the typing rule that could not be applied.
  const std::string& rule() const { return rule_; }
  /// Slash-separated route from the root to the offending subterm.
  const std::string& path() const { return path_; }

 private:
  std::string rule_;
  std::string path_;
};

/// Typing derivation mirrored as a tree: the type of a node plus the
/// derivations of its children in source order (for If: scrutinee, zero
/// branch, successor branch).
struct TypedNode {
  PType type;
  std::vector<TypedNode> children;
};

/// The unique type of m under ctx; throws TypeError.
PType typecheck(const TypingCtx& ctx, const Term& m);

/// Same as typecheck but keeps the whole derivation.
TypedNode annotate(const TypingCtx& ctx, const Term& m);

}  // namespace ppcf
