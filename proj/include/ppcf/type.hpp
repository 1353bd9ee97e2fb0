#pragma once

#include <memory>
#include <string>

namespace ppcf {

/// pPCF type: nat or an arrow t => u. Immutable, cheap to copy.
class PType {
 public:
  static PType nat();
  static PType arrow(PType domain, PType codomain);

  bool is_nat() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }
  /// Only valid on arrows.
  const PType& domain() const;
  const PType& codomain() const;

  friend bool operator==(const PType& a, const PType& b);

 private:
  struct Arrow;
  explicit PType(std::shared_ptr<const Arrow> node) : node_(std::move(node)) {}
  std::shared_ptr<const Arrow> node_;  // null for nat
};

/// "nat", "nat -> nat", "(nat -> nat) -> nat".
std::string to_string(const PType& t);

}  // namespace ppcf
