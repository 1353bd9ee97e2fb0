#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fpc {

class FType;

struct TVar {
  std::string name;
};
struct Sum;
struct Prod;
struct Arrow;
struct Mu;

/// FPC type X | t + u | t * u | t -> u | mu X. t. Immutable and shared.
class FType {
 public:
  struct Node;

  static FType var(std::string name);
  static FType sum(FType left, FType right);
  static FType prod(FType left, FType right);
  static FType arrow(FType domain, FType codomain);
  static FType mu(std::string binder, FType body);

  /// mu X. X, the empty type written 0 in concrete syntax.
  static FType zero();
  /// 0 -> 0, whose closed inhabitant lambda x:0. x plays the role of unit.
  static FType unit();
  /// mu X. 1 + X with 1 encoded as 0 -> 0.
  static FType nat();

  template <class T>
  const T* get_if() const;
  template <class F>
  decltype(auto) visit(F&& f) const;

  const std::vector<std::string>& free_vars() const;
  bool has_free(const std::string& name) const;

 private:
  explicit FType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Sum {
  FType left;
  FType right;
};
struct Prod {
  FType left;
  FType right;
};
struct Arrow {
  FType domain;
  FType codomain;
};
struct Mu {
  std::string binder;
  FType body;
};

struct FType::Node {
  std::variant<TVar, Sum, Prod, Arrow, Mu> data;
  std::vector<std::string> free_vars;
};

template <class T>
const T* FType::get_if() const {
  return std::get_if<T>(&node_->data);
}

template <class F>
decltype(auto) FType::visit(F&& f) const {
  return std::visit(std::forward<F>(f), node_->data);
}

/// Ordered list of distinct type variables.
using TypeCtx = std::vector<std::string>;

/// Theta |- t: every free type variable of t is listed in theta.
bool wf_type(const TypeCtx& theta, const FType& t);

/// Capture-avoiding t[X := u].
FType type_subst(const FType& t, const std::string& x, const FType& u);

/// body[X := mu X. body] for a mu type; throws std::invalid_argument otherwise.
FType unfold(const FType& mu_type);

/// Equality up to renaming of mu binders.
bool type_equal(const FType& a, const FType& b);

/// Concrete syntax, rendering mu X. X as 0.
std::string to_string(const FType& t);

std::string fresh_name(const std::string& base, std::span<const std::string> taken);

}  // namespace fpc
