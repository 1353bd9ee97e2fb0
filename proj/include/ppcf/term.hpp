#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kegel/rational.hpp"
#include "ppcf/type.hpp"

namespace ppcf {

using kegel::Prob;

class Term;

struct Num {
  std::uint64_t value;
};
struct Var {
  std::string name;
};
struct Succ;
struct If;
struct Lam;
struct App;
struct Coin {
  Prob kappa;
};
struct Fix;

/// Immutable pPCF term with shared subterms. Each node caches its sorted
/// free-variable list, so closedness tests are O(1).
class Term {
 public:
  struct Node;

  static Term num(std::uint64_t n);
  static Term var(std::string name);
  static Term succ(Term arg);
  static Term if_(Term scrutinee, Term zero_branch, std::string binder, Term succ_branch);
  static Term lam(std::string binder, PType annotation, Term body);
  static Term app(Term fun, Term arg);
  static Term coin(Prob kappa);
  static Term fix(Term body);

  template <class T>
  const T* get_if() const;
  template <class F>
  decltype(auto) visit(F&& f) const;

  const std::vector<std::string>& free_vars() const;
  bool closed() const { return free_vars().empty(); }
  bool has_free(const std::string& name) const;
  /// Identity of the shared node; useful as a cache key while the term lives.
  const void* id() const { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Succ {
  Term arg;
};
struct If {
  Term scrutinee;
  Term zero_branch;
  std::string binder;
  Term succ_branch;
};
struct Lam {
  std::string binder;
  PType annotation;
  Term body;
};
struct App {
  Term fun;
  Term arg;
};
struct Fix {
  Term body;
};

struct Term::Node {
  std::variant<Num, Var, Succ, If, Lam, App, Coin, Fix> data;
  std::vector<std::string> free_vars;
};

template <class T>
const T* Term::get_if() const {
  return std::get_if<T>(&node_->data);
}

template <class F>
decltype(auto) Term::visit(F&& f) const {
  return std::visit(std::forward<F>(f), node_->data);
}

/// Alpha-equivalence (lambda annotations must agree).
bool alpha_equal(const Term& a, const Term& b);

/// Canonical nameless rendering: alpha_key(a) == alpha_key(b) iff
/// alpha_equal(a, b).
std::string alpha_key(const Term& m);

/// `base` itself if it avoids `taken`, else base_1, base_2, ...
std::string fresh_name(const std::string& base, std::span<const std::string> taken);

/// Capture-avoiding m[x := n].
Term subst(const Term& m, const std::string& x, const Term& n);

/// lambda x:nat. if(x, 0, z. z). The combinator form; see README.
Term desugar_pred();
/// m (+kappa) n, i.e. if(coin(kappa), m, z. n) with z not free in n.
Term desugar_choice(const Term& m, const Prob& kappa, const Term& n);
/// let x = m in n, i.e. if(m, n[x:=0], z. n[x:=succ(z)]).
Term desugar_let(const std::string& x, const Term& m, const Term& n);

/// Concrete syntax accepted by parse(); applications print as (M)N.
std::string pretty(const Term& m);

/// Weak-normal shape: a numeral or an abstraction.
bool is_value(const Term& m);

/// Number of AST nodes.
std::size_t term_size(const Term& m);

}  // namespace ppcf
