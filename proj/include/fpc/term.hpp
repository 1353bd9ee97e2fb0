#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fpc/type.hpp"

namespace fpc {

class FTerm;

struct Var {
  std::string name;
};
struct Inl;
struct Inr;
struct Case;
struct Pair;
struct Lam;
struct App;
struct Fst;
struct Snd;
struct Intro;
struct Elim;

/// FPC term. Immutable and shared, with cached free variables.
class FTerm {
 public:
  struct Node;

  static FTerm var(std::string name);
  /// inl_{t,u}(m) : t + u when m : t.
  static FTerm inl(FType t, FType u, FTerm body);
  /// inr_{t,u}(m) : u + t when m : t.
  static FTerm inr(FType t, FType u, FTerm body);
  static FTerm case_(FTerm scrutinee, std::string left_binder, FTerm left, std::string right_binder,
                     FTerm right);
  static FTerm pair(FTerm first, FTerm second);
  static FTerm lam(std::string binder, FType annotation, FTerm body);
  static FTerm app(FTerm fun, FTerm arg);
  static FTerm fst(FTerm arg);
  static FTerm snd(FTerm arg);
  static FTerm intro(FType mu_type, FTerm body);
  static FTerm elim(FTerm arg);

  template <class T>
  const T* get_if() const;
  template <class F>
  decltype(auto) visit(F&& f) const;

  const std::vector<std::string>& free_vars() const;
  bool closed() const { return free_vars().empty(); }
  bool has_free(const std::string& name) const;

 private:
  explicit FTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Inl {
  FType t;
  FType u;
  FTerm body;
};
struct Inr {
  FType t;
  FType u;
  FTerm body;
};
struct Case {
  FTerm scrutinee;
  std::string left_binder;
  FTerm left;
  std::string right_binder;
  FTerm right;
};
struct Pair {
  FTerm first;
  FTerm second;
};
struct Lam {
  std::string binder;
  FType annotation;
  FTerm body;
};
struct App {
  FTerm fun;
  FTerm arg;
};
struct Fst {
  FTerm arg;
};
struct Snd {
  FTerm arg;
};
struct Intro {
  FType mu_type;
  FTerm body;
};
struct Elim {
  FTerm arg;
};

struct FTerm::Node {
  std::variant<Var, Inl, Inr, Case, Pair, Lam, App, Fst, Snd, Intro, Elim> data;
  std::vector<std::string> free_vars;
};

template <class T>
const T* FTerm::get_if() const {
  return std::get_if<T>(&node_->data);
}

template <class F>
decltype(auto) FTerm::visit(F&& f) const {
  return std::visit(std::forward<F>(f), node_->data);
}

/// Alpha-equivalence of terms; type annotations compare up to type_equal.
bool alpha_equal(const FTerm& a, const FTerm& b);

/// Capture-avoiding m[x := n].
FTerm subst(const FTerm& m, const std::string& x, const FTerm& n);

/// Value grammar: pairs and injections of values, intro(_), and abstractions.
bool is_value(const FTerm& m);

std::size_t term_size(const FTerm& m);

/// Concrete syntax accepted by parse_fpc(); applications print as (M)N.
std::string pretty(const FTerm& m);

/// Closed inhabitant of FType::unit(): lambda x:0. x.
FTerm unit_value();
/// intro_nat(inl(unit)).
FTerm nat_zero();
/// intro_nat(inr(m)).
FTerm nat_succ(FTerm m);

}  // namespace fpc
