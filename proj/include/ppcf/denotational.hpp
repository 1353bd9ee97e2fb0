#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "kegel/subdist.hpp"
#include "ppcf/term.hpp"
#include "ppcf/typecheck.hpp"

namespace ppcf {

using kegel::SubDist;

class TypeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the interpretation of a type: a sub-distribution at nat, an
/// opaque Scott-continuous map at arrow types.
class SemValue {
 public:
  using Fn = std::function<SemValue(const SemValue&)>;

  static SemValue nat(SubDist d);
  /// `tag` must be an arrow type.
  static SemValue fun(PType tag, Fn apply);

  bool is_nat() const { return !fn_; }
  const PType& type() const { return type_; }
  /// Throws TypeMismatch on function values.
  const SubDist& dist() const;
  /// Throws TypeMismatch unless this is a function expecting v's type.
  SemValue apply(const SemValue& v) const;

 private:
  SemValue(PType type, SubDist d, std::shared_ptr<const Fn> fn)
      : type_(std::move(type)), dist_(std::move(d)), fn_(std::move(fn)) {}

  PType type_;
  SubDist dist_;
  std::shared_ptr<const Fn> fn_;
};

/// Persistent variable environment; bind() shares the existing chain.
class SemEnv {
 public:
  SemEnv() = default;
  SemEnv bind(std::string name, SemValue value) const;
  const SemValue* lookup(const std::string& name) const;
  /// The typing context induced by the values' type tags.
  TypingCtx context() const;

 private:
  struct Frame;
  std::shared_ptr<const Frame> head_;
};

/// Finite approximation policy.
struct DenoteConfig {
  /// Kleene iterations per fixpoint: fix(f) is read as f^fix_iters(bottom).
  std::size_t fix_iters = 60;
  /// Largest numeral kept in any sub-distribution; heavier tails are dropped.
  std::uint64_t support_cap = 64;
  /// At type nat, stop iterating early once f^{i+1}(bottom) = f^i(bottom).
  bool stop_at_convergence = false;
};

SemValue bottom(const PType& t);

SemValue apply_sem(const SemValue& f, const SemValue& v);

/// f^iters(bottom(t)) for f : t => t.
SemValue fix_iterate(const SemValue& f, std::size_t iters);

/// Sum_i weights[i] * values[i] at type t (pointwise at arrow types).
SemValue combine(const PType& t, std::vector<kegel::Rational> weights, std::vector<SemValue> values);

/// Interpretation of m in env. Every sub-distribution produced is truncated
/// at cfg.support_cap. Throws TypeMismatch when m is ill-typed under the
/// context induced by env.
SemValue denote(const SemEnv& env, const Term& m, const DenoteConfig& cfg);

struct NatDenotation {
  SubDist dist;
  /// Total mass removed across all truncation events; zero exactly when no
  /// truncation happened, in which case `dist` does not depend on the cap.
  kegel::Rational discarded_mass{0};
};

/// Closed program of type nat; throws TypeMismatch otherwise.
NatDenotation denote_nat(const Term& m, const DenoteConfig& cfg);

}  // namespace ppcf
