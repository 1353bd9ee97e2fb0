#include "ppcf/denotational.hpp"

#include <map>
#include <mutex>

namespace ppcf {

using kegel::Rational;

SemValue SemValue::nat(SubDist d) { return SemValue(PType::nat(), std::move(d), nullptr); }

SemValue SemValue::fun(PType tag, Fn apply) {
  if (!tag.is_arrow()) throw TypeMismatch("function value tagged with non-arrow type " + to_string(tag));
  return SemValue(std::move(tag), SubDist(), std::make_shared<const Fn>(std::move(apply)));
}

const SubDist& SemValue::dist() const {
  if (fn_) throw TypeMismatch("expected a value of type nat, got " + to_string(type_));
  return dist_;
}

SemValue SemValue::apply(const SemValue& v) const {
  if (!fn_) throw TypeMismatch("applying a value of type nat");
  if (!(v.type() == type_.domain()))
    throw TypeMismatch("argument of type " + to_string(v.type()) + " passed to " + to_string(type_));
  return (*fn_)(v);
}

struct SemEnv::Frame {
  std::string name;
  SemValue value;
  std::shared_ptr<const Frame> next;
};

SemEnv SemEnv::bind(std::string name, SemValue value) const {
  SemEnv out;
  out.head_ = std::make_shared<const Frame>(Frame{std::move(name), std::move(value), head_});
  return out;
}

const SemValue* SemEnv::lookup(const std::string& name) const {
  for (const Frame* f = head_.get(); f; f = f->next.get()) {
    if (f->name == name) return &f->value;
  }
  return nullptr;
}

TypingCtx SemEnv::context() const {
  std::vector<const Frame*> frames;
  for (const Frame* f = head_.get(); f; f = f->next.get()) frames.push_back(f);
  TypingCtx ctx;
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) ctx = ctx.extend((*it)->name, (*it)->value.type());
  return ctx;
}

SemValue bottom(const PType& t) {
  if (t.is_nat()) return SemValue::nat(SubDist());
  PType cod = t.codomain();
  return SemValue::fun(t, [cod](const SemValue&) { return bottom(cod); });
}

SemValue apply_sem(const SemValue& f, const SemValue& v) { return f.apply(v); }

namespace {

SemValue iterate(const SemValue& f, std::size_t iters, bool stop_at_convergence) {
  if (f.is_nat() || !(f.type().domain() == f.type().codomain()))
    throw TypeMismatch("fixpoint of a value of type " + to_string(f.type()));
  SemValue x = bottom(f.type().domain());
  for (std::size_t i = 0; i < iters; ++i) {
    SemValue next = f.apply(x);
    if (stop_at_convergence && next.is_nat() && next.dist() == x.dist()) break;
    x = std::move(next);
  }
  return x;
}

}  // namespace

SemValue fix_iterate(const SemValue& f, std::size_t iters) { return iterate(f, iters, false); }

SemValue combine(const PType& t, std::vector<Rational> weights, std::vector<SemValue> values) {
  if (t.is_nat()) {
    std::vector<SubDist> dists;
    dists.reserve(values.size());
    for (const auto& v : values) dists.push_back(v.dist());
    return SemValue::nat(kegel::convex_combine(weights, dists));
  }
  kegel::validate_weights(weights);
  PType cod = t.codomain();
  return SemValue::fun(t, [cod, weights = std::move(weights), values = std::move(values)](const SemValue& x) {
    std::vector<SemValue> images;
    images.reserve(values.size());
    for (const auto& v : values) images.push_back(v.apply(x));
    return combine(cod, weights, std::move(images));
  });
}

namespace {

// Shared by every closure a single denote call produces.
struct EvalContext {
  DenoteConfig cfg;
  std::mutex mu;
  Rational discarded{0};

  SubDist cap(const SubDist& d) {
    SubDist t = kegel::truncate(d, cfg.support_cap);
    if (t.mass() != d.mass()) {
      std::lock_guard<std::mutex> lock(mu);
      discarded += d.mass() - t.mass();
    }
    return t;
  }
};

// Results of a nat-domain closure keyed by argument.
struct Memo {
  std::mutex mu;
  std::map<SubDist, SemValue> table;
};

struct Evaluator {
  std::shared_ptr<EvalContext> ctx;
  std::shared_ptr<const TypedNode> root;  // keeps `ty` pointers alive

  SemValue eval(const SemEnv& env, const Term& m, const TypedNode& ty) const {
    return m.visit([&](const auto& n) -> SemValue {
      using T = std::decay_t<decltype(n)>;
      if constexpr (std::is_same_v<T, Num>) {
        return SemValue::nat(ctx->cap(kegel::dirac(n.value)));
      } else if constexpr (std::is_same_v<T, Var>) {
        const SemValue* v = env.lookup(n.name);
        if (!v) throw TypeMismatch("no value bound to '" + n.name + "'");
        return *v;
      } else if constexpr (std::is_same_v<T, Coin>) {
        std::vector<Rational> w{n.kappa.value(), n.kappa.complement().value()};
        std::vector<SubDist> d{kegel::dirac(0), kegel::dirac(1)};
        return SemValue::nat(ctx->cap(kegel::convex_combine(w, d)));
      } else if constexpr (std::is_same_v<T, Succ>) {
        SemValue v = eval(env, n.arg, ty.children[0]);
        return SemValue::nat(ctx->cap(kegel::shift(v.dist())));
      } else if constexpr (std::is_same_v<T, App>) {
        SemValue f = eval(env, n.fun, ty.children[0]);
        SemValue a = eval(env, n.arg, ty.children[1]);
        return f.apply(a);
      } else if constexpr (std::is_same_v<T, Fix>) {
        SemValue f = eval(env, n.body, ty.children[0]);
        return iterate(f, ctx->cfg.fix_iters, ctx->cfg.stop_at_convergence);
      } else if constexpr (std::is_same_v<T, Lam>) {
        return closure(env, n, ty);
      } else {
        SubDist v = eval(env, n.scrutinee, ty.children[0]).dist();
        std::vector<Rational> weights;
        std::vector<SemValue> values;
        for (const auto& [k, w] : v.weights()) {
          weights.push_back(w);
          if (k == 0) {
            values.push_back(eval(env, n.zero_branch, ty.children[1]));
          } else {
            SemEnv inner = env.bind(n.binder, SemValue::nat(kegel::dirac(k - 1)));
            values.push_back(eval(inner, n.succ_branch, ty.children[2]));
          }
        }
        return combine(ty.type, std::move(weights), std::move(values));
      }
    });
  }

  SemValue closure(const SemEnv& env, const Lam& lam, const TypedNode& ty) const {
    Evaluator self = *this;
    const TypedNode* body_ty = &ty.children[0];
    if (!lam.annotation.is_nat()) {
      return SemValue::fun(ty.type, [self, env, lam, body_ty](const SemValue& x) {
        return self.eval(env.bind(lam.binder, x), lam.body, *body_ty);
      });
    }
    auto memo = std::make_shared<Memo>();
    return SemValue::fun(ty.type, [self, env, lam, body_ty, memo](const SemValue& x) {
      {
        std::lock_guard<std::mutex> lock(memo->mu);
        if (auto it = memo->table.find(x.dist()); it != memo->table.end()) return it->second;
      }
      SemValue result = self.eval(env.bind(lam.binder, x), lam.body, *body_ty);
      std::lock_guard<std::mutex> lock(memo->mu);
      memo->table.emplace(x.dist(), result);
      return result;
    });
  }
};

std::pair<SemValue, std::shared_ptr<EvalContext>> run(const SemEnv& env, const Term& m, const DenoteConfig& cfg) {
  std::shared_ptr<const TypedNode> typed;
  try {
    typed = std::make_shared<const TypedNode>(annotate(env.context(), m));
  } catch (const TypeError& e) {
    throw TypeMismatch(std::string("environment does not type the term: ") + e.what());
  }
  auto ctx = std::make_shared<EvalContext>();
  ctx->cfg = cfg;
  Evaluator ev{ctx, typed};
  return {ev.eval(env, m, *typed), ctx};
}

}  // namespace

SemValue denote(const SemEnv& env, const Term& m, const DenoteConfig& cfg) { return run(env, m, cfg).first; }

NatDenotation denote_nat(const Term& m, const DenoteConfig& cfg) {
  auto [value, ctx] = run(SemEnv(), m, cfg);
  if (!value.is_nat()) throw TypeMismatch("program has type " + to_string(value.type()) + ", not nat");
  std::lock_guard<std::mutex> lock(ctx->mu);
  return {value.dist(), ctx->discarded};
}

}  // namespace ppcf
