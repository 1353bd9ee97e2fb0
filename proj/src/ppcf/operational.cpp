#include "ppcf/operational.hpp"

namespace ppcf {

namespace {

// Rebuilds the evaluation context around a stepped subterm.
template <class Wrap>
StepOutcome lift(StepOutcome inner, Wrap&& wrap) {
  if (auto* d = std::get_if<Det>(&inner)) return Det{wrap(d->next)};
  if (auto* b = std::get_if<Branch>(&inner)) return Branch{b->kappa, wrap(b->heads), wrap(b->tails)};
  return inner;
}

}  // namespace

StepOutcome step(const Term& m) {
  return m.visit([&](const auto& n) -> StepOutcome {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Num> || std::is_same_v<T, Lam>) {
      return WeakNormal{};
    } else if constexpr (std::is_same_v<T, Var>) {
      throw StuckError("free variable '" + n.name + "' in evaluation position");
    } else if constexpr (std::is_same_v<T, Coin>) {
      return Branch{n.kappa, Term::num(0), Term::num(1)};
    } else if constexpr (std::is_same_v<T, Fix>) {
      return Det{Term::app(n.body, m)};
    } else if constexpr (std::is_same_v<T, Succ>) {
      if (auto k = n.arg.template get_if<Num>()) return Det{Term::num(k->value + 1)};
      if (n.arg.template get_if<Lam>()) throw StuckError("succ applied to an abstraction");
      return lift(step(n.arg), [](Term t) { return Term::succ(std::move(t)); });
    } else if constexpr (std::is_same_v<T, App>) {
      if (auto lam = n.fun.template get_if<Lam>()) return Det{subst(lam->body, lam->binder, n.arg)};
      if (n.fun.template get_if<Num>()) throw StuckError("numeral in function position");
      return lift(step(n.fun), [&](Term t) { return Term::app(std::move(t), n.arg); });
    } else {
      if (auto k = n.scrutinee.template get_if<Num>()) {
        if (k->value == 0) return Det{n.zero_branch};
        return Det{subst(n.succ_branch, n.binder, Term::num(k->value - 1))};
      }
      if (n.scrutinee.template get_if<Lam>()) throw StuckError("if on an abstraction");
      return lift(step(n.scrutinee),
                  [&](Term t) { return Term::if_(std::move(t), n.zero_branch, n.binder, n.succ_branch); });
    }
  });
}

bool CoinSource::heads(const Prob& kappa) {
  const Rational& k = kappa.value();
  if (k == 1) {
    engine_();
    return true;
  }
  // u / 2^64 < p / q  <=>  u * q < p * 2^64
  std::uint64_t u = engine_();
  mpz_class lhs = mpz_class(static_cast<unsigned long>(u)) * k.get_den();
  mpz_class rhs = k.get_num();
  rhs <<= 64;
  return lhs < rhs;
}

SampleResult run_sample(const Term& m, std::uint64_t seed, std::size_t max_steps) {
  CoinSource coins(seed);
  return run_sample(m, coins, max_steps);
}

SampleResult run_sample(const Term& m, CoinSource& coins, std::size_t max_steps) {
  Term current = m;
  for (std::size_t k = 0; k < max_steps; ++k) {
    StepOutcome o = step(current);
    if (std::holds_alternative<WeakNormal>(o)) return Value{current};
    if (auto* d = std::get_if<Det>(&o)) {
      current = d->next;
    } else {
      auto& b = std::get<Branch>(o);
      current = coins.heads(b.kappa) ? b.heads : b.tails;
    }
  }
  if (is_value(current)) return Value{current};
  return Timeout{current};
}

// ---------------------------------------------------------------------------

Rational TermDist::weight_of(const Term& t) const {
  std::string key = alpha_key(t);
  if (auto it = outcomes.find(key); it != outcomes.end()) return it->second.weight;
  if (auto it = pending.find(key); it != pending.end()) return it->second.weight;
  return Rational(0);
}

Rational TermDist::total() const {
  Rational s = residual;
  for (const auto& [k, wt] : outcomes) s += wt.weight;
  return s;
}

kegel::SubDist TermDist::numerals() const {
  kegel::SubDist::Weights w;
  for (const auto& [k, wt] : outcomes) {
    if (auto n = wt.term.get_if<Num>()) w[n->value] += wt.weight;
  }
  return kegel::SubDist::from_weights(std::move(w));
}

namespace detail {

namespace {

void add(std::map<std::string, WeightedTerm>& into, const Term& t, const Rational& w) {
  if (w == 0) return;
  std::string key = alpha_key(t);
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(std::move(key), WeightedTerm{t, w});
  } else {
    it->second.weight += w;
  }
}

}  // namespace

void advance(TermDist& dist, bool step_pending) {
  std::map<std::string, WeightedTerm> next;
  for (auto& [key, wt] : dist.pending) {
    if (is_value(wt.term)) {
      add(dist.outcomes, wt.term, wt.weight);
      continue;
    }
    if (!step_pending) {
      next.emplace(key, wt);
      continue;
    }
    StepOutcome o = step(wt.term);
    if (auto* d = std::get_if<Det>(&o)) {
      add(next, d->next, wt.weight);
    } else if (auto* b = std::get_if<Branch>(&o)) {
      add(next, b->heads, wt.weight * b->kappa.value());
      add(next, b->tails, wt.weight * b->kappa.complement().value());
    } else {
      throw std::logic_error("step reported a non-value as weak-normal: " + pretty(wt.term));
    }
  }
  dist.pending = std::move(next);
  dist.residual = 0;
  for (const auto& [k, wt] : dist.pending) dist.residual += wt.weight;
}

}  // namespace detail

TermDist distribution(const Term& m, std::size_t depth) {
  TermDist out;
  for_each_stage(m, depth, [&](std::size_t k, const TermDist& d) {
    if (k == depth) out = d;
  });
  return out;
}

Rational prob_numeral(const Term& m, std::uint64_t n, std::size_t depth) {
  return distribution(m, depth).weight_of(Term::num(n));
}

std::vector<Rational> prob_numeral_stages(const Term& m, std::uint64_t n, std::size_t depth) {
  std::vector<Rational> out;
  const std::string key = alpha_key(Term::num(n));
  for_each_stage(m, depth, [&](std::size_t, const TermDist& d) {
    auto it = d.outcomes.find(key);
    out.push_back(it == d.outcomes.end() ? Rational(0) : it->second.weight);
  });
  return out;
}

}  // namespace ppcf
