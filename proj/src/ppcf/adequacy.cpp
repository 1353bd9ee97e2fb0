#include "ppcf/adequacy.hpp"

namespace ppcf {

using kegel::Rational;

Rational default_tolerance() { return kegel::pow2(-40); }

bool contains_fix(const Term& m) {
  return m.visit([](const auto& n) -> bool {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Fix>) {
      return true;
    } else if constexpr (std::is_same_v<T, Succ>) {
      return contains_fix(n.arg);
    } else if constexpr (std::is_same_v<T, App>) {
      return contains_fix(n.fun) || contains_fix(n.arg);
    } else if constexpr (std::is_same_v<T, Lam>) {
      return contains_fix(n.body);
    } else if constexpr (std::is_same_v<T, If>) {
      return contains_fix(n.scrutinee) || contains_fix(n.zero_branch) || contains_fix(n.succ_branch);
    } else {
      return false;
    }
  });
}

namespace {

SubDist den(const Term& m, const DenoteConfig& cfg) { return denote_nat(m, cfg).dist; }

SemanticCheck compare(const Term& m, SubDist lhs, SubDist rhs, const Rational& tol) {
  SemanticCheck out;
  out.exact = !contains_fix(m);
  out.defect = kegel::l1_distance(lhs, rhs);
  out.pass = out.exact ? lhs == rhs : out.defect <= tol;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  if (!out.pass) {
    out.detail = "defect " + kegel::to_string(out.defect) + " for " + pretty(m) + ": lhs mass " +
                 kegel::to_string(out.lhs.mass()) + ", rhs mass " + kegel::to_string(out.rhs.mass());
  }
  return out;
}

}  // namespace

SemanticCheck check_invariance(const Term& m, const DenoteConfig& cfg, const Rational& tol) {
  StepOutcome o = step(m);
  std::vector<Rational> weights;
  std::vector<SubDist> parts;
  if (auto* d = std::get_if<Det>(&o)) {
    weights.push_back(Rational(1));
    parts.push_back(den(d->next, cfg));
  } else if (auto* b = std::get_if<Branch>(&o)) {
    weights.push_back(b->kappa.value());
    parts.push_back(den(b->heads, cfg));
    weights.push_back(b->kappa.complement().value());
    parts.push_back(den(b->tails, cfg));
  } else {
    SemanticCheck out;
    out.detail = "term is weak-normal: " + pretty(m);
    return out;
  }
  return compare(m, den(m, cfg), kegel::convex_combine(weights, parts), tol);
}

SemanticCheck check_kstep(const Term& m, std::size_t k, const DenoteConfig& cfg, const Rational& tol) {
  TermDist row = distribution(m, k);
  std::vector<Rational> weights;
  std::vector<SubDist> parts;
  for (const auto* side : {&row.outcomes, &row.pending}) {
    for (const auto& [key, wt] : *side) {
      weights.push_back(wt.weight);
      parts.push_back(den(wt.term, cfg));
    }
  }
  return compare(m, den(m, cfg), kegel::convex_combine(weights, parts), tol);
}

AdequacyReport check_adequacy(const Term& m, std::uint64_t n, std::size_t op_depth, const DenoteConfig& cfg,
                              const Rational& tol) {
  AdequacyReport r{.term = m, .numeral = n, .tol = tol, .op_depth = op_depth, .cfg = cfg};
  r.op_lower = prob_numeral(m, n, op_depth);
  r.den_lower = den(m, cfg).at(n);
  r.gap = abs(r.op_lower - r.den_lower);
  r.pass = r.gap <= tol;
  return r;
}

nlohmann::json to_json(const AdequacyReport& r) {
  using kegel::to_string;
  return {{"term", pretty(r.term)},
          {"numeral", r.numeral},
          {"opLower", to_string(r.op_lower)},
          {"denLower", to_string(r.den_lower)},
          {"gap", to_string(r.gap)},
          {"tol", to_string(r.tol)},
          {"pass", r.pass},
          {"depths", {{"opDepth", r.op_depth}, {"fixIters", r.cfg.fix_iters}, {"supportCap", r.cfg.support_cap}}}};
}

IfEquationCheck check_if_equation(const Term& scrutinee, const Term& zero_branch, const std::string& binder,
                                  const Term& succ_branch, std::uint64_t n, std::size_t depth) {
  IfEquationCheck out;
  TermDist whole = distribution(Term::if_(scrutinee, zero_branch, binder, succ_branch), depth);
  out.lhs = whole.weight_of(Term::num(n));
  out.slack = whole.residual;

  TermDist head = distribution(scrutinee, depth);
  for (const auto& [key, wt] : head.outcomes) {
    auto k = wt.term.get_if<Num>();
    if (!k) continue;
    if (k->value == 0) {
      out.rhs += wt.weight * prob_numeral(zero_branch, n, depth);
    } else {
      Term branch = subst(succ_branch, binder, Term::num(k->value - 1));
      out.rhs += wt.weight * prob_numeral(branch, n, depth);
    }
  }
  out.pass = out.lhs <= out.rhs && out.rhs <= out.lhs + out.slack;
  return out;
}

}  // namespace ppcf
