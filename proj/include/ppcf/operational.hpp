#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kegel/subdist.hpp"
#include "ppcf/term.hpp"

namespace ppcf {

using kegel::Rational;

/// No rule applies: the term is a numeral or an abstraction.
struct WeakNormal {};
/// The unique successor under a deterministic rule.
struct Det {
  Term next;
};
/// The active redex is coin(kappa): `heads` with weight kappa (the 0 side),
/// `tails` with weight 1 - kappa (the 1 side).
struct Branch {
  Prob kappa;
  Term heads;
  Term tails;
};
using StepOutcome = std::variant<WeakNormal, Det, Branch>;

/// A closed non-normal term on which no rule fires (only reachable from
/// ill-typed or open input).
class StuckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One weak leftmost-outermost step: beta, fix-unfolding, succ on numerals,
/// if-dispatch and coin at the root, otherwise descend into the function
/// position, the succ argument or the if scrutinee. Never reduces under a
/// binder or in an argument.
StepOutcome step(const Term& m);

// ---------------------------------------------------------------------------
// Sampling.

struct Value {
  Term term;
};
struct Timeout {
  Term term;
};
using SampleResult = std::variant<Value, Timeout>;

/// Reduction randomness: std::mt19937_64 seeded with the given 64-bit
/// seed. A coin(kappa) lands heads when the next 64-bit draw u satisfies
/// u / 2^64 < kappa, compared exactly.
class CoinSource {
 public:
  explicit CoinSource(std::uint64_t seed) : engine_(seed) {}
  bool heads(const Prob& kappa);

 private:
  std::mt19937_64 engine_;
};

SampleResult run_sample(const Term& m, std::uint64_t seed, std::size_t max_steps);
SampleResult run_sample(const Term& m, CoinSource& coins, std::size_t max_steps);

// ---------------------------------------------------------------------------
// Exact k-step distributions.

struct WeightedTerm {
  Term term;
  Rational weight;
};

/// Row M of Prob^k, split into weak-normal outcomes and still-reducible
/// terms. Entries are keyed by alpha_key, so alpha-equivalent terms merge.
/// Sum of all weights is exactly 1.
struct TermDist {
  std::map<std::string, WeightedTerm> outcomes;
  std::map<std::string, WeightedTerm> pending;
  Rational residual{0};  // total weight of `pending`

  Rational weight_of(const Term& t) const;
  Rational total() const;
  /// The outcomes read as a sub-distribution over numerals (nat programs).
  kegel::SubDist numerals() const;
};

/// Prob^depth row of m, exploring the reduction graph stage by stage and
/// merging alpha-equivalent terms. depth counts single steps; a coin branch
/// is one step.
TermDist distribution(const Term& m, std::size_t depth);

/// Calls `visit(k, dist)` for every stage k = 0..depth of the same expansion.
template <class Visit>
void for_each_stage(const Term& m, std::size_t depth, Visit&& visit);

/// Prob^depth_{m, n}: a lower bound on the probability of reaching n.
Rational prob_numeral(const Term& m, std::uint64_t n, std::size_t depth);

/// prob_numeral(m, n, k) for k = 0..depth from a single expansion.
std::vector<Rational> prob_numeral_stages(const Term& m, std::uint64_t n, std::size_t depth);

namespace detail {
/// Advances one stage: weak-normal pending entries move to outcomes.
/// When `step_pending` is false the remaining entries are only classified.
void advance(TermDist& dist, bool step_pending);
}  // namespace detail

template <class Visit>
void for_each_stage(const Term& m, std::size_t depth, Visit&& visit) {
  TermDist dist;
  dist.pending.emplace(alpha_key(m), WeightedTerm{m, Rational(1)});
  dist.residual = 1;
  for (std::size_t k = 0;; ++k) {
    detail::advance(dist, false);
    visit(k, static_cast<const TermDist&>(dist));
    if (k == depth) break;
    detail::advance(dist, true);
  }
}

}  // namespace ppcf
