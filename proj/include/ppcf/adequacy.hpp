#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "ppcf/denotational.hpp"
#include "ppcf/operational.hpp"

namespace ppcf {

/// Default tolerance for comparisons involving fixpoints: 2^-40.
kegel::Rational default_tolerance();

/// One comparison between two sub-distributions.
struct SemanticCheck {
  bool pass = false;
  bool exact = false;  // the term has no fix, so equality was required
  SubDist lhs;         // denotation of the term itself
  SubDist rhs;         // the weighted sum over successors
  kegel::Rational defect{0};  // l1 distance between lhs and rhs
  std::string detail;
};

/// [[m]] against Sum_{m ->k m'} k [[m']] for one step. m must be closed of
/// type nat and not weak-normal. Fix-free terms must agree exactly; terms
/// with fix pass when the defect is at most `tol`.
SemanticCheck check_invariance(const Term& m, const DenoteConfig& cfg,
                               const kegel::Rational& tol = default_tolerance());

/// [[m]] against Sum_{m'} Prob^k_{m,m'} [[m']], including the still-reducible
/// part of the k-step row.
SemanticCheck check_kstep(const Term& m, std::size_t k, const DenoteConfig& cfg,
                          const kegel::Rational& tol = default_tolerance());

struct AdequacyReport {
  Term term;
  std::uint64_t numeral = 0;
  kegel::Rational op_lower{0};   // Prob^depth_{m, n}
  kegel::Rational den_lower{0};  // [[m]]_n at (D, C)
  kegel::Rational gap{0};        // |op_lower - den_lower|
  kegel::Rational tol{0};
  std::size_t op_depth = 0;
  DenoteConfig cfg;
  bool pass = false;
};

/// Both numbers are lower bounds of the same limit; the report states each
/// and the gap, never which side is larger.
AdequacyReport check_adequacy(const Term& m, std::uint64_t n, std::size_t op_depth, const DenoteConfig& cfg,
                              const kegel::Rational& tol);

nlohmann::json to_json(const AdequacyReport& r);

struct IfEquationCheck {
  bool pass = false;
  kegel::Rational lhs{0};    // Prob^depth_{if(M,P,z.Q), n}
  kegel::Rational rhs{0};    // Prob_{M,0} Prob_{P,n} + Sum_k Prob_{M,k+1} Prob_{Q[z:=k],n}
  kegel::Rational slack{0};  // still-reducible mass of the if-term at `depth`
};

/// Finite-depth reading of the conditional equation for reaching n. Passes
/// when lhs <= rhs <= lhs + slack: every path of the conditional splits into
/// a scrutinee path and a branch path (so lhs <= rhs), and rhs is bounded by
/// the limit, which exceeds lhs by at most the unresolved mass.
IfEquationCheck check_if_equation(const Term& scrutinee, const Term& zero_branch, const std::string& binder,
                                  const Term& succ_branch, std::uint64_t n, std::size_t depth);

/// Whether `fix` occurs anywhere in m.
bool contains_fix(const Term& m);

}  // namespace ppcf
