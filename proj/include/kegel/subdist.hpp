#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kegel/rational.hpp"

namespace kegel {

/// Finitely supported sub-probability distribution over the naturals.
///
/// Zero weights are never stored, so two SubDists are equal exactly when
/// their weight maps are equal. Total mass never exceeds 1.
class SubDist {
 public:
  using Weights = std::map<std::uint64_t, Rational>;

  /// The empty sub-distribution (least element).
  SubDist() = default;

  /// Validates nonnegative entries and mass <= 1; zero entries are dropped.
  static SubDist from_weights(Weights weights);

  const Weights& weights() const { return weights_; }
  const Rational& mass() const { return mass_; }
  Rational at(std::uint64_t n) const;
  bool empty() const { return weights_.empty(); }
  std::size_t support_size() const { return weights_.size(); }

  friend bool operator==(const SubDist& a, const SubDist& b) { return a.weights_ == b.weights_; }
  friend bool operator<(const SubDist& a, const SubDist& b) { return a.weights_ < b.weights_; }

 private:
  struct Trusted {};
  SubDist(Trusted, Weights weights);

  friend SubDist dirac(std::uint64_t);
  friend SubDist convex_combine(std::span<const Rational>, std::span<const SubDist>);
  friend SubDist scale(const Prob&, const SubDist&);
  friend SubDist shift(const SubDist&);
  friend SubDist truncate(const SubDist&, std::uint64_t);

  Weights weights_;
  Rational mass_{0};
};

SubDist dirac(std::uint64_t n);
inline const Rational& mass(const SubDist& d) { return d.mass(); }

/// Sum_i weights[i] * dists[i]. Throws WeightError unless all weights are
/// nonnegative with sum <= 1, DimensionError on a length mismatch.
SubDist convex_combine(std::span<const Rational> weights, std::span<const SubDist> dists);

/// lam * d, i.e. d combined with the empty distribution.
SubDist scale(const Prob& lam, const SubDist& d);

/// Moves the weight of n to n+1 (the successor on distributions).
SubDist shift(const SubDist& d);

/// Drops every index strictly greater than cap.
SubDist truncate(const SubDist& d, std::uint64_t cap);

bool pointwise_leq(const SubDist& lhs, const SubDist& rhs);

/// Sum_n |lhs(n) - rhs(n)|.
Rational l1_distance(const SubDist& lhs, const SubDist& rhs);

/// Checks a weight vector for the subconvex side condition.
void validate_weights(std::span<const Rational> weights);

nlohmann::json to_json(const SubDist& d);
SubDist subdist_from_json(const nlohmann::json& j);

/// An element of the finite simplex SDM(n): n nonnegative entries, sum <= 1.
class FiniteSubDist {
 public:
  FiniteSubDist() = default;
  explicit FiniteSubDist(std::vector<Rational> entries);
  /// The point mass at index i in arity n.
  static FiniteSubDist dirac(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }
  Rational mass() const;

  friend bool operator==(const FiniteSubDist&, const FiniteSubDist&) = default;

 private:
  std::vector<Rational> entries_;
};

// ---------------------------------------------------------------------------
// Skew sum of two convex structures.

/// Element of A + B: a pure A element (lambda = 0), a pure B element
/// (lambda = 1), or a formal combination (a, b, lambda) with 0 < lambda < 1.
template <class A, class B>
struct SkewSumElem {
  std::optional<A> left;
  std::optional<B> right;
  Rational lambda{0};

  static SkewSumElem pure_left(A a) { return {std::move(a), std::nullopt, Rational(0)}; }
  static SkewSumElem pure_right(B b) { return {std::nullopt, std::move(b), Rational(1)}; }
  static SkewSumElem mixed(A a, B b, Rational lam) {
    if (lam <= 0 || lam >= 1) throw WeightError("mixed skew-sum element needs 0 < lambda < 1");
    return {std::move(a), std::move(b), std::move(lam)};
  }

  bool well_formed() const {
    if (lambda < 0 || lambda > 1) return false;
    if (lambda == 0) return left.has_value() && !right.has_value();
    if (lambda == 1) return !left.has_value() && right.has_value();
    return left.has_value() && right.has_value();
  }

  friend bool operator==(const SkewSumElem&, const SkewSumElem&) = default;
};

/// Convex combination in A + B.
///
/// With s = Sum_i r_i lambda_i the result is
///   (Sum_i r_i(1-lambda_i)/(1-s) . a_i,  Sum_i r_i lambda_i / s . b_i,  s),
/// collapsing to a pure A element when s = 0 and a pure B element when s = 1.
/// Summands whose weight on a side is zero are not passed to that side's
/// combiner. For sum(r) < 1 the formula is applied literally: the A-side
/// weights then sum to (sum(r) - s)/(1 - s) <= 1 and the B side stays
/// normalized.
template <class A, class B, class CombineA, class CombineB>
SkewSumElem<A, B> skew_sum_combine(std::span<const Rational> weights,
                                   std::span<const SkewSumElem<A, B>> elems,
                                   CombineA&& combine_a, CombineB&& combine_b) {
  validate_weights(weights);
  if (weights.size() != elems.size()) throw DimensionError("skew_sum_combine: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].well_formed()) throw WeightError("skew_sum_combine: malformed element");
    s += weights[i] * elems[i].lambda;
  }

  auto side_a = [&](const Rational& denom) {
    std::vector<Rational> w;
    std::vector<A> xs;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Rational wi = weights[i] * (Rational(1) - elems[i].lambda);
      if (wi == 0) continue;
      w.push_back(wi / denom);
      xs.push_back(*elems[i].left);
    }
    return A(combine_a(std::span<const Rational>(w), std::span<const A>(xs)));
  };
  auto side_b = [&](const Rational& denom) {
    std::vector<Rational> w;
    std::vector<B> xs;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Rational wi = weights[i] * elems[i].lambda;
      if (wi == 0) continue;
      w.push_back(wi / denom);
      xs.push_back(*elems[i].right);
    }
    return B(combine_b(std::span<const Rational>(w), std::span<const B>(xs)));
  };

  if (s == 0) return SkewSumElem<A, B>::pure_left(side_a(Rational(1)));
  if (s == 1) return SkewSumElem<A, B>::pure_right(side_b(Rational(1)));
  return SkewSumElem<A, B>{side_a(Rational(1) - s), side_b(s), s};
}

/// (a,b,lambda) <= (a',b',mu) iff lambda <= mu and the components present on
/// both sides are ordered. A component absent on either side imposes nothing,
/// which makes every pure A element lie below every pure B element.
template <class A, class B, class LeqA, class LeqB>
bool skew_leq(const SkewSumElem<A, B>& lhs, const SkewSumElem<A, B>& rhs, LeqA&& leq_a, LeqB&& leq_b) {
  if (lhs.lambda > rhs.lambda) return false;
  if (lhs.left && rhs.left && !leq_a(*lhs.left, *rhs.left)) return false;
  if (lhs.right && rhs.right && !leq_b(*lhs.right, *rhs.right)) return false;
  return true;
}

}  // namespace kegel
