#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <vector>

#include "kegel/rational.hpp"
#include "kegel/subdist.hpp"

namespace kegel {

/// An m x n matrix of nonnegative rationals whose columns each sum to <= 1.
///
/// Read as an arrow n -> m of the Lawvere theory of subconvex sets: column j
/// is the sub-distribution over the m target indices assigned to source j.
/// Strict (column sums exactly 1) matrices share this representation and are
/// recognised by is_strict().
class StochMatrix {
 public:
  /// All-zero matrix of the given shape.
  StochMatrix(std::size_t rows, std::size_t cols);

  /// Row-major entries; throws WeightError if an entry is negative or a
  /// column sums to more than 1, DimensionError on a size mismatch.
  static StochMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Nested rows, at least one row (use from_entries for 0-row shapes).
  static StochMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational column_sum(std::size_t j) const;
  FiniteSubDist column(std::size_t j) const;
  bool is_strict() const;
  bool is_substochastic() const;

  friend bool operator==(const StochMatrix&, const StochMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

StochMatrix identity(std::size_t n);

/// Kleisli composition as a matrix product: (p x m) * (m x n) -> (p x n).
StochMatrix compose(const StochMatrix& a, const StochMatrix& b);

/// Coproduct injections (1_{n1} ; 0) and (0 ; 1_{n2}).
StochMatrix inj1(std::size_t n1, std::size_t n2);
StochMatrix inj2(std::size_t n1, std::size_t n2);

/// Copairing (A1 A2): the unique U with compose(U, inj_i) = A_i.
StochMatrix copair(const StochMatrix& a1, const StochMatrix& a2);

/// Monoidal sum (A1 0 ; 0 A2).
StochMatrix block_diag(const StochMatrix& a1, const StochMatrix& a2);

bool entrywise_leq(const StochMatrix& lhs, const StochMatrix& rhs);

/// Supremum of a finite ascending chain (its last element). Throws
/// OrderError if the chain is empty, not ascending, or changes shape.
StochMatrix chain_sup(std::span<const StochMatrix> chain);

/// Image of d under f: {0..m-1} -> {0..k-1}: y |-> Sum_{f(x)=y} d(x).
FiniteSubDist pushforward(std::span<const std::size_t> f, std::size_t k, const FiniteSubDist& d);

/// Monad multiplication: flattens a sub-distribution `outer` over the
/// indexed family into x |-> Sum_i outer(i) * family[i](x).
FiniteSubDist kleisli_mult(const FiniteSubDist& outer, std::span<const FiniteSubDist> family);

nlohmann::json to_json(const StochMatrix& m);
StochMatrix stoch_matrix_from_json(const nlohmann::json& j);

}  // namespace kegel
