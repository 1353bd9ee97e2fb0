#include "kegel/stoch_matrix.hpp"

#include <string>

namespace kegel {

StochMatrix::StochMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

StochMatrix StochMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<Rational> entries) {
  if (entries.size() != rows * cols) throw DimensionError("matrix entry count does not match its shape");
  StochMatrix m(rows, cols);
  for (auto& e : entries) {
    e.canonicalize();
    if (e < 0) throw WeightError("negative matrix entry " + to_string(e));
  }
  m.entries_ = std::move(entries);
  for (std::size_t j = 0; j < cols; ++j) {
    if (m.column_sum(j) > 1) throw WeightError("column " + std::to_string(j) + " sums to more than 1");
  }
  return m;
}

StochMatrix StochMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw DimensionError("from_rows needs at least one row");
  std::size_t cols = rows.front().size();
  std::vector<Rational> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged matrix rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_entries(rows.size(), cols, std::move(flat));
}

Rational StochMatrix::column_sum(std::size_t j) const {
  Rational s(0);
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

FiniteSubDist StochMatrix::column(std::size_t j) const {
  std::vector<Rational> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return FiniteSubDist(std::move(c));
}

bool StochMatrix::is_strict() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (column_sum(j) != 1) return false;
  }
  return true;
}

bool StochMatrix::is_substochastic() const {
  for (const auto& e : entries_) {
    if (e < 0) return false;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (column_sum(j) > 1) return false;
  }
  return true;
}

StochMatrix identity(std::size_t n) {
  std::vector<Rational> e(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return StochMatrix::from_entries(n, n, std::move(e));
}

StochMatrix compose(const StochMatrix& a, const StochMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("compose: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<Rational> e(a.rows() * b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += aik * b(k, j);
    }
  }
  // from_entries re-checks the column sums of the product.
  return StochMatrix::from_entries(a.rows(), b.cols(), std::move(e));
}

namespace {

StochMatrix injection(std::size_t n1, std::size_t n2, bool first) {
  std::size_t n = first ? n1 : n2;
  std::size_t offset = first ? 0 : n1;
  std::vector<Rational> e((n1 + n2) * n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) e[(offset + j) * n + j] = 1;
  return StochMatrix::from_entries(n1 + n2, n, std::move(e));
}

}  // namespace

StochMatrix inj1(std::size_t n1, std::size_t n2) { return injection(n1, n2, true); }
StochMatrix inj2(std::size_t n1, std::size_t n2) { return injection(n1, n2, false); }

StochMatrix copair(const StochMatrix& a1, const StochMatrix& a2) {
  if (a1.rows() != a2.rows()) throw DimensionError("copair: row counts differ");
  std::size_t cols = a1.cols() + a2.cols();
  std::vector<Rational> e;
  e.reserve(a1.rows() * cols);
  for (std::size_t i = 0; i < a1.rows(); ++i) {
    for (std::size_t j = 0; j < a1.cols(); ++j) e.push_back(a1(i, j));
    for (std::size_t j = 0; j < a2.cols(); ++j) e.push_back(a2(i, j));
  }
  return StochMatrix::from_entries(a1.rows(), cols, std::move(e));
}

StochMatrix block_diag(const StochMatrix& a1, const StochMatrix& a2) {
  std::size_t rows = a1.rows() + a2.rows();
  std::size_t cols = a1.cols() + a2.cols();
  std::vector<Rational> e(rows * cols, Rational(0));
  for (std::size_t i = 0; i < a1.rows(); ++i)
    for (std::size_t j = 0; j < a1.cols(); ++j) e[i * cols + j] = a1(i, j);
  for (std::size_t i = 0; i < a2.rows(); ++i)
    for (std::size_t j = 0; j < a2.cols(); ++j) e[(a1.rows() + i) * cols + a1.cols() + j] = a2(i, j);
  return StochMatrix::from_entries(rows, cols, std::move(e));
}

bool entrywise_leq(const StochMatrix& lhs, const StochMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  for (std::size_t k = 0; k < lhs.entries().size(); ++k) {
    if (lhs.entries()[k] > rhs.entries()[k]) return false;
  }
  return true;
}

StochMatrix chain_sup(std::span<const StochMatrix> chain) {
  if (chain.empty()) throw OrderError("chain_sup of an empty chain");
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& prev = chain[k - 1];
    const auto& next = chain[k];
    if (prev.rows() != next.rows() || prev.cols() != next.cols())
      throw OrderError("chain_sup: shape changes at position " + std::to_string(k));
    if (!entrywise_leq(prev, next)) throw OrderError("chain_sup: chain descends at position " + std::to_string(k));
  }
  return chain.back();
}

FiniteSubDist pushforward(std::span<const std::size_t> f, std::size_t k, const FiniteSubDist& d) {
  if (f.size() != d.size()) throw DimensionError("pushforward: map domain does not match arity");
  std::vector<Rational> out(k, Rational(0));
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= k) throw DimensionError("pushforward: map leaves its codomain");
    out[f[x]] += d[x];
  }
  return FiniteSubDist(std::move(out));
}

FiniteSubDist kleisli_mult(const FiniteSubDist& outer, std::span<const FiniteSubDist> family) {
  if (outer.size() != family.size()) throw DimensionError("kleisli_mult: outer arity differs from family size");
  if (family.empty()) return FiniteSubDist();
  std::size_t n = family.front().size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].size() != n) throw DimensionError("kleisli_mult: inner arities differ");
    if (outer[i] == 0) continue;
    for (std::size_t x = 0; x < n; ++x) out[x] += outer[i] * family[i][x];
  }
  return FiniteSubDist(std::move(out));
}

nlohmann::json to_json(const StochMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

StochMatrix stoch_matrix_from_json(const nlohmann::json& j) {
  auto rows = j.at("rows").get<std::size_t>();
  auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw DimensionError("matrix JSON: row count mismatch");
  std::vector<Rational> flat;
  for (const auto& row : entries) {
    if (row.size() != cols) throw DimensionError("matrix JSON: column count mismatch");
    for (const auto& e : row) flat.push_back(parse_rational(e.get<std::string>()));
  }
  return StochMatrix::from_entries(rows, cols, std::move(flat));
}

}  // namespace kegel
