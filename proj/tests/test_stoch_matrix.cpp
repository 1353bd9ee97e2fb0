#include <gtest/gtest.h>

#include "kegel/stoch_matrix.hpp"
#include "support/generators.hpp"

namespace {

using kegel::FiniteSubDist;
using kegel::Rational;
using kegel::StochMatrix;

Rational q(long p, long d) { return kegel::ratio(p, d); }

StochMatrix rows(const std::vector<std::vector<Rational>>& r) { return StochMatrix::from_rows(r); }

TEST(StochMatrix, Identity) {
  EXPECT_EQ(kegel::identity(0).rows(), 0u);
  EXPECT_EQ(kegel::identity(0).cols(), 0u);
  EXPECT_EQ(kegel::identity(2), rows({{1, 0}, {0, 1}}));
  StochMatrix a = rows({{q(1, 2), 0}, {q(1, 4), 1}, {0, 0}});
  EXPECT_EQ(kegel::compose(kegel::identity(3), a), a);
}

TEST(StochMatrix, RejectsInvalidEntries) {
  EXPECT_THROW(rows({{q(2, 3)}, {q(2, 3)}}), kegel::WeightError);
  EXPECT_THROW(rows({{q(-1, 3)}}), kegel::WeightError);
  EXPECT_THROW(rows({{1, 0}, {0}}), kegel::DimensionError);
}

TEST(StochMatrix, Compose) {
  EXPECT_EQ(kegel::compose(rows({{q(1, 2)}, {q(1, 2)}}), rows({{1}})), rows({{q(1, 2)}, {q(1, 2)}}));
  EXPECT_THROW(kegel::compose(kegel::identity(2), kegel::identity(3)), kegel::DimensionError);
}

TEST(StochMatrix, Injections) {
  EXPECT_EQ(kegel::inj1(1, 1), rows({{1}, {0}}));
  EXPECT_EQ(kegel::inj2(1, 1), rows({{0}, {1}}));
  EXPECT_EQ(kegel::inj1(2, 0), kegel::identity(2));
}

TEST(StochMatrix, Copair) {
  StochMatrix a = rows({{q(1, 2)}, {q(1, 3)}});
  EXPECT_EQ(kegel::copair(a, StochMatrix(2, 0)), a);
  EXPECT_EQ(kegel::copair(rows({{1}, {0}}), rows({{0}, {1}})), kegel::identity(2));
  StochMatrix a1 = rows({{q(1, 2), 0}, {q(1, 4), 1}});
  StochMatrix a2 = rows({{q(1, 3)}, {q(1, 3)}});
  EXPECT_EQ(kegel::compose(kegel::copair(a1, a2), kegel::inj1(2, 1)), a1);
  EXPECT_EQ(kegel::compose(kegel::copair(a1, a2), kegel::inj2(2, 1)), a2);
  EXPECT_THROW(kegel::copair(a1, kegel::identity(3)), kegel::DimensionError);
}

TEST(StochMatrix, BlockDiag) {
  EXPECT_EQ(kegel::block_diag(kegel::identity(1), kegel::identity(1)), kegel::identity(2));
  StochMatrix a = rows({{q(1, 2)}, {q(1, 4)}});
  EXPECT_EQ(kegel::block_diag(a, StochMatrix(0, 0)), a);
  EXPECT_EQ(kegel::block_diag(a, rows({{1}})), rows({{q(1, 2), 0}, {q(1, 4), 0}, {0, 1}}));
}

TEST(StochMatrix, Pushforward) {
  FiniteSubDist d({q(1, 4), q(3, 4)});
  std::vector<std::size_t> id{0, 1}, swap{1, 0}, constant{0, 0};
  EXPECT_EQ(kegel::pushforward(id, 2, d), d);
  EXPECT_EQ(kegel::pushforward(constant, 1, FiniteSubDist({q(1, 3), q(1, 3)})), FiniteSubDist({q(2, 3)}));
  EXPECT_EQ(kegel::pushforward(swap, 2, d), FiniteSubDist({q(3, 4), q(1, 4)}));
}

TEST(StochMatrix, KleisliMult) {
  FiniteSubDist phi({q(1, 3), q(1, 6), 0});
  std::vector<FiniteSubDist> single{phi};
  EXPECT_EQ(kegel::kleisli_mult(FiniteSubDist::dirac(1, 0), single), phi);
  std::vector<FiniteSubDist> diracs{FiniteSubDist::dirac(2, 0), FiniteSubDist::dirac(2, 1)};
  EXPECT_EQ(kegel::kleisli_mult(FiniteSubDist({q(1, 2), q(1, 2)}), diracs), FiniteSubDist({q(1, 2), q(1, 2)}));
  EXPECT_EQ(kegel::kleisli_mult(FiniteSubDist({0, 0}), diracs), FiniteSubDist({0, 0}));
  std::vector<FiniteSubDist> ragged{FiniteSubDist::dirac(2, 0), FiniteSubDist::dirac(3, 0)};
  EXPECT_THROW(kegel::kleisli_mult(FiniteSubDist({q(1, 2), q(1, 2)}), ragged), kegel::DimensionError);
}

TEST(StochMatrix, ChainSup) {
  StochMatrix a = rows({{q(1, 2)}, {q(1, 4)}});
  std::vector<StochMatrix> one{a}, two{StochMatrix(2, 1), a};
  EXPECT_EQ(kegel::chain_sup(one), a);
  EXPECT_EQ(kegel::chain_sup(two), a);
  std::vector<StochMatrix> three{rows({{0}}), rows({{q(1, 2)}}), rows({{q(3, 4)}})};
  EXPECT_EQ(kegel::chain_sup(three), rows({{q(3, 4)}}));
  std::vector<StochMatrix> down{rows({{q(1, 2)}}), rows({{0}})};
  EXPECT_THROW(kegel::chain_sup(down), kegel::OrderError);
  EXPECT_THROW(kegel::chain_sup(std::span<const StochMatrix>()), kegel::OrderError);
}

TEST(StochMatrix, JsonRoundTrip) {
  StochMatrix a = rows({{q(1, 2), 0}, {q(1, 4), 1}});
  nlohmann::json j = kegel::to_json(a);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["entries"][1][0], "1/4");
  EXPECT_EQ(kegel::stoch_matrix_from_json(nlohmann::json::parse(j.dump())), a);
}

// Property tests over random sub-stochastic matrices up to 5 x 5.

class LawvereProperty : public ::testing::Test {
 protected:
  gen::Rng rng{424242};
  std::size_t dim() { return gen::below(rng, 6); }
  std::size_t pos_dim() { return 1 + gen::below(rng, 5); }
};

TEST_F(LawvereProperty, CategoryLaws) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = dim(), m = dim(), n = dim(), k = dim();
    StochMatrix a = gen::matrix(rng, p, m), b = gen::matrix(rng, m, n), c = gen::matrix(rng, n, k);
    ASSERT_EQ(kegel::compose(kegel::compose(a, b), c), kegel::compose(a, kegel::compose(b, c)));
    ASSERT_EQ(kegel::compose(kegel::identity(p), a), a);
    ASSERT_EQ(kegel::compose(a, kegel::identity(m)), a);
    ASSERT_TRUE(kegel::compose(a, b).is_substochastic());
  }
}

TEST_F(LawvereProperty, CoproductUniversalProperty) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = pos_dim(), n1 = dim(), n2 = dim();
    StochMatrix a1 = gen::matrix(rng, p, n1), a2 = gen::matrix(rng, p, n2);
    StochMatrix u = kegel::copair(a1, a2);
    ASSERT_TRUE(u.is_substochastic());
    ASSERT_TRUE(kegel::inj1(n1, n2).is_substochastic());
    ASSERT_EQ(kegel::compose(u, kegel::inj1(n1, n2)), a1);
    ASSERT_EQ(kegel::compose(u, kegel::inj2(n1, n2)), a2);
    if (u.cols() == 0) continue;
    // Uniqueness: perturbing any single entry breaks one of the equations.
    std::size_t i = gen::below(rng, u.rows()), j = gen::below(rng, u.cols());
    std::vector<Rational> entries = u.entries();
    entries[i * u.cols() + j] = entries[i * u.cols() + j] == 0 ? Rational(1, 7) : Rational(0);
    bool valid = true;
    for (std::size_t c = 0; c < u.cols(); ++c) {
      Rational s(0);
      for (std::size_t r = 0; r < u.rows(); ++r) s += entries[r * u.cols() + c];
      valid &= s <= 1;
    }
    if (!valid) continue;
    StochMatrix v = StochMatrix::from_entries(u.rows(), u.cols(), entries);
    bool first = kegel::compose(v, kegel::inj1(n1, n2)) == a1;
    bool second = kegel::compose(v, kegel::inj2(n1, n2)) == a2;
    ASSERT_FALSE(first && second);
  }
}

TEST_F(LawvereProperty, BlockDiagIsFunctorial) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = dim(), m = dim(), n = dim(), p2 = dim(), m2 = dim(), n2 = dim();
    StochMatrix a = gen::matrix(rng, p, m), b = gen::matrix(rng, m, n);
    StochMatrix c = gen::matrix(rng, p2, m2), d = gen::matrix(rng, m2, n2);
    ASSERT_EQ(kegel::block_diag(kegel::compose(a, b), kegel::compose(c, d)),
              kegel::compose(kegel::block_diag(a, c), kegel::block_diag(b, d)));
    ASSERT_EQ(kegel::block_diag(kegel::identity(m), kegel::identity(m2)), kegel::identity(m + m2));
    ASSERT_TRUE(kegel::block_diag(a, c).is_substochastic());
  }
}

TEST_F(LawvereProperty, MonadLaws) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = pos_dim(), m = pos_dim(), k = pos_dim();
    FiniteSubDist phi = gen::finite_subdist(rng, n);
    // Left unit: a point mass on phi flattens to phi.
    std::vector<FiniteSubDist> just{phi};
    ASSERT_EQ(kegel::kleisli_mult(FiniteSubDist::dirac(1, 0), just), phi);
    // Right unit: phi over the point masses is phi.
    std::vector<FiniteSubDist> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(FiniteSubDist::dirac(n, i));
    ASSERT_EQ(kegel::kleisli_mult(phi, units), phi);
    // Associativity on a triple nesting: outer over m families of k-point
    // distributions over n-point distributions.
    std::vector<FiniteSubDist> base;
    for (std::size_t j = 0; j < k; ++j) base.push_back(gen::finite_subdist(rng, n));
    std::vector<FiniteSubDist> middle;
    for (std::size_t i = 0; i < m; ++i) middle.push_back(gen::finite_subdist(rng, k));
    FiniteSubDist outer = gen::finite_subdist(rng, m);
    std::vector<FiniteSubDist> flattened_middle;
    for (const auto& d : middle) flattened_middle.push_back(kegel::kleisli_mult(d, base));
    FiniteSubDist lhs = kegel::kleisli_mult(outer, flattened_middle);
    FiniteSubDist rhs = kegel::kleisli_mult(kegel::kleisli_mult(outer, middle), base);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST_F(LawvereProperty, PushforwardIsFunctorial) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = pos_dim(), k = pos_dim(), l = pos_dim();
    std::vector<std::size_t> f(m), g(k), gf(m);
    for (auto& x : f) x = gen::below(rng, k);
    for (auto& x : g) x = gen::below(rng, l);
    for (std::size_t i = 0; i < m; ++i) gf[i] = g[f[i]];
    FiniteSubDist d = gen::finite_subdist(rng, m);
    ASSERT_EQ(kegel::pushforward(g, l, kegel::pushforward(f, k, d)), kegel::pushforward(gf, l, d));
    ASSERT_EQ(kegel::pushforward(f, k, d).mass(), d.mass());
  }
}

TEST_F(LawvereProperty, ComposeIsMonotone) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = dim(), m = dim(), n = dim();
    StochMatrix hi = gen::matrix(rng, p, m), b = gen::matrix(rng, m, n);
    std::vector<Rational> entries = hi.entries();
    for (auto& e : entries) e *= gen::unit_rational(rng);
    StochMatrix lo = StochMatrix::from_entries(p, m, entries);
    ASSERT_TRUE(kegel::entrywise_leq(lo, hi));
    ASSERT_TRUE(kegel::entrywise_leq(kegel::compose(lo, b), kegel::compose(hi, b)));
    StochMatrix c = gen::matrix(rng, n, p);
    ASSERT_TRUE(kegel::entrywise_leq(kegel::compose(c, lo), kegel::compose(c, hi)));
    std::vector<StochMatrix> chain{lo, hi};
    ASSERT_EQ(kegel::chain_sup(chain), hi);
  }
}

}  // namespace
