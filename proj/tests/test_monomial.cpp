#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rwg/binomial.hpp"
#include "rwg/error.hpp"
#include "rwg/monomial.hpp"

using rwg::Monomial;
using rwg::MonomialIdeal;
using rwg::MonomialOrder;
using rwg::operator*;

TEST(Monomial, Arithmetic) {
  const Monomial a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(rwg::total_degree(a), 3);
  EXPECT_EQ(rwg::lcm(a, b), (Monomial{2, 3, 1}));
  EXPECT_EQ(rwg::gcd(a, b), (Monomial{1, 0, 0}));
  EXPECT_EQ(a * b, (Monomial{3, 3, 1}));
  EXPECT_TRUE(rwg::divides(Monomial{1, 0, 1}, a));
  EXPECT_FALSE(rwg::divides(b, a));
  EXPECT_EQ(rwg::quotient(a, Monomial{1, 0, 0}), (Monomial{1, 0, 1}));
  EXPECT_FALSE(rwg::coprime(a, b));
  EXPECT_TRUE(rwg::coprime(Monomial{1, 0, 0}, Monomial{0, 2, 1}));
  EXPECT_TRUE(rwg::is_one(Monomial{0, 0}));
  EXPECT_EQ(rwg::monomial_string(Monomial{2, 0, 0, 1}), "x0^2*x3");
  EXPECT_EQ(rwg::monomial_string(Monomial{0, 0}), "1");
  EXPECT_EQ(rwg::monomial_string(Monomial{1, 1}, {"x9", "x6"}), "x9*x6");
}

TEST(MonomialOrder, KnownComparisons) {
  const Monomial x0x2{1, 0, 1}, x1sq{0, 2, 0};
  EXPECT_GT(rwg::compare(x1sq, x0x2, MonomialOrder::kGrevLex), 0);
  EXPECT_LT(rwg::compare(x1sq, x0x2, MonomialOrder::kLex), 0);
  EXPECT_LT(rwg::compare(x1sq, x0x2, MonomialOrder::kDegLex), 0);
  EXPECT_GT(rwg::compare(Monomial{0, 0, 3}, Monomial{2, 0, 0}, MonomialOrder::kGrevLex), 0);
  EXPECT_EQ(rwg::compare(x0x2, x0x2, MonomialOrder::kGrevLex), 0);
  EXPECT_EQ(rwg::parse_order("lex"), MonomialOrder::kLex);
  EXPECT_THROW(rwg::parse_order("revlex?"), rwg::MalformedError);
}

TEST(MonomialOrder, GrevlexAgreesWithReference) {
  const auto monos = oracle::monomials_up_to(3, 4);
  for (const auto& a : monos)
    for (const auto& b : monos) {
      const int c = rwg::compare(a, b, MonomialOrder::kGrevLex);
      EXPECT_EQ(c > 0, oracle::grevlex_greater(a, b));
      EXPECT_EQ(c < 0, oracle::grevlex_greater(b, a));
    }
}

TEST(MonomialOrder, IsMultiplicative) {
  const auto monos = oracle::monomials_up_to(3, 3);
  for (auto order : {MonomialOrder::kGrevLex, MonomialOrder::kDegLex, MonomialOrder::kLex})
    for (const auto& a : monos)
      for (const auto& b : monos)
        for (const auto& c : {Monomial{1, 0, 0}, Monomial{0, 2, 1}})
          EXPECT_EQ(rwg::compare(a, b, order) > 0, rwg::compare(a * c, b * c, order) > 0);
}

TEST(MonomialIdeal, MinimalGenerators) {
  MonomialIdeal i(3, {{2, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {0, 1, 1}});
  EXPECT_EQ(i.generators(), (std::vector<Monomial>{{0, 1, 1}, {1, 0, 0}}));
  EXPECT_TRUE(i.contains({3, 1, 0}));
  EXPECT_FALSE(i.contains({0, 1, 0}));
  EXPECT_FALSE(i.is_unit());
  EXPECT_TRUE(MonomialIdeal(2, {{0, 0}}).is_unit());
}

TEST(Hilbert, Examples) {
  const auto h1 = rwg::hilbert(MonomialIdeal(4, {{1, 0, 1, 0}}));
  EXPECT_EQ(h1.dimension, 3);
  EXPECT_EQ(h1.degree, 2);
  const auto h0 = rwg::hilbert(MonomialIdeal(5));
  EXPECT_EQ(h0.dimension, 5);
  EXPECT_EQ(h0.degree, 1);
  const auto h2 = rwg::hilbert(MonomialIdeal(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  EXPECT_EQ(h2.dimension, 2);
  EXPECT_EQ(h2.degree, 4);
  const auto unit = rwg::hilbert(MonomialIdeal(3, {{0, 0, 0}}));
  EXPECT_TRUE(unit.zero_ring());
  EXPECT_EQ(unit.dimension, -1);
  // Artinian: <x^2, y^3> has 6 standard monomials.
  const auto art = rwg::hilbert(MonomialIdeal(2, {{2, 0}, {0, 3}}));
  EXPECT_EQ(art.dimension, 0);
  EXPECT_EQ(art.degree, 6);
}

TEST(Hilbert, MatchesStandardMonomialCountOnRandomIdeals) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int gens = 1 + static_cast<int>(rng() % 5);
    std::vector<Monomial> g;
    for (int i = 0; i < gens; ++i) {
      Monomial m(n);
      for (auto& e : m) e = static_cast<int>(rng() % 3);
      if (rwg::is_one(m)) m[0] = 1;
      g.push_back(m);
    }
    const MonomialIdeal ideal(n, g);
    const auto h = rwg::hilbert(ideal);
    const auto hf = h.hilbert_function(9);
    const auto counted = rwg::count_standard_monomials(ideal, 9);
    for (int d = 0; d <= 9; ++d) {
      EXPECT_EQ(hf[d], oracle::standard_monomials(n, g, d)) << "trial " << trial << " d " << d;
      EXPECT_EQ(counted[d], hf[d]);
    }
    // Numerator at 1 vanishes to order n - dim exactly.
    if (h.dimension >= 0) EXPECT_NE(h.reduced_numerator.evaluate(1), 0);
  }
}

TEST(Hilbert, NodeCapRaises) {
  rwg::Limits lim;
  lim.max_hilbert_nodes = 2;
  EXPECT_THROW(rwg::hilbert(MonomialIdeal(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}), lim),
               rwg::ResourceError);
}

TEST(Binomial, Construction) {
  EXPECT_THROW(rwg::Binomial({1, 0}, {1, 0}), rwg::DomainError);
  EXPECT_THROW(rwg::Binomial({1, 0}, {1}), rwg::DomainError);
  EXPECT_THROW(rwg::Binomial({-1, 0}, {1, 0}), rwg::DomainError);
  const rwg::Binomial b({1, 0, 1}, {0, 2, 0});
  EXPECT_EQ(b.degree(), 2);
  EXPECT_TRUE(b.has_disjoint_supports());
  EXPECT_EQ(b.to_string(), "x0*x2 - x1^2");
  EXPECT_EQ(b.oriented(MonomialOrder::kGrevLex).u, (Monomial{0, 2, 0}));
  EXPECT_EQ(b.oriented(MonomialOrder::kLex).u, (Monomial{1, 0, 1}));
}

TEST(Binomial, InKernel) {
  EXPECT_TRUE(rwg::in_kernel(rwg::Binomial({1, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}),
                             {1, 2, 3, 4, 5, 9, 6}));
  EXPECT_TRUE(rwg::in_kernel(rwg::Binomial({1, 0, 1, 0}, {0, 2, 0, 0}), {0, 1, 2, 3}));
  EXPECT_FALSE(rwg::in_kernel(rwg::Binomial({1, 0}, {0, 1}), {1, 2}));
  EXPECT_THROW(rwg::in_kernel(rwg::Binomial({1, 0}, {0, 1}), {1, 2, 3}), rwg::DomainError);
}
