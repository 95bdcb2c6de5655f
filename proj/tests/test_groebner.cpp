#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rwg/error.hpp"
#include "rwg/groebner.hpp"

using rwg::Binomial;
using rwg::Monomial;
using rwg::MonomialOrder;

namespace {

oracle::Poly poly(const Binomial& b) { return oracle::binomial_poly(b.u, b.v); }

std::vector<oracle::Poly> polys(const std::vector<Binomial>& bs) {
  std::vector<oracle::Poly> out;
  for (const auto& b : bs) out.push_back(poly(b));
  return out;
}

// Independent grevlex check: reduced, closed under S-pairs, and contains the
// input.
void expect_reduced_grevlex_basis(const std::vector<Binomial>& input,
                                  const rwg::GroebnerResult& gb) {
  const auto basis = polys(gb.basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(oracle::lead(basis[i]), gb.basis[i].u);
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      EXPECT_TRUE(oracle::remainder(oracle::s_polynomial(basis[i], basis[j]), basis).empty())
          << gb.basis[i].to_string() << " / " << gb.basis[j].to_string();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : basis[i]) EXPECT_FALSE(oracle::exps_divide(gb.basis[j].u, m));
    }
  }
  for (const auto& b : input) EXPECT_TRUE(oracle::remainder(poly(b), basis).empty()) << b.to_string();
  EXPECT_TRUE(rwg::verify_certificates(gb));
  EXPECT_TRUE(rwg::verify_groebner(gb.basis, MonomialOrder::kGrevLex));
}

}  // namespace

TEST(Buchberger, CoprimeLeadsNeedNoCompletion) {
  const std::vector<Binomial> in{Binomial({1, 0, 1, 0}, {0, 2, 0, 0}),
                                 Binomial({0, 1, 0, 1}, {0, 0, 2, 0})};
  const auto gb = rwg::buchberger_binomial(in);
  ASSERT_EQ(gb.basis.size(), 2u);
  EXPECT_EQ(gb.pairs_skipped, 1u);
  expect_reduced_grevlex_basis(in, gb);
}

TEST(Buchberger, TwistedCubic) {
  const std::vector<Binomial> in{Binomial({1, 0, 1, 0}, {0, 2, 0, 0}),
                                 Binomial({0, 1, 0, 1}, {0, 0, 2, 0}),
                                 Binomial({1, 0, 0, 1}, {0, 1, 1, 0})};
  const auto gb = rwg::buchberger_binomial(in);
  std::set<Monomial> leads;
  for (const auto& b : gb.basis) leads.insert(b.u);
  EXPECT_EQ(leads, (std::set<Monomial>{{0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}}));
  expect_reduced_grevlex_basis(in, gb);
  const auto h = rwg::hilbert(rwg::initial_ideal(gb.basis, MonomialOrder::kGrevLex, 4));
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 3);
}

TEST(Buchberger, SingleBinomialIsItsOwnBasis) {
  const std::vector<Binomial> in{Binomial({0, 2, 0}, {0, 0, 1})};
  const auto gb = rwg::buchberger_binomial(in);
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], in[0]);
}

TEST(Buchberger, ColourSeparationPair) {
  // x1 x3 x5 - x9, x2 x4 - x6 over (x1..x5, x9, x6)
  const std::vector<Binomial> in{Binomial({1, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}),
                                 Binomial({0, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1})};
  const auto gb = rwg::buchberger_binomial(in);
  EXPECT_EQ(gb.basis.size(), 2u);
  expect_reduced_grevlex_basis(in, gb);
  const auto init = rwg::initial_ideal(gb.basis, MonomialOrder::kGrevLex, 7);
  EXPECT_EQ(init.generators().size(), 2u);
  const auto probe = rwg::normal_form(Binomial({2, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}),
                                      gb.basis, MonomialOrder::kGrevLex);
  EXPECT_TRUE(probe.has_value());
}

TEST(Buchberger, RandomBinomialIdeals) {
  std::mt19937 rng(7);
  auto random_monomial = [&](int n) {
    Monomial m(n);
    for (auto& e : m) e = static_cast<int>(rng() % 3);
    return m;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    std::vector<Binomial> in;
    while (in.size() < 2 + rng() % 2) {
      Monomial u = random_monomial(n), v = random_monomial(n);
      if (u == v) continue;
      in.emplace_back(u, v);
    }
    const auto gb = rwg::buchberger_binomial(in);
    expect_reduced_grevlex_basis(in, gb);
  }
}

TEST(InitialIdeal, DependsOnTheOrder) {
  const Binomial b({1, 0, 1}, {0, 2, 0});
  const auto grevlex = rwg::buchberger_binomial({b}, MonomialOrder::kGrevLex);
  EXPECT_EQ(rwg::initial_ideal(grevlex.basis, MonomialOrder::kGrevLex, 3).generators(),
            (std::vector<Monomial>{{0, 2, 0}}));
  const auto lex = rwg::buchberger_binomial({b}, MonomialOrder::kLex);
  EXPECT_EQ(rwg::initial_ideal(lex.basis, MonomialOrder::kLex, 3).generators(),
            (std::vector<Monomial>{{1, 0, 1}}));
  EXPECT_TRUE(rwg::initial_ideal({}, MonomialOrder::kGrevLex, 3).is_zero());
}

TEST(NormalForm, ReducesMonomialsToStandardForm) {
  const std::vector<Binomial> basis{Binomial({0, 2}, {1, 0})};  // x1^2 -> x0
  EXPECT_EQ(rwg::normal_form(Monomial{0, 5}, basis, MonomialOrder::kGrevLex), (Monomial{2, 1}));
  EXPECT_FALSE(rwg::normal_form(Binomial({0, 4}, {2, 0}), basis, MonomialOrder::kGrevLex));
}

TEST(Buchberger, ErrorsAndCaps) {
  EXPECT_THROW(rwg::buchberger_binomial({}), rwg::DomainError);
  EXPECT_THROW(rwg::buchberger_binomial({Binomial({1, 0}, {0, 1}), Binomial({1}, {2})}),
               rwg::DomainError);
  rwg::Limits lim;
  lim.max_basis = 1;
  const std::vector<Binomial> twisted{Binomial({1, 0, 1, 0}, {0, 2, 0, 0}),
                                      Binomial({0, 1, 0, 1}, {0, 0, 2, 0}),
                                      Binomial({1, 0, 0, 1}, {0, 1, 1, 0})};
  EXPECT_THROW(rwg::buchberger_binomial(twisted, MonomialOrder::kGrevLex, lim), rwg::ResourceError);
}

TEST(Certificates, TamperingIsDetected) {
  // x0^2 - x1, x0 x1 - x2 needs x1^2 - x0 x2 from its S-pair.
  auto gb = rwg::buchberger_binomial(
      {Binomial({2, 0, 0}, {0, 1, 0}), Binomial({1, 1, 0}, {0, 0, 1})});
  ASSERT_TRUE(rwg::verify_certificates(gb));
  ASSERT_GT(gb.log.size(), gb.input_count);
  auto& last = gb.log.back();
  ASSERT_FALSE(last.terms.empty());
  last.terms[0].sign = -last.terms[0].sign;
  EXPECT_FALSE(rwg::verify_certificates(gb));
}
