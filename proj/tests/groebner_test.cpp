#include <gtest/gtest.h>

#include <random>

#include "sdepth/errors.hpp"
#include "support/oracles.hpp"

namespace sdepth {
namespace {

using testing::P;
using testing::polys;
using testing::strings;

RingPtr qxyz() { return make_ring(CoefField::rationals(), {"x", "y", "z"}); }

FreeModuleElement vec(const RingPtr& r, std::initializer_list<const char*> entries) {
  return FreeModuleElement{polys(r, entries)};
}

// Substitutes each syzygy into the generators.
void expect_syzygies_sound(const std::vector<FreeModuleElement>& syz, const std::vector<Polynomial>& gens) {
  for (const auto& s : syz) {
    ASSERT_EQ(s.rank(), gens.size());
    Polynomial sum(gens.front().ring());
    for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + s.components[i] * gens[i];
    EXPECT_TRUE(sum.is_zero()) << s.to_string();
  }
}

TEST(Buchberger, Examples) {
  auto r = qxyz();
  EXPECT_EQ(strings(buchberger(r, polys(r, {"x+y", "x-y"})).polynomials()), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(strings(buchberger(r, polys(r, {"x*y", "x*z"})).polynomials()),
            (std::vector<std::string>{"x*y", "x*z"}));
  std::vector<Polynomial> none;
  EXPECT_TRUE(buchberger(r, none).empty());
}

TEST(Buchberger, MixedRanksAreStructural) {
  auto r = qxyz();
  std::vector<FreeModuleElement> gens{vec(r, {"x", "y"}), vec(r, {"x"})};
  EXPECT_THROW(buchberger(r, 2, gens), StructuralError);
}

TEST(Buchberger, ModuleBasisBothOrders) {
  auto r = qxyz();
  std::vector<FreeModuleElement> gens{vec(r, {"x", "y"}), vec(r, {"y", "z"})};
  for (auto kind : {ModuleOrderKind::TermOverPosition, ModuleOrderKind::PositionOverTerm}) {
    GroebnerBasis gb = buchberger(r, 2, gens, kind);
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
    // z*(x,y) - y*(y,z) = (xz - y^2, 0) lies in the span.
    EXPECT_TRUE(normal_form(vec(r, {"x*z - y^2", "0"}), gb).is_zero());
    EXPECT_FALSE(normal_form(vec(r, {"x", "0"}), gb).is_zero());
  }
}

TEST(NormalForm, Examples) {
  auto r = qxyz();
  auto gb = buchberger(r, polys(r, {"x*y"}));
  EXPECT_TRUE(normal_form(P(r, "x^2*y"), gb).is_zero());
  gb = buchberger(r, polys(r, {"x"}));
  EXPECT_EQ(normal_form(P(r, "x+y"), gb), P(r, "y"));
  EXPECT_EQ(normal_form(P(r, "y^2"), gb), P(r, "y^2"));
}

TEST(NormalForm, RankMismatchIsStructural) {
  auto r = qxyz();
  std::vector<FreeModuleElement> gens{vec(r, {"x", "y"})};
  auto gb = buchberger(r, 2, gens);
  EXPECT_THROW(normal_form(vec(r, {"x"}), gb), StructuralError);
}

TEST(Syzygies, Examples) {
  auto r = qxyz();
  auto gens = polys(r, {"x", "y"});
  auto syz = syzygies(gens);
  expect_syzygies_sound(syz, gens);
  ASSERT_EQ(syz.size(), 1u);
  // Generated by (y, -x): same submodule of R^2.
  std::vector<FreeModuleElement> koszul{vec(r, {"y", "-x"})};
  EXPECT_TRUE(buchberger(r, 2, syz) == buchberger(r, 2, koszul));

  gens = polys(r, {"x"});
  EXPECT_TRUE(syzygies(gens).empty());

  gens = polys(r, {"x*y", "x*z"});
  syz = syzygies(gens);
  expect_syzygies_sound(syz, gens);
  std::vector<FreeModuleElement> expected{vec(r, {"z", "-y"})};
  EXPECT_TRUE(buchberger(r, 2, syz) == buchberger(r, 2, expected));

  std::vector<Polynomial> empty;
  EXPECT_THROW(syzygies(empty), StructuralError);
}

TEST(ColonIdeal, Examples) {
  auto r = qxyz();
  EXPECT_EQ(colon_ideal(testing::ideal(r, {"x*y"}), P(r, "y")), testing::ideal(r, {"x"}));
  EXPECT_EQ(colon_ideal(testing::ideal(r, {"x"}), P(r, "y")), testing::ideal(r, {"x"}));
  Ideal i = testing::ideal(r, {"x^2 - y", "y*z"});
  EXPECT_EQ(colon_ideal(i, P(r, "1")), i);
  EXPECT_TRUE(colon_ideal(i, P(r, "x^2 - y")).is_unit());
  EXPECT_THROW(colon_ideal(i, Polynomial(r)), DomainError);
}

TEST(MonomialDim, Examples) {
  auto r = qxyz();
  auto lead = [&](std::initializer_list<const char*> ms) {
    std::vector<Monomial> out;
    for (const auto& p : polys(r, ms)) out.push_back(testing::lead_monomial(p));
    return out;
  };
  EXPECT_EQ(monomial_dim(lead({"x"}), 3), 2);
  EXPECT_EQ(monomial_dim(lead({"x", "y", "z"}), 3), 0);
  EXPECT_EQ(monomial_dim(lead({"x*y"}), 3), 2);
  EXPECT_EQ(monomial_dim({}, 3), 3);
  EXPECT_EQ(monomial_dim(lead({"1"}), 3), -1);
}

TEST(Ideal, DimensionConventions) {
  auto r = qxyz();
  EXPECT_EQ(Ideal(r, {}).dim(), 3);
  EXPECT_EQ(testing::ideal(r, {"x - 1", "x"}).dim(), -1);
  EXPECT_EQ(testing::ideal(r, {"x*y", "x*z"}).dim(), 2);
  EXPECT_EQ(testing::ideal(r, {"x^2 + y^2 - 1", "z"}).dim(), 1);
}

TEST(Ideal, ZeroGeneratorsDropped) {
  auto r = qxyz();
  Ideal i(r, {Polynomial(r), P(r, "x")});
  EXPECT_EQ(i.generators().size(), 1u);
  EXPECT_EQ(i.to_string(), "(x)");
}

class GroebnerProperties : public ::testing::TestWithParam<int> {};

TEST_P(GroebnerProperties, AuditMembershipColonDeterminism) {
  const int p = GetParam();
  CoefField field = p == 0 ? CoefField::rationals() : CoefField::prime(static_cast<std::uint64_t>(p));
  auto r = make_ring(field, {"x", "y", "z", "w"});
  std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(p));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> gens;
    const auto count = 1 + testing::draw(rng, 3);
    for (std::uint64_t i = 0; i < count; ++i) gens.push_back(testing::random_polynomial(r, rng, 3, 2));
    Ideal ideal(r, gens);
    const GroebnerBasis& gb = ideal.groebner();

    // Reduced and generating.
    for (const auto& g : ideal.generators()) ASSERT_TRUE(normal_form(g, gb).is_zero());
    auto basis = gb.polynomials();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ASSERT_TRUE(r->field().is_one(leading_term(basis[i]).coeff));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : basis[j].terms()) ASSERT_FALSE(leading_term(basis[i]).mono.divides(t.mono));
      }
    }

    // Membership of a random combination of the generators.
    Polynomial f(r);
    for (const auto& g : ideal.generators()) f = f + testing::random_polynomial(r, rng, 2, 2) * g;
    ASSERT_TRUE(ideal.contains(f));
    Polynomial outside = testing::random_polynomial(r, rng, 3, 2);
    ASSERT_EQ(ideal.contains(outside), normal_form(outside, gb).is_zero());

    // Colon soundness.
    Polynomial h = testing::random_polynomial(r, rng, 2, 1);
    if (!h.is_zero()) {
      Ideal colon = colon_ideal(ideal, h);
      for (const auto& g : colon.generators()) ASSERT_TRUE(ideal.contains(g * h));
      for (const auto& g : basis) ASSERT_TRUE(colon.contains(g));
    }

    // Syzygy soundness.
    if (!ideal.generators().empty()) expect_syzygies_sound(syzygies(ideal.generators()), ideal.generators());

    // Determinism.
    ASSERT_TRUE(buchberger(r, gens) == gb);
    ASSERT_EQ(strings(buchberger(r, gens).polynomials()), strings(basis));
  }
}

INSTANTIATE_TEST_SUITE_P(QQandFF, GroebnerProperties, ::testing::Values(0, 2, 101));

TEST(Groebner, LexEliminationGivesTriangularBasis) {
  auto r = make_ring(CoefField::rationals(), {"x", "y", "z"}, MonomialOrder::Lex);
  auto gb = buchberger(r, polys(r, {"x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"}));
  auto basis = gb.polynomials();
  // The last element involves z only.
  const auto& last = basis.back();
  for (const auto& t : last.terms()) {
    EXPECT_EQ(t.mono.exp[0], 0);
    EXPECT_EQ(t.mono.exp[1], 0);
  }
  EXPECT_EQ(last, P(r, "z^6 - 4*z^4 + 4*z^3 - z^2"));
}

TEST(Groebner, IntersectionOracle) {
  auto r = qxyz();
  Ideal meet = testing::intersect(testing::ideal(r, {"x"}), testing::ideal(r, {"y"}));
  EXPECT_EQ(meet, testing::ideal(r, {"x*y"}));
  meet = testing::intersect(testing::ideal(r, {"x", "y"}), testing::ideal(r, {"y", "z"}));
  EXPECT_EQ(meet, testing::ideal(r, {"y", "x*z"}));
}

}  // namespace
}  // namespace sdepth
