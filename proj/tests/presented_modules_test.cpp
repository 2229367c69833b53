#include <gtest/gtest.h>

#include <random>

#include "sdepth/errors.hpp"
#include "support/oracles.hpp"

namespace sdepth {
namespace {

using testing::P;
using testing::polys;

RingPtr qxy() { return make_ring(CoefField::rationals(), {"x", "y"}); }
RingPtr qxyz() { return make_ring(CoefField::rationals(), {"x", "y", "z"}); }

PresentedModule cyclic(const RingPtr& r, std::initializer_list<const char*> rels) {
  return PresentedModule::quotient_ring(testing::ideal(r, rels));
}

PolyMatrix matrix(const RingPtr& r, std::size_t rows, std::size_t cols, std::initializer_list<const char*> entries) {
  PolyMatrix m = PolyMatrix::zeros(r, rows, cols);
  std::size_t k = 0;
  for (const char* e : entries) m.entries[k++] = P(r, e);
  return m;
}

TEST(IsZero, Examples) {
  auto r = qxy();
  std::vector<FreeModuleElement> id{FreeModuleElement::basis_vector(r, 2, 0), FreeModuleElement::basis_vector(r, 2, 1)};
  EXPECT_TRUE(is_zero(PresentedModule(r, 2, id)));
  EXPECT_FALSE(is_zero(cyclic(r, {"x"})));
  EXPECT_TRUE(is_zero(PresentedModule::zero(r)));
  EXPECT_TRUE(is_zero(cyclic(r, {"x + 1", "x"})));
}

TEST(Annihilator, Examples) {
  auto r = qxy();
  EXPECT_EQ(annihilator(cyclic(r, {"x*y"})), testing::ideal(r, {"x*y"}));
  EXPECT_TRUE(annihilator(PresentedModule::free(r, 1)).is_zero());
  Ideal expected = testing::intersect(testing::ideal(r, {"x"}), testing::ideal(r, {"y"}));
  Ideal ann = annihilator(direct_sum(cyclic(r, {"x"}), cyclic(r, {"y"})));
  EXPECT_TRUE(testing::same_ideal(ann, expected));
  EXPECT_EQ(ann, testing::ideal(r, {"x*y"}));
  EXPECT_TRUE(annihilator(PresentedModule::zero(r)).is_unit());
}

TEST(KrullDim, Examples) {
  auto r = qxy();
  EXPECT_EQ(krull_dim(PresentedModule::zero(r)), -1);
  EXPECT_EQ(krull_dim(cyclic(r, {"x", "y"})), 0);
  EXPECT_EQ(krull_dim(PresentedModule::free(qxyz(), 1)), 3);
  EXPECT_EQ(krull_dim(direct_sum(cyclic(r, {"x"}), cyclic(r, {"x", "y"}))), 1);
}

TEST(ColonByElement, Examples) {
  auto r = qxy();
  PresentedModule m = cyclic(r, {"x*y"});
  PresentedModule c = colon_by_element(m, P(r, "x"));
  EXPECT_FALSE(is_zero(c));
  EXPECT_EQ(annihilator(c), testing::ideal(r, {"x"}));
  EXPECT_EQ(c.ambient_rank(), 1u);
  EXPECT_TRUE(is_zero(colon_by_element(PresentedModule::free(r, 1), P(r, "x^2 + y"))));
  PresentedModule same = colon_by_element(m, Polynomial(r));
  EXPECT_EQ(annihilator(same), annihilator(m));
  EXPECT_EQ(krull_dim(same), krull_dim(m));
}

TEST(QuotientByIdeal, Examples) {
  auto r = qxy();
  PresentedModule q = quotient_by_ideal(cyclic(r, {"x"}), testing::ideal(r, {"y"}));
  EXPECT_EQ(annihilator(q), testing::ideal(r, {"x", "y"}));
  PresentedModule m = cyclic(r, {"x^2"});
  PresentedModule same = quotient_by_ideal(m, Ideal(r, {}));
  EXPECT_EQ(annihilator(same), annihilator(m));
  auto r3 = qxyz();
  PresentedModule k = quotient_by_ideal(PresentedModule::free(r3, 1), Ideal::maximal(r3));
  EXPECT_EQ(krull_dim(k), 0);
}

TEST(KernelOfMap, Examples) {
  auto r = qxy();
  PresentedModule m = cyclic(r, {"x^2"});
  PresentedModule k = kernel_of_map(ModuleMap::multiplication(m, P(r, "x")));
  EXPECT_EQ(annihilator(k), testing::ideal(r, {"x"}));
  EXPECT_FALSE(is_zero(k));
  EXPECT_TRUE(is_zero(kernel_of_map(ModuleMap::identity(m))));
  PresentedModule n = cyclic(r, {"y"});
  PresentedModule whole = kernel_of_map(ModuleMap::zero(m, n));
  EXPECT_EQ(annihilator(whole), annihilator(m));
}

TEST(KernelOfMap, IllDefinedMapIsContractError) {
  auto r = qxy();
  // R/(x) -> R, 1 -> 1 does not respect x = 0.
  ModuleMap f = ModuleMap::from_matrix(cyclic(r, {"x"}), PresentedModule::free(r, 1), matrix(r, 1, 1, {"1"}));
  EXPECT_FALSE(is_well_defined(f));
  EXPECT_THROW(kernel_of_map(f), ContractError);
}

TEST(HomologyAt, Examples) {
  auto r = qxy();
  PresentedModule R = PresentedModule::free(r, 1);
  PresentedModule zero = PresentedModule::zero(r);
  PresentedModule h = homology_at(ModuleMap::from_matrix(R, R, matrix(r, 1, 1, {"x"})), ModuleMap::zero(R, zero));
  EXPECT_EQ(annihilator(h), testing::ideal(r, {"x"}));

  h = homology_at(ModuleMap::from_matrix(R, R, matrix(r, 1, 1, {"1"})), ModuleMap::zero(R, zero));
  EXPECT_TRUE(is_zero(h));

  // Koszul on (x, y): 0 -> R -(-y, x)-> R^2 -(x y)-> R. Homology at the left end.
  PresentedModule R2 = PresentedModule::free(r, 2);
  ModuleMap d2 = ModuleMap::from_matrix(R, R2, matrix(r, 2, 1, {"-y", "x"}));
  ModuleMap d1 = ModuleMap::from_matrix(R2, R, matrix(r, 1, 2, {"x", "y"}));
  EXPECT_TRUE(is_zero(homology_at(ModuleMap::zero(zero, R), d2)));
  EXPECT_TRUE(is_zero(homology_at(d2, d1)));
}

TEST(HomologyAt, RejectsNonComplex) {
  auto r = qxy();
  PresentedModule R = PresentedModule::free(r, 1);
  ModuleMap a = ModuleMap::from_matrix(R, R, matrix(r, 1, 1, {"x"}));
  ModuleMap b = ModuleMap::from_matrix(R, R, matrix(r, 1, 1, {"y"}));
  EXPECT_THROW(homology_at(a, b), ContractError);
}

TEST(PresentedModule, RelationRankMismatchIsStructural) {
  auto r = qxy();
  std::vector<FreeModuleElement> rels{FreeModuleElement{polys(r, {"x"})}};
  EXPECT_THROW(PresentedModule(r, 2, rels), StructuralError);
}

TEST(PresentedModule, PrintsRowsAsAmbientBasis) {
  auto r = qxy();
  std::vector<FreeModuleElement> rels{FreeModuleElement{polys(r, {"x", "y"})}};
  EXPECT_EQ(PresentedModule(r, 2, rels).to_string(), "coker [[x], [y]]");
}

class ModuleProperties : public ::testing::TestWithParam<int> {};

TEST_P(ModuleProperties, RandomMonomialInstances) {
  const int p = GetParam();
  CoefField field = p == 0 ? CoefField::rationals() : CoefField::prime(static_cast<std::uint64_t>(p));
  auto r = make_ring(field, {"x", "y", "z"});
  std::mt19937_64 rng(77 + static_cast<std::uint64_t>(p));
  for (int trial = 0; trial < 30; ++trial) {
    Ideal j1(r, testing::random_monomials(r, rng, 1, 3, 3));
    Ideal j2(r, testing::random_monomials(r, rng, 1, 3, 3));
    PresentedModule m = trial % 2 ? direct_sum(PresentedModule::quotient_ring(j1), PresentedModule::quotient_ring(j2))
                                  : PresentedModule::quotient_ring(j1);
    Polynomial a = testing::random_polynomial(r, rng, 2, 2);
    PresentedModule c = colon_by_element(m, a);
    ASSERT_LE(krull_dim(c), krull_dim(m));

    Ideal j(r, testing::random_monomials(r, rng, 1, 2, 2));
    PresentedModule q = quotient_by_ideal(m, j);
    // M/JM = 0 iff every e_i lies in relations + J e_i.
    bool all_in = true;
    const Ideal ann = annihilator(m);
    const Ideal ann_q = annihilator(q);
    for (const auto& g : ann.generators()) ASSERT_TRUE(ann_q.contains(g));
    for (std::size_t i = 0; i < m.ambient_rank(); ++i) {
      std::vector<Polynomial> gens = j.generators();
      for (const auto& rel : m.relations()) gens.push_back(rel.components[i]);
      all_in = all_in && Ideal(r, gens).is_unit();
    }
    ASSERT_EQ(is_zero(q), all_in);

    // Ann(M) e_i lies in the relations.
    for (const auto& g : ann.generators())
      for (std::size_t i = 0; i < m.ambient_rank(); ++i) {
        FreeModuleElement v = FreeModuleElement::zero(r, m.ambient_rank());
        v.components[i] = g;
        auto gb = buchberger(r, m.ambient_rank(), m.relations());
        ASSERT_TRUE(normal_form(v, gb).is_zero());
      }

    // Krull dimension read from leading terms agrees with dim R/Ann(M).
    ASSERT_EQ(krull_dim(m), ann.dim());
    ASSERT_EQ(krull_dim(c), annihilator(c).dim());

    // Serre classes are closed under the constructions applied here.
    for (auto s : {SerreClass::zero(), SerreClass::dim_le(0), SerreClass::dim_le(1)}) {
      if (membership(m, s)) {
        ASSERT_TRUE(membership(q, s));
        ASSERT_TRUE(membership(c, s));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(QQandFF, ModuleProperties, ::testing::Values(0, 2));

}  // namespace
}  // namespace sdepth
