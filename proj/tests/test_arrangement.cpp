#include <gtest/gtest.h>

#include <random>

#include "acx/arrangement.hpp"
#include "property_suites.hpp"
#include "sample_varieties.hpp"

using namespace acx;

TEST(Validate, ThreefoldIsValid) { EXPECT_TRUE(validate(samples::threefold()).empty()); }

TEST(Validate, DependentColumnsOfA) {
  GavData d = samples::threefold();
  d.A(0, 3) = 0;
  d.A(1, 3) = 1;  // column 3 equals column 1
  auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].condition, "A not in general position");
  EXPECT_NE(v[0].witness.find("dependent"), std::string::npos);
}

TEST(Validate, NonPrimitiveColumn) {
  GavData d = samples::threefold();
  d.m = 1;
  IntMatrix P(4, 6);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) P(i, j) = d.P(i, j);
  P(3, 5) = 2;
  d.P = P;
  auto v = validate(d);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, "column not primitive");
}

TEST(Validate, BrokenBlockPattern) {
  GavData d = samples::threefold();
  d.P(0, 4) = 1;
  auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].condition, "block pattern of P");
}

TEST(Relations, ThreefoldQuadric) {
  GavData d = samples::threefold();
  auto rels = relations(d);
  ASSERT_EQ(rels.size(), 1u);
  ASSERT_EQ(rels[0].terms.size(), 4u);
  for (const auto& t : rels[0].terms) EXPECT_EQ(t.coeff, 1);
  EXPECT_EQ(format_relation(d, rels[0]), "T01*T02^2 + T11^2 + T21^2 + T31^4");
  EXPECT_TRUE(relations(samples::projective_plane()).empty());
}

TEST(Relations, RandomTrinomialsHomogeneous) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> ex(1, 4), coef(-3, 3);
  int done = 0;
  while (done < 50) {
    GavData d;
    d.c = 1;
    d.r = 2;
    d.s = 1;
    d.n = {1, 1, 1};
    d.m = 0;
    d.l = {{ex(rng)}, {ex(rng)}, {ex(rng)}};
    d.A = RatMatrix{{coef(rng), coef(rng), coef(rng)}, {coef(rng), coef(rng), coef(rng)}};
    d.P = IntMatrix{{-d.l[0][0], d.l[1][0], 0}, {-d.l[0][0], 0, d.l[2][0]}, {coef(rng), coef(rng), coef(rng)}};
    if (!validate(d).empty()) continue;
    auto g = degrees(d);  // throws if some term has a different degree
    ASSERT_EQ(g.relation_degrees.size(), 1u);
    ASSERT_EQ(relations(d)[0].terms.size(), 3u);
    ++done;
  }
}

TEST(Degrees, ThreefoldGroupAndAnticanonical) {
  GavData d = samples::threefold();
  auto g = degrees(d);
  EXPECT_EQ(g.Q.codomain, (AbelianGroup{1, {2, 2}}));
  std::vector<Int> free;
  for (const auto& w : g.generator_degrees) free.push_back(w.free[0]);
  EXPECT_EQ(free, (std::vector<Int>{2, 1, 2, 2, 1}));
  ClassElem k = anticanonical_class(d);
  EXPECT_EQ(k.free, IntVec{4});
  EXPECT_EQ(k.torsion, (IntVec{0, 0}));
}

TEST(Degrees, ToricHasFreeClassGroup) {
  auto g = degrees(samples::projective_plane());
  EXPECT_EQ(g.Q.codomain, (AbelianGroup{1, {}}));
  EXPECT_EQ(anticanonical_class(samples::projective_plane()).free, IntVec{3});
}

TEST(XbarFaces, RuleMatchesOracleOnExamples) {
  for (const auto& d : {samples::threefold(), samples::unbounded(), samples::projective_plane(), samples::hirzebruch3()}) {
    auto faces = xbar_faces(d);  // throws on any disagreement
    EXPECT_FALSE(faces.empty());
  }
  GavData d = samples::threefold();
  // full orthant
  EXPECT_TRUE(is_xbar_face(d, FaceIndex::from_complement({}, 5)));
  // one variable missing in each of blocks 1,2,3
  FaceIndex f = FaceIndex::from_complement({2, 3, 4}, 5);
  EXPECT_FALSE(is_xbar_face(d, f));
  EXPECT_FALSE(is_xbar_face_oracle(d, f));
  // every block has a zero variable: all monomials vanish
  FaceIndex g = FaceIndex::from_complement({0, 2, 3, 4}, 5);
  EXPECT_TRUE(is_xbar_face(d, g));
  EXPECT_TRUE(is_xbar_face_oracle(d, g));
}

TEST(XbarFaces, RuleMatchesOracleOnRandomArrangements) {
  auto res = props::xbar_face_suite();
  EXPECT_TRUE(res.ok()) << res.failure;
}

TEST(Model, ThreefoldFanFromAnticanonical) {
  GavData d = samples::threefold();
  Fan f = fan_from_ample(d, anticanonical_class(d));
  EXPECT_EQ(f.maximal, fan_with_cones(d, *samples::threefold_with_fan().sigma_max).maximal);
  EXPECT_FALSE(f.check());
}

TEST(Model, ClassOutsideEffectiveCone) {
  GavData d = samples::threefold();
  ClassElem u{{-1}, {0, 0}};
  EXPECT_THROW(fan_from_ample(d, u), PreconditionError);
}

TEST(Model, ThreefoldInvariants) {
  GavData d = samples::threefold_with_fan();
  EXPECT_TRUE(is_q_factorial(d));
  EXPECT_TRUE(is_fano(d));
  EXPECT_EQ(picard_number(d), 1);
  EXPECT_EQ(fano_index(d), 4);
  EXPECT_EQ(gorenstein_index(d, model_fan(d)), Int(1));
  auto dc = divisor_cones(d);
  EXPECT_TRUE(dc.eff.contains(dc.semiample));
  EXPECT_TRUE(dc.is_ample(anticanonical_class(d)));
}

TEST(Model, ToricFanoAndNonFano) {
  EXPECT_TRUE(is_fano(samples::projective_plane()));
  EXPECT_EQ(fano_index(samples::projective_plane()), 3);
  GavData f3 = samples::hirzebruch3();
  EXPECT_TRUE(is_q_factorial(f3));
  EXPECT_EQ(picard_number(f3), 2);
  EXPECT_FALSE(is_fano(f3));
  EXPECT_THROW(fano_index(f3), PreconditionError);
}

TEST(GradedComponents, ThreefoldDegrees) {
  GavData d = samples::threefold();
  auto g = degrees(d);
  // constants
  EXPECT_EQ(graded_component_dim(d, zero_class(g.Q.codomain)), Int(1));
  // w_02 has free degree 1 and is attained only by T02
  EXPECT_EQ(graded_component_dim(d, g.generator_degrees[1]), Int(1));
  // the relation kills one monomial in degree deg g
  auto total = monomial_count(g.Q, g.relation_degrees[0]);
  ASSERT_TRUE(total);
  EXPECT_EQ(graded_component_dim(d, g.relation_degrees[0]), *total - 1);
}
