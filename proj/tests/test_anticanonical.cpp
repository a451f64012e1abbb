#include <gtest/gtest.h>

#include <random>

#include "acx/anticanonical.hpp"
#include "property_suites.hpp"
#include "sample_varieties.hpp"

using namespace acx;

namespace {

RatVec rv(std::initializer_list<Rat> xs) {
  RatVec v(xs);
  for (auto& x : v) x.canonicalize();
  return v;
}

const AnticanComplex& threefold_complex() {
  static const AnticanComplex ac = build_complex(samples::threefold_with_fan());
  return ac;
}

}  // namespace

TEST(Trop, LeavesAndClassification) {
  GavData d = samples::threefold_with_fan();
  TropStructure t = make_trop(d.c, d.r, d.s);
  EXPECT_EQ(t.leaves.size(), 10u);
  EXPECT_EQ(t.maximal_leaves().size(), 6u);
  Fan f = model_fan(d);
  auto k = classify_cone(t, Cone::from_generators(4, {d.column(2), d.column(3)}));
  EXPECT_FALSE(k.big);
  EXPECT_EQ(k.leaf, (std::vector<int>{1, 2}));
  EXPECT_EQ(classify_cone(t, Cone::from_generators(4, {d.column(2)})).leaf, std::vector<int>{1});
  EXPECT_TRUE(classify_cone(t, Cone::from_generators(4, {d.column(0), d.column(2), d.column(3), d.column(4)})).big);
  // three of the four 1-leaves: neither big nor a leaf cone
  EXPECT_THROW(classify_cone(t, Cone::from_generators(4, {d.column(2), d.column(3), d.column(4)})), InvalidDataError);
}

TEST(PElementary, ThreefoldNumbers) {
  const auto& pe = threefold_complex().pelem;
  ASSERT_EQ(pe.size(), 2u);
  EXPECT_EQ(pe[0].columns, (std::vector<std::size_t>{0, 2, 3, 4}));
  EXPECT_EQ(pe[0].ell, 20);
  EXPECT_EQ(pe[0].v_sigma, (IntVec{0, 0, 0, 4}));
  EXPECT_EQ(pe[0].c_sigma, 4);
  EXPECT_EQ(*pe[0].v_prime, rv({0, 0, 0, Rat(1, 5)}));
  EXPECT_EQ(discrepancy(pe[0]), 4);
  EXPECT_EQ(pe[1].ell, 24);
  EXPECT_EQ(pe[1].v_sigma, (IntVec{0, 0, 0, -8}));
  EXPECT_EQ(*pe[1].v_prime, rv({0, 0, 0, Rat(-1, 3)}));
  EXPECT_EQ(discrepancy(pe[1]), 2);
}

TEST(PElementary, UnboundedNumbers) {
  GavData d = samples::unbounded();
  auto pe = p_elementary_cones(d, model_fan(d));
  ASSERT_EQ(pe.size(), 1u);
  EXPECT_EQ(pe[0].ell, -8);
  EXPECT_EQ(pe[0].v_sigma, (IntVec{0, 0, 40}));
  EXPECT_EQ(pe[0].rho, (IntVec{0, 0, 1}));
  EXPECT_EQ(*pe[0].v_prime, rv({0, 0, -5}));
  EXPECT_FALSE(pe[0].inside());
  EXPECT_EQ(pe[0].c_sigma, 40);
  EXPECT_EQ(discrepancy(pe[0]), make_rat(-6, 5));
  auto rays = weakly_tropical_rays(model_fan(d), pe);
  EXPECT_EQ(rays.size(), 4u);
  EXPECT_EQ(rays.back(), (IntVec{0, 0, 1}));
}

TEST(PElementary, ToricAllExponentsOne) {
  GavData d = samples::projective_plane();
  auto pe = p_elementary_cones(d, model_fan(d));
  ASSERT_FALSE(pe.empty());
  for (const auto& p : pe) EXPECT_EQ(p.ell, d.r + 1);
}

TEST(Complex, ThreefoldCellsAndVertices) {
  const auto& ac = threefold_complex();
  EXPECT_EQ(ac.cells.size(), 15u);
  EXPECT_TRUE(ac.bounded);
  EXPECT_EQ(ac.vertices, expected_vertices(ac));
  EXPECT_EQ(ac.vertices.size(), 8u);
  for (const auto& c : ac.cells) {
    // every form re-verifies its system
    for (std::size_t i = 0; i < c.system.rows.size(); ++i) EXPECT_EQ(dot(c.form, c.system.rows[i]), c.system.rhs[i]);
    EXPECT_TRUE(c.poly.contains(RatVec(4, Rat(0))));
  }
  EXPECT_EQ(gorenstein_index(ac), 1);
}

TEST(Complex, ThreefoldLatticePoints) {
  const auto& ac = threefold_complex();
  auto pts = complex_lattice_points(ac);
  std::vector<IntVec> expect{{0, 0, 0, 0}, {0, 0, 1, 0},   {1, 1, 0, 1},   {1, 0, 2, 1},   {0, 1, 2, 1},
                             {0, -1, -1, -1}, {-1, 0, -1, -1}, {-1, -1, 0, -1}, {-1, -1, 1, -1}};
  for (const auto& r : ac.fan_rays()) expect.push_back(r);
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(pts, expect);

  // same set when collected leaf by leaf
  std::set<IntVec> by_leaf;
  for (const Leaf* l : ac.trop.maximal_leaves())
    for (const auto& c : ac.cells)
      if (c.cell.leaf == l->I)
        for (auto& x : lattice_points(c.poly)) by_leaf.insert(x);
  EXPECT_EQ(std::vector<IntVec>(by_leaf.begin(), by_leaf.end()), pts);
}

TEST(Complex, ThreefoldIsCanonical) {
  const auto& ac = threefold_complex();
  auto v = singularity_type(ac);
  EXPECT_EQ(v.kind, Singularity::Canonical);
  ASSERT_TRUE(v.witness_point);
  EXPECT_TRUE(verify_witness(ac, v));
  EXPECT_TRUE(is_piecewise_convex(ac));
  // a false Terminal claim does not verify
  EXPECT_FALSE(verify_witness(ac, SingularityVerdict{Singularity::Terminal, {}, {}}));
}

TEST(Complex, CellFormExample) {
  const auto& ac = threefold_complex();
  GavData d = samples::threefold();
  bool found = false;
  for (const auto& c : ac.cells) {
    std::vector<IntVec> want{d.column(0), d.column(2), IntVec{0, 0, 0, 1}};
    std::sort(want.begin(), want.end());
    if (c.cell.cone.rays() != want) continue;
    found = true;
    EXPECT_EQ(dot(c.form, d.column(0)), -1);
    EXPECT_EQ(dot(c.form, d.column(2)), -1);
    EXPECT_EQ(dot(c.form, IntVec{0, 0, 0, 4}), -20);
  }
  EXPECT_TRUE(found);
}

TEST(Complex, UnboundedExample) {
  GavData d = samples::unbounded();
  AnticanComplex ac = build_complex(d);
  EXPECT_EQ(ac.cells.size(), 3u);
  EXPECT_FALSE(ac.bounded);
  auto v = singularity_type(ac);
  EXPECT_EQ(v.kind, Singularity::NotLogTerminal);
  EXPECT_EQ(*v.witness_ray, (IntVec{0, 0, 1}));
  EXPECT_TRUE(verify_witness(ac, v));
  EXPECT_THROW(complex_lattice_points(ac), PolyhedralError);
  EXPECT_THROW(is_piecewise_convex(ac), PreconditionError);
}

TEST(Complex, ToricSurfaces) {
  AnticanComplex p2 = build_complex(samples::projective_plane());
  EXPECT_EQ(singularity_type(p2).kind, Singularity::Terminal);
  EXPECT_TRUE(is_piecewise_convex(p2));
  AnticanComplex f3 = build_complex(samples::hirzebruch3());
  EXPECT_EQ(singularity_type(f3).kind, Singularity::Terminal);
  EXPECT_FALSE(is_piecewise_convex(f3));
  // r = c: each full-dimensional cell has a unique form
  for (const auto& c : f3.cells) {
    if (c.cell.cone.dimension() != 2) continue;
    auto sol = solve_rational(to_rational(IntMatrix::from_rows(c.system.rows, 2)),
                              RatVec(c.system.rhs.begin(), c.system.rhs.end()));
    ASSERT_TRUE(sol);
    EXPECT_TRUE(sol->kernel.empty());
  }
}

TEST(Complex, InconsistentCellHasNoForm) {
  // three rays of the plane forced to -1 with a non-affine configuration
  FormSystem sys{{{1, 0}, {0, 1}, {1, 1}}, {-1, -1, -1}};
  EXPECT_FALSE(solve_form(sys, 2));
}

TEST(Bounds, Thm3AgreesWithDiscrepancySign) {
  auto res = props::thm3_suite();
  EXPECT_TRUE(res.ok()) << res.failure;
}

TEST(Bounds, ThreefoldAndUnbounded) {
  EXPECT_TRUE(thm3_check({1, 2, 2, 4}, 4, 3, 2, SingularityBound::Canonical));
  EXPECT_FALSE(thm3_check({3, 4, 4}, 8, 2, 1, SingularityBound::LogTerminal));
}

TEST(Tuples, ComplexityTwoFamilies) {
  auto groups = platonic_tuples(2);
  EXPECT_EQ(groups.size(), 7u);
  EXPECT_TRUE(tuple_accepted(groups, {2, 3, 7, 41}));
  EXPECT_FALSE(tuple_accepted(groups, {2, 3, 7, 42}));
  EXPECT_TRUE(tuple_accepted(groups, {1, 100, 200, 300}));
  EXPECT_TRUE(tuple_accepted(groups, {3, 4, 4, 5}));
  EXPECT_FALSE(tuple_accepted(groups, {3, 4, 4, 6}));
  // families agree with the defining inequality on a box
  for (int a = 1; a <= 12; ++a)
    for (int b = a; b <= 12; ++b)
      for (int c = b; c <= 30; ++c)
        for (int e = c; e <= 60; ++e) ASSERT_EQ(tuple_accepted(groups, {a, b, c, e}), tuple_condition({a, b, c, e}));
}

TEST(Tuples, ComplexityOneIsPlatonic) {
  auto groups = platonic_tuples(1);
  std::vector<std::string> got;
  for (const auto& g : groups)
    for (const auto& f : g.families) got.push_back(f.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"(1,x,y)", "(2,2,x)", "(2,3,<=5)"}));
}
