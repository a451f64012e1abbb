#include <gtest/gtest.h>

#include "acx/quadrics.hpp"
#include "quadric_table.hpp"
#include "sample_varieties.hpp"

using namespace acx;

namespace {

const QuadricClassification& full_run() {
  static const QuadricClassification q = classify_quadrics();
  return q;
}

std::vector<std::pair<Int, Int>> survivors(QuadricTemplate t) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& r : full_run().accepted)
    if (r.candidate.tmpl == t) out.emplace_back(r.candidate.x, r.candidate.y);
  return out;
}

}  // namespace

TEST(Bounds, DerivedRanges) {
  auto ia = derive_bounds(QuadricTemplate::Ia);
  EXPECT_EQ(ia.x_lo, -2);
  EXPECT_EQ(ia.x_hi, -1);
  auto ib = derive_bounds(QuadricTemplate::Ib);
  EXPECT_EQ(std::make_pair(ib.x_lo, ib.x_hi), std::make_pair(Int(-1), Int(0)));
  EXPECT_EQ(std::make_pair(ib.y_lo, ib.y_hi), std::make_pair(Int(-3), Int(-2)));
  auto iia = derive_bounds(QuadricTemplate::IIa);
  EXPECT_EQ(std::make_pair(iia.x_lo, iia.x_hi), std::make_pair(Int(-7), Int(1)));
  auto iib = derive_bounds(QuadricTemplate::IIb);
  EXPECT_EQ(std::make_pair(iib.x_lo, iib.x_hi), std::make_pair(Int(-4), Int(1)));
  EXPECT_EQ(std::make_pair(iib.y_lo, iib.y_hi), std::make_pair(Int(-1), Int(0)));
  auto iii = derive_bounds(QuadricTemplate::III);
  EXPECT_EQ(std::make_pair(iii.x_lo, iii.x_hi), std::make_pair(Int(-4), Int(1)));
  EXPECT_EQ(std::make_pair(iii.y_lo, iii.y_hi), std::make_pair(Int(-4), Int(1)));
  // the lineality point of (II)(b) is (2x+3)/5
  EXPECT_EQ(iib.constraints[0].t.slope, make_rat(2, 5));
  EXPECT_EQ(iib.constraints[0].t.offset, make_rat(3, 5));
}

TEST(Bounds, IntegerRangeStrictness) {
  BoundConstraint c{"t", false, AffineParam{make_rat(1, 2), make_rat(3, 2)}, 0, 1, true, false};
  EXPECT_EQ(c.integer_range(), std::make_pair(Int(-2), Int(-1)));
  c.lo_strict = false;
  EXPECT_EQ(c.integer_range(), std::make_pair(Int(-3), Int(-1)));
  BoundConstraint neg{"t", false, AffineParam{-1, 0}, -1, 2, false, true};
  EXPECT_EQ(neg.integer_range(), std::make_pair(Int(-1), Int(1)));
}

TEST(Pipeline, SurvivorsPerCase) {
  EXPECT_EQ(survivors(QuadricTemplate::Ia), (std::vector<std::pair<Int, Int>>{{-1, 0}}));
  EXPECT_EQ(survivors(QuadricTemplate::Ib).size(), 4u);
  EXPECT_EQ(survivors(QuadricTemplate::IIa), (std::vector<std::pair<Int, Int>>{{-3, 0}}));
  EXPECT_EQ(survivors(QuadricTemplate::IIb).size(), 3u);
  EXPECT_EQ(survivors(QuadricTemplate::III).size(), 1u);
}

TEST(Pipeline, EveryAcceptedCandidateRechecks) {
  for (const auto& r : full_run().accepted) {
    const GavData& d = r.candidate.data;
    EXPECT_TRUE(validate(d).empty());
    Fan fan = fan_from_ample(d, anticanonical_class(d));
    EXPECT_TRUE(is_q_factorial(d, fan));
    EXPECT_TRUE(is_fano(d, fan));
    EXPECT_EQ(singularity_type(build_complex(d, fan)).kind, *r.verdict);
  }
}

TEST(Dedupe, IsomorphicRingsMerged) {
  GavData a = quadric_template(QuadricTemplate::Ib, -1, -3);
  GavData b = quadric_template(QuadricTemplate::Ib, 0, -2);
  auto U = explicit_equivalence(a, b);
  ASSERT_TRUE(U);
  EXPECT_EQ(abs(determinant(*U)), 1);
  EXPECT_FALSE(explicit_equivalence(a, quadric_template(QuadricTemplate::Ib, -1, -2)));
}

TEST(Dedupe, DuplicateCandidateMerged) {
  auto r = run_pipeline(QuadricCandidate{QuadricTemplate::Ia, -1, 0, quadric_template(QuadricTemplate::Ia, -1)});
  ASSERT_TRUE(r.accepted);
  auto dd = dedupe({r, r});
  EXPECT_EQ(dd.classes.size(), 1u);
  EXPECT_TRUE(dd.unresolved.empty());
}

TEST(Classification, NineClasses) {
  const auto& q = full_run();
  EXPECT_EQ(q.dedup.classes.size(), 9u);
  EXPECT_TRUE(q.dedup.unresolved.empty());
  EXPECT_TRUE(q.no_terminal);
  EXPECT_TRUE(q.picard.within_3);
  EXPECT_TRUE(q.picard.within_3_plus_m);
  EXPECT_TRUE(q.picard.within_5);
  EXPECT_EQ(q.picard.max_picard, 3);
}

TEST(Classification, MatchesTableRows) {
  const auto& q = full_run();
  auto m = table::row_matches(q);
  std::vector<int> matched(table::rows().size() + 1, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(m[i].size(), 1u) << q.accepted[q.dedup.classes[i].representative].candidate.label();
    for (int no : m[i]) ++matched[static_cast<std::size_t>(no)];
  }
  for (std::size_t no = 1; no < matched.size(); ++no) EXPECT_EQ(matched[no], 1) << "row " << no;
  EXPECT_TRUE(table::matches_table_bijectively(q));
}

TEST(Classification, EffectiveConesOfRowsSixAndSeven) {
  const auto& q = full_run();
  int smooth = 0, singular = 0;
  for (const auto& c : q.dedup.classes) {
    const auto& inv = *q.accepted[c.representative].invariants;
    if (inv.picard != 2 || inv.fano_index != 1) continue;
    (inv.eff_smooth ? smooth : singular)++;
  }
  EXPECT_EQ(smooth, 1);
  EXPECT_EQ(singular, 1);
}

TEST(Classification, ManualArgumentFlags) {
  // the one-dimensional component criterion fails for rows 2, 3 and 6
  const auto& q = full_run();
  int flagged = 0;
  for (const auto& c : q.dedup.classes) flagged += q.accepted[c.representative].needs_manual_argument;
  EXPECT_EQ(flagged, 3);
}

TEST(NoTerminal, MidpointWitness) {
  for (const auto& r : full_run().accepted) {
    auto pts = complex_lattice_points(*r.complex);
    IntVec mid{0, 1, 1, 1};  // midpoint of v21 = (0,2,0,1) and v31 = (0,0,2,1)
    EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), mid));
    auto rays = r.complex->fan_rays();
    EXPECT_EQ(std::find(rays.begin(), rays.end(), mid), rays.end());
  }
}

TEST(NoTerminal, SmoothToricControl) {
  AnticanComplex ac = build_complex(samples::projective_plane());
  EXPECT_EQ(singularity_type(ac).kind, Singularity::Terminal);
}

TEST(PicardBound, RhoFourControlRejected) {
  GavData d = picard_four_control();
  ASSERT_TRUE(validate(d).empty()) << describe(validate(d));
  EXPECT_EQ(degrees(d).Q.codomain.free_rank, 4u);
  auto r = run_pipeline(QuadricCandidate{QuadricTemplate::III, 0, 0, d});
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.reason, "not Q-factorial");
}
