#include <gtest/gtest.h>

#include "affhecke/blocks.hpp"
#include "affhecke/error.hpp"
#include "affhecke/extquiver.hpp"
#include "oracles.hpp"

using namespace affhecke;

namespace {

std::set<HyperplaneForm> walls(std::initializer_list<HyperplaneForm> f) { return {f}; }

// Solutions (root j, k) of mu = lambda - (<lambda + rho, alpha_j^vee> + d k) alpha_j, by substitution.
std::vector<std::pair<int, Int>> substitution_solutions(const AffineWeylGroup& g, const Weight& l, const Weight& m,
                                                        Int d) {
  std::vector<std::pair<int, Int>> out;
  const auto& rs = g.roots();
  for (int j = 0; j < rs.num_positive_roots(); ++j)
    for (Int k = -40; k <= 40; ++k) {
      const Int c = rs.pair_coroot(l, j) + rs.rho_pair_coroot(j) + d * k;
      if (l - c * rs.root(j) == m) out.emplace_back(j, k);
    }
  return out;
}

}  // namespace

TEST(HeckeQuiverA1, Edges) {
  auto g = AffineWeylGroup::create("A1");
  HeckeQuiver q = hecke_quiver(*g, GeneratorSet(), {3, 3});
  const AffineElement e = g->identity(), s = g->generator(1), tm = g->translation(Weight{-1});
  auto ie = q.index_of(e), is = q.index_of(s), it = q.index_of(tm);
  ASSERT_TRUE(ie && is && it);
  const QuiverEdge* a = q.find_edge(*ie, *is);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->walls, walls({HyperplaneForm::make(Weight{1}, 0)}));
  const QuiverEdge* b = q.find_edge(*is, *it);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->walls, walls({HyperplaneForm::make(Weight{1}, -1)}));
  EXPECT_EQ(b->walls.begin()->str(), "coroot(1) + 1 hbar");
  EXPECT_EQ(q.find_edge(*is, *ie), nullptr);
}

TEST(QuantumA1, Classification) {
  auto g = AffineWeylGroup::create("A1");
  QuantumWall b = quantum_wall_classify(*g, Weight{-1}, Weight{0}, 3);
  EXPECT_EQ(b.kind, QuantumWall::Case::B);
  EXPECT_EQ(b.root, 0);
  EXPECT_EQ(b.k, 0);
  EXPECT_EQ(*b.wall, HyperplaneForm::make(Weight{1}, 0));
  QuantumWall a = quantum_wall_classify(*g, Weight{0}, Weight{-3}, 3);
  EXPECT_EQ(a.kind, QuantumWall::Case::A);
  EXPECT_EQ(*a.wall, HyperplaneForm::hbar(1));
  EXPECT_EQ(quantum_wall_classify(*g, Weight{0}, Weight{1}, 3).kind, QuantumWall::Case::None);
}

TEST(QuantumA1, QuiverEdges) {
  auto g = AffineWeylGroup::create("A1");
  QuantumQuiver q = quantum_quiver(*g, 3, Weight{-1}, {0, 4});
  auto a = q.index_of(Weight{-1}), b = q.index_of(Weight{0}), c = q.index_of(Weight{2});
  ASSERT_TRUE(a && b && c);
  ASSERT_NE(q.find_edge(*a, *b), nullptr);
  EXPECT_EQ(q.find_edge(*a, *b)->walls, walls({HyperplaneForm::make(Weight{1}, 0)}));
  ASSERT_NE(q.find_edge(*b, *c), nullptr);
  EXPECT_EQ(q.find_edge(*b, *c)->walls, walls({HyperplaneForm::make(Weight{1}, -1)}));
  // Vertices lie in one dot orbit.
  auto orbit = oracle::orbit_in_box(*g, 3, Weight{-1}, 4);
  EXPECT_EQ(std::set<Weight>(q.vertices.begin(), q.vertices.end()), orbit);
}

TEST(DictionaryA1, Values) {
  auto g = AffineWeylGroup::create("A1");
  Dictionary phi(*g, 3, Weight{-1}, GeneratorSet());
  EXPECT_EQ(phi(g->identity()), Weight{-1});
  EXPECT_EQ(phi(g->generator(1)), Weight{0});
  EXPECT_EQ(phi(g->translation(Weight{-1})), Weight{2});
  try {
    std::vector<int> j0{0};
    Dictionary bad(*g, 3, Weight{-1}, GeneratorSet::from_list(j0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StabilizerMismatch);
  }
}

TEST(DictionaryA1, IndependentOfRepresentative) {
  auto g = AffineWeylGroup::create("A1");
  std::vector<int> j0{0};
  GeneratorSet J = GeneratorSet::from_list(j0);
  Dictionary phi(*g, 3, Weight{-2}, J);
  for (const auto& x : oracle::stab_window(*g, 5, 3))
    for (const auto& u : parabolic_elements(*g, J)) EXPECT_EQ(phi(g->multiply(u, x)), phi(x));
}

TEST(Compare, A1Regular) {
  auto g = AffineWeylGroup::create("A1");
  EquivalenceRun run;
  run.d = 3;
  run.weight = Weight{0};
  run.window = {4, 4};
  EquivalenceResult r = verify_equivalence(*g, run);
  EXPECT_EQ(r.report.verdict, Verdict::Pass);
  EXPECT_GT(r.report.common_vertices, 0u);
  EXPECT_EQ(r.report.matched_edges, r.report.hecke_edges);
  EXPECT_EQ(r.report.matched_edges, r.report.quantum_edges);
}

TEST(Compare, EmptyWindowPassesVacuously) {
  auto g = AffineWeylGroup::create("A1");
  HeckeQuiver hq;
  QuantumQuiver qq;
  qq.d = 3;
  qq.lambda0 = Weight{-1};
  Dictionary phi(*g, 3, Weight{-1}, GeneratorSet());
  CompareReport r = compare(*g, hq, qq, phi);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(r.common_vertices, 0u);
}

TEST(Compare, PassesOnSeveralBlocks) {
  struct Case {
    const char* label;
    Int d;
    Weight weight;
    QuiverWindow window;
  };
  const std::vector<Case> cases = {{"A1", 5, Weight{0}, {6, 4}},
                                   {"A1", 3, Weight{-2}, {6, 4}},
                                   {"A2", 5, Weight{0, 0}, {4, 1}},
                                   {"A2", 5, Weight{0, 1}, {4, 1}},
                                   {"B2", 7, Weight{0, 0}, {4, 1}}};
  for (const auto& c : cases) {
    auto g = AffineWeylGroup::create(c.label);
    EquivalenceRun run;
    run.d = c.d;
    run.weight = c.weight;
    run.window = c.window;
    EquivalenceResult r = verify_equivalence(*g, run);
    EXPECT_EQ(r.report.verdict, Verdict::Pass) << c.label << " d=" << c.d << ' ' << c.weight.str();
    for (const auto& e : r.hecke.edges) EXPECT_EQ(e.walls.size(), 1u);
  }
}

TEST(Compare, FaultsAreDetected) {
  auto g = AffineWeylGroup::create("A1");
  for (Fault f : {Fault::WallShift, Fault::DropEdge, Fault::DictTwist}) {
    EquivalenceRun run;
    run.d = 3;
    run.weight = Weight{0};
    run.window = {4, 4};
    run.fault = f;
    EquivalenceResult r = verify_equivalence(*g, run);
    EXPECT_EQ(r.report.verdict, Verdict::Fail) << to_string(f);
    EXPECT_FALSE(r.report.witnesses.empty());
    EXPECT_FALSE(r.fault_note.empty());
  }
  EXPECT_EQ(parse_fault("wall-shift"), Fault::WallShift);
  EXPECT_EQ(parse_fault("none"), Fault::None);
  EXPECT_THROW(parse_fault("bogus"), Error);
}

TEST(QuantumProperties, ClassifierMatchesSubstitution) {
  const std::vector<std::pair<std::string, Int>> cases = {{"A1", 6}, {"A2", 3}};
  for (const auto& [label, box] : cases) {
    auto g = AffineWeylGroup::create(label);
    auto weights = oracle::box_weights(g->rank(), box);
    for (Int d : {3, 5, 7})
      for (const auto& l : weights)
        for (const auto& m : weights) {
          if (l == m) continue;
          auto sols = substitution_solutions(*g, l, m, d);
          ASSERT_LE(sols.size(), 1u);
          QuantumWall q = quantum_wall_classify(*g, l, m, d);
          EXPECT_EQ(q.kind == QuantumWall::Case::B, sols.size() == 1) << label << ' ' << l.str() << ' ' << m.str();
          if (sols.size() == 1) {
            EXPECT_EQ(q.root, sols[0].first);
            EXPECT_EQ(q.k, sols[0].second);
            EXPECT_EQ(*q.wall, g->wall({sols[0].first, sols[0].second}));
          }
        }
  }
}

TEST(QuantumProperties, EdgesPointUpAlongARoot) {
  for (const char* label : {"A2", "B2"}) {
    auto g = AffineWeylGroup::create(label);
    const Int d = 7;
    QuantumQuiver q = quantum_quiver(*g, d, locate_block(*g, d, g->roots().zero()).fundamental, {0, 3});
    for (const auto& e : q.edges) {
      Weight diff = q.vertices[e.dst] - q.vertices[e.src];
      bool along_root = false;
      for (const Weight& a : g->roots().positive_roots())
        for (Int k = 1; k <= 20 && !along_root; ++k) along_root = diff == k * a;
      EXPECT_TRUE(along_root) << label;
    }
  }
}

TEST(QuantumProperties, DictionaryReflectsOrder) {
  auto g = AffineWeylGroup::create("A2");
  EquivalenceRun run;
  run.d = 5;
  run.weight = Weight{0, 0};
  run.window = {4, 1};
  EquivalenceResult r = verify_equivalence(*g, run);
  Dictionary phi(*g, run.d, r.block.fundamental, r.block.J);
  for (const auto& e : r.hecke.edges) {
    Weight a = phi(r.hecke.vertices[e.src]), b = phi(r.hecke.vertices[e.dst]);
    EXPECT_TRUE(a != b && dominance_leq(a, b));
  }
}
