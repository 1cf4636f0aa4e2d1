#include <gtest/gtest.h>

#include "platocover/builder.hpp"
#include "platocover/checks.hpp"
#include "platocover/lattice.hpp"

using namespace platocover;
using maps::MapFamily;
using PC = maps::PunctureClass;

namespace {

builder::EulerCount derived_for(const MapFamily& fam, std::uint64_t p, std::size_t c) {
  auto cs = lattice::census(fam, {PC::faces}, p);
  auto g = maps::build_group(fam);
  auto q = homology::build_homology(g, {PC::faces}, p);
  for (const auto& d : cs.coverings)
    if (d.c == c) return builder::euler_verify(builder::solve_voltages(q, d.L, g.map()));
  throw std::runtime_error("no covering with that c");
}

}  // namespace

TEST(Builder, QuotedGenera) {
  EXPECT_EQ(derived_for(MapFamily::tetrahedron(), 5, 3).genus, 76u);
  EXPECT_EQ(derived_for(MapFamily::cube(), 5, 2).genus, 36u);
  EXPECT_EQ(derived_for(MapFamily::octahedron(), 5, 1).genus, 12u);
}

TEST(Builder, CellCounts) {
  const auto e = derived_for(MapFamily::cube(), 5, 2);
  EXPECT_EQ(e.vertices, 8u * 25);
  EXPECT_EQ(e.edges, 12u * 25);
  EXPECT_EQ(e.faces, 6u * 5);
}

TEST(Builder, VoltagesSatisfyFaceSumsAndTreeIsZero) {
  auto g = maps::build_group(MapFamily::tetrahedron());
  auto q = homology::build_homology(g, {PC::faces}, 5);
  auto va = builder::solve_voltages(q, q.zero(), g.map());
  EXPECT_EQ(va.c, 3u);
  const auto& map = g.map();
  std::size_t zero = 0;
  for (std::size_t d = 0; d < map.dart_count(); ++d) {
    Vector neg(va.c);
    for (std::size_t k = 0; k < va.c; ++k) neg[k] = q.field().neg(va.beta[map.alpha[d]][k]);
    EXPECT_EQ(va.beta[d], neg);
    if (is_zero_vector(va.beta[d])) ++zero;
  }
  // V - 1 = 3 tree edges carry zero; the 3 co-tree edges do not
  EXPECT_EQ(zero, 6u);
  for (const auto& t : va.face_target) EXPECT_FALSE(is_zero_vector(t));
}

TEST(Builder, RejectsNonFaceBranching) {
  auto g = maps::build_group(MapFamily::tetrahedron());
  auto q = homology::build_homology(g, {PC::vertices, PC::faces}, 5);
  EXPECT_THROW(builder::solve_voltages(q, q.zero(), g.map()), InvalidArgument);
}

TEST(Builder, DartBudget) {
  auto g = maps::build_group(MapFamily::octahedron());
  auto q = homology::build_homology(g, {PC::faces}, 5);
  auto va = builder::solve_voltages(q, q.zero(), g.map());
  EXPECT_THROW(builder::euler_verify(va, 1000), BudgetExceeded);
}

TEST(Builder, EulerCheckOverWholeCensuses) {
  for (auto fam : {MapFamily::tetrahedron(), MapFamily::cube(), MapFamily::octahedron(), MapFamily::hosohedron(6),
                   MapFamily::dihedron(5)}) {
    auto cs = lattice::census(fam, {PC::faces}, 7);
    auto r = checks::euler_check(cs);
    EXPECT_TRUE(r.ok()) << fam.name() << ": " << (r.mismatches.empty() ? "" : r.mismatches.front());
    EXPECT_GT(r.checked, 0u);
  }
}
