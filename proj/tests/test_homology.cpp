#include <gtest/gtest.h>

#include <map>
#include <random>

#include "platocover/homology.hpp"

using namespace platocover;
using namespace platocover::homology;
using maps::MapFamily;
using PC = maps::PunctureClass;

namespace {

std::map<std::string, std::size_t> named_dims(const HomologyModule& q, const GroupData& g) {
  std::map<std::string, std::size_t> out;
  for (auto& ns : named_submodules(q, g)) out[ns.name] = ns.subspace.dim();
  return out;
}

}  // namespace

TEST(BuildHomology, Dimensions) {
  auto tet = maps::build_group(MapFamily::tetrahedron());
  EXPECT_EQ(build_homology(tet, {PC::faces}, 5).dim(), 3u);
  EXPECT_EQ(build_homology(tet, {PC::vertices, PC::faces}, 5).dim(), 7u);
  EXPECT_EQ(build_homology(maps::build_group(MapFamily::icosahedron()), {PC::faces}, 7).dim(), 19u);
}

TEST(BuildHomology, Rejections) {
  auto tet = maps::build_group(MapFamily::tetrahedron());
  EXPECT_THROW(build_homology(tet, {PC::faces}, 3), ModularCaseUnsupported);
  EXPECT_THROW(build_homology(tet, {PC::faces}, 2), EvenPrimeUnsupported);
  EXPECT_THROW(build_homology(tet, {PC::faces}, 25), InvalidArgument);
  EXPECT_THROW(build_homology(tet, {}, 5), InvalidArgument);
  auto dod = maps::build_group(MapFamily::dodecahedron());
  EXPECT_THROW(build_homology(dod, {PC::faces}, 5), ModularCaseUnsupported);
}

TEST(BuildHomology, PunctureClassesSumToZeroAndAreEquivariant) {
  for (auto fam : {MapFamily::cube(), MapFamily::icosahedron(), MapFamily::hosohedron(6)}) {
    auto g = maps::build_group(fam);
    for (auto sel : std::vector<std::vector<PC>>{{PC::faces}, {PC::vertices, PC::edges, PC::faces}}) {
      auto q = build_homology(g, sel, 7);
      Vector s(q.dim(), 0);
      for (std::size_t i = 0; i < q.puncture_count(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) s[j] = q.field().add(s[j], q.puncture_vector(i)[j]);
      EXPECT_TRUE(is_zero_vector(s));
      for (std::size_t e = 0; e < g.order(); e += 3) {
        for (std::size_t i = 0; i < q.puncture_count(); ++i) {
          const auto& pu = q.punctures()[i];
          std::size_t j = q.index_of(pu.cls, g.element(e).on(pu.cls)[pu.index]);
          EXPECT_EQ(q.action(e).apply(q.puncture_vector(i)), q.puncture_vector(j));
        }
      }
    }
  }
}

TEST(BuildHomology, ActionIsAHomomorphism) {
  auto g = maps::build_group(MapFamily::octahedron());
  auto q = build_homology(g, {PC::faces, PC::edges}, 5);
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t a = rng() % g.order(), b = rng() % g.order();
    EXPECT_EQ(q.action(a) * q.action(b), q.action(g.multiply(a, b)));
  }
}

TEST(NamedSubmodules, Octahedron) {
  auto g = maps::build_group(MapFamily::octahedron());
  auto q = build_homology(g, {PC::faces}, 5);
  auto d = named_dims(q, g);
  EXPECT_EQ(d.at("Q_a"), 3u);
  EXPECT_EQ(d.at("Q_b"), 1u);
  EXPECT_EQ(d.at("Q_a'"), 4u);
  EXPECT_EQ(d.at("Q_b'"), 6u);
  EXPECT_EQ(d.at("Q_a'&Q_b'"), 3u);
  EXPECT_EQ(d.at("Q_a+Q_b"), 4u);
}

TEST(NamedSubmodules, CubeAntipodalSplitting) {
  auto g = maps::build_group(MapFamily::cube());
  for (std::uint64_t p : {5u, 7u, 11u}) {
    auto q = build_homology(g, {PC::faces}, p);
    std::map<std::string, Subspace> by_name;
    for (auto& ns : named_submodules(q, g)) by_name.emplace(ns.name, ns.subspace);
    const auto& qa = by_name.at("Q_a");
    const auto& qa2 = by_name.at("Q_a'");
    EXPECT_EQ(qa.dim(), 2u);
    EXPECT_EQ(qa2.dim(), 3u);
    EXPECT_EQ(sum(qa, qa2), q.full());
    EXPECT_EQ(intersect(qa, qa2).dim(), 0u);
  }
}

TEST(NamedSubmodules, QUpperOneOnlyWhenPDividesN) {
  auto g = maps::build_group(MapFamily::hosohedron(7));
  EXPECT_EQ(named_dims(build_homology(g, {PC::faces}, 11), g).count("Q^1"), 0u);
  auto h = maps::build_group(MapFamily::hosohedron(10));
  auto d = named_dims(build_homology(h, {PC::faces}, 7), h);
  EXPECT_EQ(d.count("Q^1"), 0u);
  auto ico = maps::build_group(MapFamily::icosahedron());
  auto qi = named_dims(build_homology(ico, {PC::faces}, 11), ico);
  EXPECT_EQ(qi.count("Q^1"), 0u);
  auto cube = maps::build_group(MapFamily::cube());
  auto qv = named_dims(build_homology(cube, {PC::faces, PC::edges, PC::vertices}, 13), cube);  // N = 26
  EXPECT_EQ(qv.at("Q^1"), 24u);
}
