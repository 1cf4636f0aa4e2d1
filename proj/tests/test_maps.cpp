#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "platocover/maps.hpp"

using namespace platocover;
using namespace platocover::maps;

namespace {

std::vector<std::size_t> class_sizes(const GroupData& g) {
  std::vector<std::size_t> s;
  for (auto& c : g.classes()) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<MapFamily> sample_families() {
  return {MapFamily::tetrahedron(), MapFamily::cube(),         MapFamily::octahedron(),
          MapFamily::dodecahedron(), MapFamily::icosahedron(), MapFamily::dihedron(3),
          MapFamily::dihedron(6),    MapFamily::hosohedron(4), MapFamily::hosohedron(13)};
}

}  // namespace

TEST(BuildMap, Counts) {
  struct Case { MapFamily f; std::uint32_t v, e, fc; };
  for (auto c : {Case{MapFamily::tetrahedron(), 4, 6, 4}, Case{MapFamily::cube(), 8, 12, 6},
                 Case{MapFamily::octahedron(), 6, 12, 8}, Case{MapFamily::dodecahedron(), 20, 30, 12},
                 Case{MapFamily::icosahedron(), 12, 30, 20}, Case{MapFamily::dihedron(7), 7, 7, 2},
                 Case{MapFamily::hosohedron(13), 2, 13, 13}}) {
    DartMap m = build_map(c.f);
    EXPECT_EQ(m.vertex_count, c.v) << c.f.name();
    EXPECT_EQ(m.edge_count, c.e) << c.f.name();
    EXPECT_EQ(m.face_count, c.fc) << c.f.name();
  }
}

TEST(BuildMap, RejectsSmallParameter) {
  EXPECT_THROW(build_map(MapFamily::dihedron(2)), InvalidArgument);
  EXPECT_THROW(MapFamily::parse("hosohedron:1"), InvalidArgument);
  EXPECT_THROW(MapFamily::parse("cube:3"), InvalidArgument);
  EXPECT_THROW(MapFamily::parse("torus"), InvalidArgument);
  EXPECT_EQ(MapFamily::parse("hosohedron:95"), MapFamily::hosohedron(95));
}

TEST(BuildGroup, ClassSizes) {
  EXPECT_EQ(class_sizes(build_group(MapFamily::tetrahedron())), (std::vector<std::size_t>{1, 3, 4, 4}));
  EXPECT_EQ(class_sizes(build_group(MapFamily::cube())), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
  EXPECT_EQ(class_sizes(build_group(MapFamily::dodecahedron())), (std::vector<std::size_t>{1, 12, 12, 15, 20}));
  EXPECT_EQ(class_sizes(build_group(MapFamily::icosahedron())), (std::vector<std::size_t>{1, 12, 12, 15, 20}));
}

TEST(BuildGroup, PresentationAndRegularity) {
  for (const auto& fam : sample_families()) {
    GroupData g = build_group(fam);
    const std::size_t n = g.map().dart_count();
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.element_order(g.gen_x()), fam.valency());
    EXPECT_EQ(g.element_order(g.gen_y()), 2u);
    EXPECT_EQ(g.element_order(g.gen_z()), fam.face_size());
    EXPECT_EQ(g.multiply(g.gen_x(), g.multiply(g.gen_y(), g.gen_z())), 0u);
    // regular on darts: exactly one element maps dart 0 to each dart
    std::vector<int> hits(n, 0);
    for (auto& e : g.elements()) ++hits[e.darts[0]];
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    // reflection normalizes G and squares into it
    Perm r = g.reflection().darts, rinv = invert(r);
    Perm r2 = compose(r, r);
    EXPECT_EQ(g.element(g.index_of_dart_image(r2[0])).darts, r2) << fam.name();
    for (auto gen : {g.gen_x(), g.gen_z()}) {
      Perm conj = compose(r, compose(g.element(gen).darts, rinv));
      EXPECT_EQ(g.element(g.index_of_dart_image(conj[0])).darts, conj) << fam.name();
    }
  }
}

TEST(BuildGroup, TransitiveWithOrbitStabilizer) {
  for (const auto& fam : sample_families()) {
    GroupData g = build_group(fam);
    for (auto c : kAllClasses) {
      std::vector<bool> reached(g.map().count(c), false);
      for (auto& e : g.elements()) reached[e.on(c)[g.base_puncture(c)]] = true;
      EXPECT_TRUE(std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }));
      EXPECT_EQ(g.order(), g.map().count(c) * stabilizer_H(g, c).size()) << fam.name();
    }
  }
}

TEST(StabilizerH, Orders) {
  EXPECT_EQ(stabilizer_H(build_group(MapFamily::octahedron()), PunctureClass::faces).size(), 3u);
  EXPECT_EQ(stabilizer_H(build_group(MapFamily::cube()), PunctureClass::faces).size(), 4u);
  for (const auto& fam : sample_families())
    EXPECT_EQ(stabilizer_H(build_group(fam), PunctureClass::edges).size(), 2u);
}

// Dual maps have the same group with vertex and face actions exchanged.
TEST(BuildGroup, DualityOfFixedPointProfiles) {
  auto profile = [](const GroupData& g, PunctureClass c) {
    std::map<std::pair<unsigned, std::size_t>, std::size_t> out;
    for (std::size_t i = 0; i < g.order(); ++i) ++out[{g.element_order(i), fixed_points(g.element(i), c)}];
    return out;
  };
  for (const auto& fam : sample_families()) {
    GroupData a = build_group(fam), b = build_group(fam.dual());
    EXPECT_EQ(profile(a, PunctureClass::faces), profile(b, PunctureClass::vertices)) << fam.name();
    EXPECT_EQ(profile(a, PunctureClass::edges), profile(b, PunctureClass::edges)) << fam.name();
  }
}

TEST(BuildGroup, Antipodal) {
  for (auto fam : {MapFamily::cube(), MapFamily::octahedron(), MapFamily::dodecahedron(), MapFamily::icosahedron()})
    EXPECT_TRUE(build_group(fam).antipodal().has_value()) << fam.name();
  EXPECT_FALSE(build_group(MapFamily::tetrahedron()).antipodal().has_value());
}
