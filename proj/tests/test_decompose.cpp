#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "platocover/decompose.hpp"

using namespace platocover;
using namespace platocover::decompose;
using maps::MapFamily;
using PC = maps::PunctureClass;

namespace {

struct Built {
  GroupData group;
  HomologyModule q;
  std::vector<IsotypicComponent> comps;
};

Built run(const MapFamily& fam, std::vector<PC> branch, std::uint64_t p) {
  auto g = maps::build_group(fam);
  auto q = homology::build_homology(g, std::move(branch), p);
  auto comps = decompose::decompose(q, g);
  return {std::move(g), std::move(q), std::move(comps)};
}

std::map<std::string, std::size_t> dims_by_label(const std::vector<IsotypicComponent>& comps) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : comps) out[c.label()] = c.dim();
  return out;
}

const IsotypicComponent& find(const std::vector<IsotypicComponent>& comps, const std::string& label) {
  for (const auto& c : comps)
    if (c.label() == label) return c;
  throw std::runtime_error("no component " + label);
}

std::vector<std::size_t> sorted_dims(const std::vector<IsotypicComponent>& comps) {
  std::vector<std::size_t> d;
  for (const auto& c : comps) d.push_back(c.dim());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(DecomposeIdempotent, OctahedronFaces) {
  auto b = run(MapFamily::octahedron(), {PC::faces}, 5);
  EXPECT_EQ(dims_by_label(b.comps), (std::map<std::string, std::size_t>{{"chi2", 1}, {"chi4", 3}, {"chi5", 3}}));
}

TEST(DecomposeIdempotent, DodecahedronMergesThePairWhenFiveIsNotASquare) {
  for (std::uint64_t p : {7u, 13u}) {
    auto b = run(MapFamily::dodecahedron(), {PC::faces}, p);
    EXPECT_EQ(dims_by_label(b.comps), (std::map<std::string, std::size_t>{{"chi2+chi3", 6}, {"chi5", 5}}));
    const auto& merged = find(b.comps, "chi2+chi3");
    EXPECT_EQ(merged.irreducible_dim, 6u);
    EXPECT_EQ(merged.endo_degree, 2u);
  }
}

TEST(DecomposeIdempotent, IcosahedronChi4HasMultiplicityTwo) {
  for (std::uint64_t p : {11u, 19u}) {
    auto b = run(MapFamily::icosahedron(), {PC::faces}, p);
    EXPECT_EQ(sorted_dims(b.comps), (std::vector<std::size_t>{3, 3, 5, 8}));
    const auto& c4 = find(b.comps, "chi4");
    EXPECT_EQ(c4.irreducible_dim, 4u);
    EXPECT_EQ(c4.multiplicity, 2u);
    EXPECT_EQ(c4.endo_degree, 1u);
  }
}

TEST(DecomposeIdempotent, IcosahedronSixDimensionalPieceIsTheMergedPair) {
  auto b = run(MapFamily::icosahedron(), {PC::faces}, 7);
  EXPECT_EQ(dims_by_label(b.comps), (std::map<std::string, std::size_t>{{"chi2+chi3", 6}, {"chi4", 8}, {"chi5", 5}}));
}

TEST(DecomposeIdempotent, MixedBranchingMergedComponent) {
  for (auto fam : {MapFamily::dodecahedron(), MapFamily::icosahedron()}) {
    auto b = run(fam, {PC::vertices, PC::faces}, 7);
    const auto& merged = find(b.comps, "chi2+chi3");
    EXPECT_EQ(merged.irreducible_dim, 6u);
    EXPECT_EQ(merged.endo_degree, 2u);
    EXPECT_EQ(merged.multiplicity, 2u);
  }
}

TEST(DecomposeIdempotent, SplitExactlyWhenTheRadicandIsASquare) {
  for (std::uint64_t p : {7u, 11u, 13u, 19u, 23u, 29u, 31u}) {
    auto b = run(MapFamily::icosahedron(), {PC::vertices, PC::faces}, p);
    const bool split = p % 5 == 1 || p % 5 == 4;
    EXPECT_EQ(dims_by_label(b.comps).count("chi2"), split ? 1u : 0u) << p;
    EXPECT_EQ(dims_by_label(b.comps).count("chi2+chi3"), split ? 0u : 1u) << p;
  }
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 19u}) {
    auto b = run(MapFamily::tetrahedron(), {PC::edges}, p);
    const bool split = p % 3 == 1;
    EXPECT_EQ(dims_by_label(b.comps).count("chi3"), split ? 1u : 0u) << p;
    EXPECT_EQ(dims_by_label(b.comps).count("chi2+chi3"), split ? 0u : 1u) << p;
  }
}

// Property group: idempotent identities
TEST(Idempotents, SquareOrthogonalAndSumToIdentity) {
  struct Case {
    MapFamily fam;
    std::vector<PC> branch;
    std::uint64_t p;
  };
  const std::vector<Case> cases{{MapFamily::tetrahedron(), {PC::vertices, PC::edges, PC::faces}, 5},
                                {MapFamily::tetrahedron(), {PC::edges}, 7},
                                {MapFamily::cube(), {PC::vertices, PC::faces}, 7},
                                {MapFamily::octahedron(), {PC::edges}, 5},
                                {MapFamily::dodecahedron(), {PC::faces}, 11},
                                {MapFamily::icosahedron(), {PC::vertices, PC::faces}, 13}};
  for (const auto& c : cases) {
    auto g = maps::build_group(c.fam);
    auto q = homology::build_homology(g, c.branch, c.p);
    auto idems = central_idempotents(q, g, chartab::bind_polyhedral(g));
    Matrix total(q.field(), q.dim(), q.dim());
    for (std::size_t i = 0; i < idems.size(); ++i) {
      const Matrix& e = idems[i].matrix;
      EXPECT_EQ(e * e, e) << c.fam.name() << " " << idems[i].labels.front();
      for (std::size_t j = 0; j < idems.size(); ++j)
        if (i != j) EXPECT_TRUE((e * idems[j].matrix).is_zero());
      // central: commutes with both generators
      EXPECT_EQ(e * q.x(), q.x() * e);
      EXPECT_EQ(e * q.z(), q.z() * e);
      total = total + e;
    }
    EXPECT_EQ(total, Matrix::identity(q.field(), q.dim())) << c.fam.name();
  }
}

TEST(DecomposeDihedral, HosohedronExamples) {
  auto h3 = run(MapFamily::hosohedron(3), {PC::faces}, 5);
  EXPECT_EQ(dims_by_label(h3.comps), (std::map<std::string, std::size_t>{{"xi1", 2}}));
  auto h4 = run(MapFamily::hosohedron(4), {PC::faces}, 5);
  EXPECT_EQ(dims_by_label(h4.comps), (std::map<std::string, std::size_t>{{"chi3", 1}, {"xi1", 2}}));
  auto h95 = run(MapFamily::hosohedron(95), {PC::faces}, 7);
  EXPECT_EQ(sorted_dims(h95.comps), (std::vector<std::size_t>{4, 6, 6, 6, 24, 24, 24}));
  for (const auto& c : h95.comps) EXPECT_EQ(c.multiplicity, 1u);
}

TEST(DecomposeDihedral, RejectsModularPrimes) {
  auto g = maps::build_group(MapFamily::hosohedron(5));
  EXPECT_THROW(homology::build_homology(g, {PC::faces}, 5), ModularCaseUnsupported);
}

// The kernel backend against idempotents from a hand-entered D3 table
// (classes 1, rotations, reflections; rows chi1, chi2, xi1).
TEST(DecomposeDihedral, AgreesWithHandTableOnD3) {
  auto g = maps::build_group(MapFamily::hosohedron(3));
  auto q = homology::build_homology(g, {PC::vertices, PC::edges, PC::faces}, 5);
  const auto& f = q.field();
  const auto gens = chartab::dihedral_generators(g);
  const std::map<std::string, std::array<int, 3>> table{{"chi1", {1, 1, 1}}, {"chi2", {1, 1, -1}}, {"xi1", {2, -1, 0}}};
  auto comps = decompose_dihedral(q, g);
  ASSERT_EQ(comps.size(), 3u);
  for (const auto& [label, row] : table) {
    Matrix e(f, q.dim(), q.dim());
    for (std::size_t el = 0; el < g.order(); ++el) {
      const int col = gens.is_reflection[el] ? 2 : (gens.exponent[el] == 0 ? 0 : 1);
      e = e + q.action(el).scaled(f.reduce(row[0] * row[col]));
    }
    e = e.scaled(f.inv(f.reduce(6)));
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(Subspace(e.transpose()), find(comps, label).subspace) << label;
  }
}

TEST(EndoAndHom, MultiplicityOneUsesASingleInclusion) {
  auto b = run(MapFamily::cube(), {PC::faces}, 7);
  for (const auto& c : b.comps) {
    EXPECT_EQ(c.multiplicity, 1u);
    ASSERT_EQ(c.hom_basis.size(), 1u);
    EXPECT_EQ(Subspace(c.hom_basis[0].transpose()), c.subspace);
  }
}

TEST(EndoAndHom, HomMapsAreEquivariantAndSpanTheComponent) {
  for (auto [fam, branch, p] : {std::tuple{MapFamily::icosahedron(), std::vector<PC>{PC::faces}, 11u},
                                std::tuple{MapFamily::cube(), std::vector<PC>{PC::vertices, PC::edges, PC::faces}, 13u},
                                std::tuple{MapFamily::dodecahedron(), std::vector<PC>{PC::vertices, PC::faces}, 7u},
                                std::tuple{MapFamily::dihedron(8), std::vector<PC>{PC::vertices, PC::edges, PC::faces}, 3u}}) {
    auto b = run(fam, branch, p);
    const auto gens = b.q.generators();
    for (const auto& c : b.comps) {
      EXPECT_EQ(c.seed.dim(), c.irreducible_dim);
      EXPECT_EQ(c.endo_basis.size(), c.endo_degree);
      EXPECT_EQ(c.hom_basis.size(), c.multiplicity);
      auto U = detail::cyclic_basis(gens, c.seed_vectors.front(), b.q.field());
      ASSERT_EQ(U.vectors, c.seed_vectors);
      Subspace span = b.q.zero();
      for (const auto& phi : c.hom_basis) {
        for (const auto& g : gens)
          for (std::size_t i = 0; i < U.dim(); ++i)
            EXPECT_EQ(g.apply(phi.column(i)), phi.apply(U.spin_coords(g.apply(U.vectors[i])))) << c.label();
        span = sum(span, Subspace(phi.transpose()));
      }
      EXPECT_EQ(span, c.subspace) << c.label();
    }
  }
}

TEST(EndoAndHom, AntipodalPairBasis) {
  auto b = run(MapFamily::icosahedron(), {PC::faces}, 11);
  const auto& c4 = find(b.comps, "chi4");
  auto anti = b.group.antipodal();
  ASSERT_TRUE(anti.has_value());
  EXPECT_EQ(b.q.matrix_of(*anti) * c4.hom_basis[0], c4.hom_basis[1]);
}

TEST(Decompose, ComponentsFormADirectSum) {
  for (auto fam : {MapFamily::tetrahedron(), MapFamily::octahedron(), MapFamily::hosohedron(12), MapFamily::dihedron(9)}) {
    auto b = run(fam, {PC::vertices, PC::edges, PC::faces}, 11);
    std::size_t total = 0;
    Subspace span = b.q.zero();
    for (const auto& c : b.comps) {
      EXPECT_EQ(c.dim(), static_cast<std::size_t>(c.irreducible_dim) * c.multiplicity);
      EXPECT_TRUE(b.q.is_submodule(c.subspace));
      total += c.dim();
      span = sum(span, c.subspace);
    }
    EXPECT_EQ(total, b.q.dim());
    EXPECT_EQ(span.dim(), b.q.dim());
  }
}
