#pragma once

// Invariant submodules of Q and the coverings they define.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "platocover/chartab.hpp"
#include "platocover/decompose.hpp"
#include "platocover/errors.hpp"
#include "platocover/gf.hpp"
#include "platocover/homology.hpp"
#include "platocover/linalg.hpp"
#include "platocover/maps.hpp"

namespace platocover::lattice {

using decompose::IsotypicComponent;
using gf::BigInt;
using homology::HomologyModule;
using maps::GroupData;
using maps::MapFamily;
using maps::PunctureClass;

inline constexpr std::uint64_t kDefaultSubmoduleBudget = 2'000'000;

/// Number of k-dimensional subspaces of F_q^m.
inline BigInt gaussian_binomial(unsigned m, unsigned k, const BigInt& q) {
  if (k > m) return 0;
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, m - i) - 1;
    den *= boost::multiprecision::pow(q, i + 1) - 1;
  }
  return num / den;
}

inline BigInt subspace_count(unsigned m, const BigInt& q) {
  BigInt total = 0;
  for (unsigned k = 0; k <= m; ++k) total += gaussian_binomial(m, k, q);
  return total;
}

/// Number of submodules of Q (including 0 and Q) from the decomposition alone.
inline BigInt count_submodules(const std::vector<IsotypicComponent>& comps, std::uint64_t p) {
  BigInt total = 1;
  for (const auto& c : comps) total *= subspace_count(c.multiplicity, boost::multiprecision::pow(BigInt(p), c.endo_degree));
  return total;
}

/// One E-subspace of E^m inside a component, with the F_p-subspace it yields.
struct ComponentChoice {
  unsigned rank = 0;                               // dim over E
  std::vector<std::vector<std::uint64_t>> rows;    // RREF over E, entries as E-element indices
  Subspace space{PrimeField(3), 0};
  std::string label;                               // "0", "all", a lambda value, or the RREF rows
};

namespace detail {

/// E-element number `index` (base-p digits over endo_basis) as a d x d matrix.
inline Matrix endo_element(const IsotypicComponent& c, std::uint64_t index, const PrimeField& f) {
  return decompose::detail::combination(c.endo_basis, decompose::detail::digits(index, f.modulus(), c.endo_basis.size()), f);
}

inline std::string element_label(std::uint64_t index, const IsotypicComponent& c, const PrimeField& f) {
  if (c.endo_degree == 1) return std::to_string(f.signed_value(static_cast<Residue>(index)));
  auto d = decompose::detail::digits(index, f.modulus(), c.endo_degree);
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

inline std::string choice_label(const ComponentChoice& ch, const IsotypicComponent& c, const PrimeField& f) {
  if (ch.rank == 0) return "0";
  if (ch.rank == c.multiplicity) return "all";
  if (c.multiplicity == 2) {
    // row (1, lambda) is Q(lambda); row (0, 1) is Q(inf)
    if (ch.rows[0][0] == 0) return "inf";
    return element_label(ch.rows[0][1], c, f);
  }
  std::string s = "[";
  for (std::size_t r = 0; r < ch.rows.size(); ++r) {
    if (r) s += ";";
    for (std::size_t j = 0; j < ch.rows[r].size(); ++j) s += (j ? "," : "") + element_label(ch.rows[r][j], c, f);
  }
  return s + "]";
}

}  // namespace detail

/// All E-subspaces of Hom(W, component) ~ E^m, as F_p-submodules of Q.
inline std::vector<ComponentChoice> component_submodules(const IsotypicComponent& c, const HomologyModule& q) {
  const auto& f = q.field();
  const unsigned m = c.multiplicity;
  const std::uint64_t es = boost::multiprecision::pow(BigInt(f.modulus()), c.endo_degree).convert_to<std::uint64_t>();
  verify(c.hom_basis.size() == m && !c.endo_basis.empty(), c.label() + ": endo_and_hom has not been run");

  std::vector<ComponentChoice> out;
  for (unsigned k = 0; k <= m; ++k) {
    // pivot columns as a k-subset of {0..m-1}
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<unsigned, unsigned>> free;  // (row, column)
      for (unsigned r = 0; r < k; ++r)
        for (unsigned j = piv[r] + 1; j < m; ++j)
          if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(r, j);
      std::vector<std::uint64_t> values(free.size(), 0);
      while (true) {
        ComponentChoice ch;
        ch.rank = k;
        ch.rows.assign(k, std::vector<std::uint64_t>(m, 0));
        for (unsigned r = 0; r < k; ++r) ch.rows[r][piv[r]] = 1;
        for (std::size_t t = 0; t < free.size(); ++t) ch.rows[free[t].first][free[t].second] = values[t];
        std::vector<Vector> gens;
        for (unsigned r = 0; r < k; ++r) {
          Matrix phi(f, q.dim(), c.irreducible_dim);
          for (unsigned j = 0; j < m; ++j)
            if (ch.rows[r][j]) phi = phi + c.hom_basis[j] * detail::endo_element(c, ch.rows[r][j], f);
          for (std::size_t col = 0; col < phi.cols(); ++col) gens.push_back(phi.column(col));
        }
        ch.space = Subspace::span(f, q.dim(), gens);
        verify(ch.space.dim() == static_cast<std::size_t>(k) * c.irreducible_dim,
               c.label() + ": E-subspace has the wrong F_p-dimension");
        ch.label = detail::choice_label(ch, c, f);
        out.push_back(std::move(ch));
        // odometer over free entries
        std::size_t t = 0;
        while (t < values.size() && ++values[t] == es) values[t++] = 0;
        if (t == values.size()) break;
      }
      // next pivot set
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && piv[i] == m - k + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++piv[i];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  verify(BigInt(out.size()) == subspace_count(m, BigInt(es)), c.label() + ": E-subspace count mismatch");
  return out;
}

/// A submodule of Q together with its per-component choices.
struct Submodule {
  Subspace space{PrimeField(3), 0};
  std::vector<std::size_t> choice;  // index into the per-component choice lists
};

struct Lattice {
  std::vector<std::vector<ComponentChoice>> choices;  // per component
  std::vector<Submodule> submodules;                   // includes 0 and Q
};

/// Every G-invariant subspace of Q: one E-subspace per component, summed.
inline Lattice enumerate_submodules(const std::vector<IsotypicComponent>& comps, const HomologyModule& q,
                                    std::uint64_t budget = kDefaultSubmoduleBudget) {
  const BigInt expected = count_submodules(comps, q.p());
  if (expected > budget)
    throw BudgetExceeded(expected.str() + " submodules exceeds the enumeration budget of " + std::to_string(budget));

  Lattice lat;
  for (const auto& c : comps) lat.choices.push_back(component_submodules(c, q));

  std::vector<std::size_t> idx(comps.size(), 0);
  while (true) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (auto&& v : lat.choices[i][idx[i]].space.vectors()) rows.push_back(std::move(v));
    Submodule s;
    s.space = Subspace::span(q.field(), q.dim(), rows);
    verify(q.is_submodule(s.space), "enumerated subspace is not G-invariant");
    s.choice = idx;
    lat.submodules.push_back(std::move(s));
    std::size_t t = 0;
    while (t < idx.size() && ++idx[t] == lat.choices[t].size()) idx[t++] = 0;
    if (t == idx.size()) break;
  }
  verify(BigInt(lat.submodules.size()) == expected, "submodule count differs from the Gaussian binomial product");
  return lat;
}

struct CoveringDescriptor {
  std::size_t id = 0;  // 1-based position in the census
  Subspace L{PrimeField(3), 0};
  std::size_t c = 0;
  std::vector<PunctureClass> effective_branch;
  std::array<std::uint64_t, 3> type{};  // orders of the images of x, y, z
  BigInt genus = 0;
  chartab::CharacterMultiset character;
  bool regular = true;
  std::optional<std::size_t> mate;  // id of the mirror image when chiral
  std::vector<std::string> component_choice;
  std::vector<unsigned> component_rank;

  std::string type_string() const {
    if (type[1] == 2) return "{" + std::to_string(type[2]) + "," + std::to_string(type[0]) + "}";
    return "(" + std::to_string(type[0]) + "," + std::to_string(type[1]) + "," + std::to_string(type[2]) + ")";
  }
};

/// g = 1 - p^c + B (p - 1) p^(c-1) / 2, with B the number of branch points.
inline BigInt riemann_hurwitz_genus(std::uint64_t p, std::size_t c, std::uint64_t branch_points) {
  const BigInt pc1 = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(c - 1));
  const BigInt twice = 2 - 2 * pc1 * p + BigInt(branch_points) * (p - 1) * pc1;
  verify(twice % 2 == 0, "Riemann-Hurwitz genus is not an integer");
  return twice / 2;
}

/// Descriptor of the covering with monodromy group K = Q/L (reflection and mate filled in by census).
inline CoveringDescriptor describe_covering(const Subspace& L, const HomologyModule& q, const GroupData& group) {
  verify(L.dim() < q.dim(), "describe_covering: L must be proper");
  verify(q.is_submodule(L), "describe_covering: L is not G-invariant");
  const auto& fam = group.family();
  const std::uint64_t p = q.p();
  CoveringDescriptor d;
  d.L = L;
  d.c = L.codim();
  std::uint64_t branch_points = 0;
  for (auto cls : q.branch()) {
    const auto idx = q.punctures_of(cls);
    const bool first = !L.contains(q.puncture_vector(idx.front()));
    for (auto i : idx)
      verify((!L.contains(q.puncture_vector(i))) == first, "branching is not constant on a puncture class");
    if (first) {
      d.effective_branch.push_back(cls);
      branch_points += idx.size();
    }
  }
  auto branched = [&](PunctureClass c) {
    return std::find(d.effective_branch.begin(), d.effective_branch.end(), c) != d.effective_branch.end();
  };
  d.type = {fam.valency() * (branched(PunctureClass::vertices) ? p : 1),
            2 * (branched(PunctureClass::edges) ? p : 1),
            fam.face_size() * (branched(PunctureClass::faces) ? p : 1)};
  d.genus = riemann_hurwitz_genus(p, d.c, branch_points);
  return d;
}

struct CensusSummary {
  std::size_t total = 0, regular = 0, chiral = 0;
  std::vector<std::size_t> dims;  // sorted covering dimensions c
};

struct Census {
  MapFamily family;
  std::vector<PunctureClass> branch;
  std::uint64_t p = 0;
  std::vector<IsotypicComponent> components;
  std::vector<CoveringDescriptor> coverings;
  CensusSummary summary;
};

inline void add_character(chartab::CharacterMultiset& ch, const IsotypicComponent& c, unsigned mult) {
  if (!mult) return;
  for (const auto& l : c.labels) ch[l] += mult;
}

/// Descriptors for every proper submodule, sorted by (c, genus, character, L),
/// with reflection-invariance and chiral mates resolved.
inline std::vector<CoveringDescriptor> describe_all(const Lattice& lat, const std::vector<IsotypicComponent>& comps,
                                                    const HomologyModule& q, const GroupData& group) {
  std::vector<CoveringDescriptor> out;
  for (const auto& s : lat.submodules) {
    if (s.space.dim() == q.dim()) continue;
    CoveringDescriptor d = describe_covering(s.space, q, group);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& ch = lat.choices[i][s.choice[i]];
      add_character(d.character, comps[i], comps[i].multiplicity - ch.rank);
      d.component_choice.push_back(ch.label);
      d.component_rank.push_back(ch.rank);
    }
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const CoveringDescriptor& a, const CoveringDescriptor& b) {
    if (a.c != b.c) return a.c < b.c;
    if (a.genus != b.genus) return a.genus < b.genus;
    if (a.character != b.character)
      return std::lexicographical_compare(a.character.begin(), a.character.end(), b.character.begin(), b.character.end(),
                                          [](const auto& x, const auto& y) {
                                            if (x.first != y.first) return chartab::LabelLess{}(x.first, y.first);
                                            return x.second < y.second;
                                          });
    return a.L < b.L;
  });
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].id = i + 1;
    index.emplace(out[i].L, i);
  }
  for (auto& d : out) {
    Subspace mirror = image(d.L, q.reflection());
    if (mirror == d.L) continue;
    auto it = index.find(mirror);
    verify(it != index.end(), "mirror image of a submodule is missing from the lattice");
    const auto& m = out[it->second];
    verify(m.c == d.c && m.genus == d.genus && m.type == d.type, "chiral mates differ in c, genus or type");
    d.regular = false;
    d.mate = m.id;
  }
  return out;
}

inline CensusSummary summarize(const std::vector<CoveringDescriptor>& cs) {
  CensusSummary s;
  s.total = cs.size();
  for (const auto& d : cs) {
    (d.regular ? s.regular : s.chiral)++;
    s.dims.push_back(d.c);
  }
  std::sort(s.dims.begin(), s.dims.end());
  return s;
}

/// End to end: build the map, group and module, decompose, enumerate, describe.
inline Census census(const MapFamily& family, std::vector<PunctureClass> branch, std::uint64_t p,
                     std::uint64_t budget = kDefaultSubmoduleBudget) {
  Census out;
  out.family = family;
  std::sort(branch.begin(), branch.end());
  branch.erase(std::unique(branch.begin(), branch.end()), branch.end());
  out.branch = branch;
  out.p = p;
  const GroupData group = maps::build_group(family);
  const HomologyModule q = homology::build_homology(group, branch, p);
  out.components = decompose::decompose(q, group);
  const Lattice lat = enumerate_submodules(out.components, q, budget);
  out.coverings = describe_all(lat, out.components, q, group);
  out.summary = summarize(out.coverings);
  return out;
}

/// Proper submodule count only (no enumeration), for instances beyond the budget.
inline BigInt census_count(const MapFamily& family, std::vector<PunctureClass> branch, std::uint64_t p) {
  const GroupData group = maps::build_group(family);
  const HomologyModule q = homology::build_homology(group, std::move(branch), p);
  return count_submodules(decompose::decompose(q, group), p) - 1;
}

}  // namespace platocover::lattice
