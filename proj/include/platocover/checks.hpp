#pragma once

// Cross-checks of a census against the builder and the oracle.

#include <algorithm>
#include <string>
#include <vector>

#include "platocover/builder.hpp"
#include "platocover/lattice.hpp"
#include "platocover/oracle.hpp"

namespace platocover::checks {

struct EulerReport {
  std::size_t checked = 0, skipped = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Derived-map genus against the descriptor genus, for every covering within the dart budget.
inline EulerReport euler_check(const lattice::Census& cs, std::uint64_t dart_budget = builder::kDefaultDartBudget) {
  if (cs.branch != std::vector<maps::PunctureClass>{maps::PunctureClass::faces})
    throw InvalidArgument("Euler cross-check needs face branching only");
  const auto group = maps::build_group(cs.family);
  const auto q = homology::build_homology(group, cs.branch, cs.p);
  EulerReport r;
  for (const auto& d : cs.coverings) {
    gf::BigInt darts = gf::BigInt(group.map().dart_count()) * boost::multiprecision::pow(gf::BigInt(cs.p), static_cast<unsigned>(d.c));
    if (darts > dart_budget) {
      ++r.skipped;
      continue;
    }
    const auto e = builder::euler_verify(builder::solve_voltages(q, d.L, group.map()), dart_budget);
    ++r.checked;
    std::uint64_t pc1 = 1;
    for (std::size_t i = 1; i < d.c; ++i) pc1 *= cs.p;
    const bool cells = e.vertices == group.map().vertex_count * pc1 * cs.p &&
                       e.edges == group.map().edge_count * pc1 * cs.p && e.faces == group.map().face_count * pc1;
    if (gf::BigInt(e.genus) != d.genus || !cells)
      r.mismatches.push_back("covering " + std::to_string(d.id) + ": derived genus " + std::to_string(e.genus) +
                             ", descriptor genus " + d.genus.str());
  }
  return r;
}

struct OracleReport {
  std::size_t oracle_count = 0, lattice_count = 0;
  bool equal = false;
};

/// Brute-force submodules against 0, Q and the census coverings, as sets of subspaces.
inline OracleReport oracle_check(const lattice::Census& cs, std::uint64_t budget = oracle::kDefaultVectorBudget) {
  const auto group = maps::build_group(cs.family);
  const auto q = homology::build_homology(group, cs.branch, cs.p);
  auto brute = oracle::brute_force_submodules(q, budget);
  std::vector<Subspace> mine{q.full()};
  for (const auto& d : cs.coverings) mine.push_back(d.L);
  if (std::none_of(mine.begin(), mine.end(), [](const Subspace& s) { return s.dim() == 0; })) mine.push_back(q.zero());
  std::sort(mine.begin(), mine.end());
  return {brute.size(), mine.size(), brute == mine};
}

}  // namespace platocover::checks
