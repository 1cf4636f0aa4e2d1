#pragma once

// Brute-force invariant subspaces: spin every vector, then close under sums.

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "platocover/errors.hpp"
#include "platocover/homology.hpp"
#include "platocover/linalg.hpp"

namespace platocover::oracle {

inline constexpr std::uint64_t kDefaultVectorBudget = 10'000'000;

/// All G-invariant subspaces of Q, 0 and Q included, in canonical form and sorted.
inline std::vector<Subspace> brute_force_submodules(const homology::HomologyModule& q,
                                                    std::uint64_t budget = kDefaultVectorBudget) {
  const auto& f = q.field();
  const std::size_t n = q.dim();
  const std::uint64_t p = q.p();
  std::uint64_t total = 1;
  bool over = false;
  for (std::size_t i = 0; i < n && !over; ++i) {
    total *= p;
    over = total > budget;
  }
  if (over && n > 5) throw BudgetExceeded("p^dim Q exceeds the oracle budget of " + std::to_string(budget));

  const auto gens = q.generators();
  std::unordered_set<Subspace, SubspaceHash> found{q.zero()};
  std::vector<Subspace> cyclic;
  // one vector per projective point: the last nonzero coordinate is 1
  Vector v(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      Subspace s = spin(gens, {v}, f, n);
      if (found.insert(s).second) cyclic.push_back(std::move(s));
      std::size_t t = 0;
      while (t < lead && ++v[t] == p) v[t++] = 0;
      if (t == lead) break;
    }
  }

  // every submodule is a sum of cyclic ones
  std::vector<Subspace> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclic) {
      Subspace s = sum(all[i], c);
      if (found.insert(s).second) all.push_back(std::move(s));
    }
  for (const auto& s : all) verify(q.is_submodule(s), "oracle produced a non-invariant subspace");
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace platocover::oracle
