#pragma once

// Derived covering maps from voltage assignments in K = Q/L, used to recount
// the genus of face-branched coverings from the Euler characteristic.

#include <cstdint>
#include <queue>
#include <vector>

#include "platocover/errors.hpp"
#include "platocover/homology.hpp"
#include "platocover/linalg.hpp"
#include "platocover/maps.hpp"

namespace platocover::builder {

using homology::HomologyModule;
using maps::DartMap;
using maps::PunctureClass;

inline constexpr std::uint64_t kDefaultDartBudget = 1'000'000;

/// Coordinates on K = Q/L: the non-pivot entries of the residual modulo L.
class Quotient {
public:
  explicit Quotient(Subspace L) : L_(std::move(L)) {
    std::vector<bool> pivot(L_.ambient(), false);
    for (auto j : L_.pivots()) pivot[j] = true;
    for (std::size_t j = 0; j < L_.ambient(); ++j)
      if (!pivot[j]) free_.push_back(j);
  }
  std::size_t dim() const { return free_.size(); }
  Vector project(const Vector& v) const {
    Vector r = L_.residual(v), k(dim());
    for (std::size_t i = 0; i < dim(); ++i) k[i] = r[free_[i]];
    return k;
  }

private:
  Subspace L_;
  std::vector<std::size_t> free_;
};

struct VoltageAssignment {
  const DartMap* map = nullptr;
  std::uint64_t p = 0;
  std::size_t c = 0;                // dim K
  std::vector<Vector> beta;         // per dart, beta[alpha(d)] = -beta[d]
  std::vector<Vector> face_target;  // image of each face class in K
};

/// Zero voltage on a BFS spanning tree of the skeleton; the co-tree voltages
/// solve "boundary sum of face i = image of [g_i] in K".
inline VoltageAssignment solve_voltages(const HomologyModule& q, const Subspace& L, const DartMap& map) {
  if (q.branch().size() != 1 || q.branch()[0] != PunctureClass::faces)
    throw InvalidArgument("solve_voltages: only face branching is supported");
  verify(L.dim() < q.dim(), "solve_voltages: L must be proper");
  const auto& f = q.field();
  const Quotient K(L);
  VoltageAssignment va;
  va.map = &map;
  va.p = q.p();
  va.c = K.dim();
  const std::size_t D = map.dart_count(), F = map.face_count;
  for (std::size_t i = 0; i < F; ++i) va.face_target.push_back(K.project(q.puncture_vector(q.index_of(PunctureClass::faces, i))));

  std::vector<bool> tree(D, false), seen(map.vertex_count, false);
  std::queue<std::uint32_t> bfs;
  seen[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    const auto v = bfs.front();
    bfs.pop();
    for (std::size_t d = 0; d < D; ++d) {
      if (map.vertex_of[d] != v) continue;
      const auto w = map.vertex_of[map.alpha[d]];
      if (seen[w]) continue;
      seen[w] = true;
      tree[d] = tree[map.alpha[d]] = true;
      bfs.push(w);
    }
  }

  // one unknown per co-tree edge, oriented along its smaller dart
  std::vector<int> unknown(D, -1);
  std::size_t u = 0;
  for (std::size_t d = 0; d < D; ++d)
    if (!tree[d] && d < map.alpha[d]) unknown[d] = static_cast<int>(u++);
  verify(u + 1 == F, "co-tree size differs from F - 1");

  Matrix A(f, F, u);
  for (std::size_t d = 0; d < D; ++d) {
    if (tree[d]) continue;
    const std::size_t face = map.face_of[d];
    if (unknown[d] >= 0) A(face, unknown[d]) = f.add(A(face, unknown[d]), 1);
    else A(face, unknown[map.alpha[d]]) = f.sub(A(face, unknown[map.alpha[d]]), 1);
  }
  Matrix square(f, u, u);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j) square(i, j) = A(i, j);
  verify(square.rank() == u, "voltage system is singular");
  const Matrix inv = square.inverse();

  std::vector<Vector> x(u, Vector(va.c, 0));  // x[j] = voltage of unknown j
  for (std::size_t k = 0; k < va.c; ++k) {
    Vector rhs(u);
    for (std::size_t i = 0; i < u; ++i) rhs[i] = va.face_target[i][k];
    Vector sol = inv.apply(rhs);
    for (std::size_t j = 0; j < u; ++j) x[j][k] = sol[j];
  }
  va.beta.assign(D, Vector(va.c, 0));
  for (std::size_t d = 0; d < D; ++d) {
    if (unknown[d] < 0) continue;
    va.beta[d] = x[unknown[d]];
    for (std::size_t k = 0; k < va.c; ++k) va.beta[map.alpha[d]][k] = f.neg(x[unknown[d]][k]);
  }
  // every face, including the one left out of the solve
  for (std::size_t i = 0; i < F; ++i) {
    Vector s(va.c, 0);
    for (std::size_t d = 0; d < D; ++d)
      if (map.face_of[d] == i)
        for (std::size_t k = 0; k < va.c; ++k) s[k] = f.add(s[k], va.beta[d][k]);
    verify(s == va.face_target[i], "face boundary voltage differs from its puncture class");
  }
  return va;
}

struct EulerCount {
  std::uint64_t vertices = 0, edges = 0, faces = 0, genus = 0;
};

/// Builds the derived map on D p^c darts and counts its cells.
inline EulerCount euler_verify(const VoltageAssignment& va, std::uint64_t dart_budget = kDefaultDartBudget) {
  const DartMap& map = *va.map;
  std::uint64_t kc = 1;
  for (std::size_t i = 0; i < va.c; ++i) kc *= va.p;
  const std::uint64_t D = map.dart_count() * kc;
  if (D > dart_budget) throw BudgetExceeded("derived map has " + std::to_string(D) + " darts");

  auto encode = [&](const Vector& k) {
    std::uint64_t e = 0;
    for (std::size_t i = va.c; i-- > 0;) e = e * va.p + k[i];
    return e;
  };
  std::vector<std::uint64_t> beta_code(map.dart_count());
  for (std::size_t d = 0; d < map.dart_count(); ++d) beta_code[d] = encode(va.beta[d]);
  // (k + b) digit-wise mod p
  auto add = [&](std::uint64_t k, std::uint64_t b) {
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < va.c; ++i) {
      out += ((k % va.p + b % va.p) % va.p) * scale;
      k /= va.p;
      b /= va.p;
      scale *= va.p;
    }
    return out;
  };
  std::vector<std::uint32_t> sigma(D), alpha(D);
  for (std::uint64_t d = 0; d < map.dart_count(); ++d)
    for (std::uint64_t k = 0; k < kc; ++k) {
      sigma[d * kc + k] = static_cast<std::uint32_t>(map.sigma[d] * kc + k);
      alpha[d * kc + k] = static_cast<std::uint32_t>(map.alpha[d] * kc + add(k, beta_code[d]));
    }
  DartMap derived(std::move(sigma), std::move(alpha));

  // connectivity of <sigma', alpha'>
  std::vector<bool> seen(D, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::uint64_t reached = 1;
  while (!stack.empty()) {
    const auto d = stack.back();
    stack.pop_back();
    for (auto e : {derived.sigma[d], derived.alpha[d]})
      if (!seen[e]) {
        seen[e] = true;
        ++reached;
        stack.push_back(e);
      }
  }
  verify(reached == D, "derived map is disconnected");

  EulerCount out{derived.vertex_count, derived.edge_count, derived.face_count, 0};
  const std::int64_t chi = static_cast<std::int64_t>(out.vertices) - static_cast<std::int64_t>(out.edges) +
                           static_cast<std::int64_t>(out.faces);
  verify(chi <= 2 && chi % 2 == 0, "derived map has odd Euler characteristic");
  out.genus = static_cast<std::uint64_t>((2 - chi) / 2);
  return out;
}

}  // namespace platocover::builder
