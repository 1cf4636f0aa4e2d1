#pragma once

// Isotypic decomposition of Q, and for each component an irreducible seed W,
// its endomorphism field E = End_G(W) and an E-basis of Hom_G(W, component).

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "platocover/chartab.hpp"
#include "platocover/errors.hpp"
#include "platocover/gf.hpp"
#include "platocover/homology.hpp"
#include "platocover/linalg.hpp"
#include "platocover/maps.hpp"

namespace platocover::decompose {

using homology::HomologyModule;
using maps::GroupData;

struct IsotypicComponent {
  std::vector<std::string> labels;  // one character, or a merged Galois pair
  Subspace subspace{PrimeField(3), 0};
  unsigned irreducible_dim = 0;     // d
  unsigned multiplicity = 0;        // m
  unsigned endo_degree = 0;         // s, with E = F_{p^s}

  // Filled in by endo_and_hom. W = span of seed_vectors, where seed_vectors[0]
  // generates W and seed_vectors[i] = gens[seed_gen[i]] seed_vectors[seed_parent[i]].
  std::vector<Vector> seed_vectors;
  Subspace seed{PrimeField(3), 0};
  std::vector<Matrix> endo_basis;   // d x d, in seed_vectors coordinates, identity first
  std::vector<Matrix> hom_basis;    // n x d: columns are images of seed_vectors

  std::string label() const {
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : "+") + l;
    return s;
  }
  std::size_t dim() const { return subspace.dim(); }
};

namespace detail {

/// Basis u_0, u_1, ... of the cyclic module spanned by a seed, each u_i a
/// generator applied to an earlier u.
struct CyclicBasis {
  std::vector<Vector> vectors;
  std::vector<int> parent, gen;
  Subspace space{PrimeField(3), 0};
  Matrix rref_to_spin{PrimeField(3), 0, 0};

  std::size_t dim() const { return vectors.size(); }
  Vector spin_coords(const Vector& v) const { return rref_to_spin.apply(space.coordinates(v)); }
  Vector ambient(const Vector& coords) const {
    const auto& f = space.field();
    Vector v(space.ambient(), 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i]) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(coords[i], vectors[i][j]));
    }
    return v;
  }
};

inline CyclicBasis cyclic_basis(const std::vector<Matrix>& gens, const Vector& seed, const PrimeField& f) {
  const std::size_t n = seed.size();
  CyclicBasis cb;
  EchelonBuilder eb(f, n);
  if (!eb.add(seed)) throw InvalidArgument("cyclic_basis: zero seed");
  cb.vectors.push_back(seed);
  cb.parent.push_back(-1);
  cb.gen.push_back(-1);
  for (std::size_t head = 0; head < cb.vectors.size(); ++head)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vector w = gens[g].apply(cb.vectors[head]);
      if (eb.add(w)) {
        cb.vectors.push_back(std::move(w));
        cb.parent.push_back(static_cast<int>(head));
        cb.gen.push_back(static_cast<int>(g));
      }
    }
  cb.space = Subspace::span(f, n, cb.vectors);
  const std::size_t k = cb.vectors.size();
  Matrix s(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vector c = cb.space.coordinates(cb.vectors[i]);
    for (std::size_t r = 0; r < k; ++r) s(r, i) = c[r];
  }
  cb.rref_to_spin = s.inverse();
  return cb;
}

/// All G-maps X from the cyclic module U to a module Y (generators acting by
/// ygens), returned as the matrices with columns X(u_i) in Y-coordinates.
/// X is fixed by y = X(u_0), subject to X(g u_i) = g X(u_i).
inline std::vector<Matrix> equivariant_maps(const CyclicBasis& U, const std::vector<Matrix>& gens,
                                            const std::vector<Matrix>& ygens) {
  const auto& f = U.space.field();
  const std::size_t k = U.dim(), c = ygens.front().rows();
  std::vector<Matrix> word;  // word[i] u_0 = u_i, acting on Y
  word.push_back(Matrix::identity(f, c));
  for (std::size_t i = 1; i < k; ++i) word.push_back(ygens[U.gen[i]] * word[U.parent[i]]);

  std::vector<std::vector<bool>> tree(k, std::vector<bool>(gens.size(), false));
  for (std::size_t i = 1; i < k; ++i) tree[U.parent[i]][U.gen[i]] = true;

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (tree[i][g]) continue;  // holds by construction
      Vector coef = U.spin_coords(gens[g].apply(U.vectors[i]));
      Matrix lhs = ygens[g] * word[i];
      Matrix block = lhs.scaled(f.neg(1));
      for (std::size_t j = 0; j < k; ++j)
        if (coef[j]) block = block + word[j].scaled(coef[j]);
      for (std::size_t r = 0; r < c; ++r) rows.push_back(block.row(r));
    }
  std::vector<Vector> sols;
  if (rows.empty()) {
    for (std::size_t j = 0; j < c; ++j) {
      Vector e(c, 0);
      e[j] = 1;
      sols.push_back(e);
    }
  } else {
    sols = Matrix::from_rows(f, c, rows).nullspace();
  }
  std::vector<Matrix> out;
  for (const auto& y : sols) {
    Matrix x(f, c, k);
    for (std::size_t i = 0; i < k; ++i) {
      Vector col = word[i].apply(y);
      for (std::size_t r = 0; r < c; ++r) x(r, i) = col[r];
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline std::vector<Matrix> restricted(const CyclicBasis& U, const std::vector<Matrix>& gens) {
  const auto& f = U.space.field();
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    Matrix m(f, U.dim(), U.dim());
    for (std::size_t i = 0; i < U.dim(); ++i) {
      Vector c = U.spin_coords(g.apply(U.vectors[i]));
      for (std::size_t r = 0; r < U.dim(); ++r) m(r, i) = c[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Endomorphism basis of U, rotated so that the identity comes first.
inline std::vector<Matrix> endomorphisms(const CyclicBasis& U, const std::vector<Matrix>& gens) {
  const auto& f = U.space.field();
  auto basis = equivariant_maps(U, gens, restricted(U, gens));
  // Replace by an echelon basis containing the identity as first element.
  const std::size_t k = U.dim();
  EchelonBuilder eb(f, k * k);
  eb.add(Matrix::identity(f, k).data());
  std::vector<Matrix> out{Matrix::identity(f, k)};
  for (auto& m : basis)
    if (eb.add(m.data())) out.push_back(m);
  verify(out.size() == basis.size(), "endomorphisms: identity is not an endomorphism");
  return out;
}

inline Matrix combination(const std::vector<Matrix>& basis, const Vector& coef, const PrimeField& f) {
  Matrix m(f, basis.front().rows(), basis.front().cols());
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (coef[t]) m = m + basis[t].scaled(coef[t]);
  return m;
}

inline Vector digits(std::uint64_t index, std::uint64_t p, std::size_t len) {
  Vector v(len, 0);
  for (std::size_t i = 0; i < len && index; ++i) {
    v[i] = static_cast<Residue>(index % p);
    index /= p;
  }
  return v;
}

inline Matrix evaluate(const gf::Polynomial& poly, const Matrix& a) {
  const auto& f = a.field();
  Matrix r(f, a.rows(), a.cols());
  for (int i = poly.degree(); i >= 0; --i) r = r * a + Matrix::identity(f, a.rows()).scaled(poly.coeff(i));
  return r;
}

inline Subspace kernel(const Matrix& m) { return Subspace::span(m.field(), m.cols(), m.nullspace()); }

inline Subspace column_space(const Matrix& m) { return Subspace(m.transpose()); }

inline void finish_component(IsotypicComponent& c) {
  verify(c.subspace.dim() % c.irreducible_dim == 0,
         c.label() + ": dimension " + std::to_string(c.subspace.dim()) + " is not a multiple of " +
             std::to_string(c.irreducible_dim));
  c.multiplicity = static_cast<unsigned>(c.subspace.dim() / c.irreducible_dim);
}

}  // namespace detail

/// Central idempotent of one character, or of a merged Galois pair.
struct Idempotent {
  std::vector<std::string> labels;
  unsigned irreducible_dim = 0;
  Matrix matrix{PrimeField(3), 0, 0};
};

/// e = (chi(1)/|G|) sum_g conj(chi(g)) rho(g) for every row of the bound table.
/// Galois pairs whose radicand is not a square mod p are merged.
template <class V>
std::vector<Idempotent> central_idempotents(const HomologyModule& q, const GroupData& group,
                                            const chartab::BoundTable<V>& bt) {
  const auto& f = q.field();
  const std::size_t n = q.dim();
  const auto& table = bt.table;
  if (table.order % q.p() == 0) throw ModularCaseUnsupported("p divides |G|");

  // class sums of rho over table columns
  std::vector<Matrix> class_sum(table.classes.size(), Matrix(f, n, n));
  for (std::size_t e = 0; e < group.order(); ++e)
    class_sum[bt.column_of_element[e]] = class_sum[bt.column_of_element[e]] + q.action(e);

  auto idempotent = [&](const std::vector<std::size_t>& rows, std::optional<Residue> root) {
    // sum of chi(1) conj(chi(g)) over the rows; rational when a pair is merged
    Matrix e(f, n, n);
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      V v = table.values[rows.front()][0] * table.values[rows.front()][c].conj();
      for (std::size_t i = 1; i < rows.size(); ++i) v = v + table.values[rows[i]][0] * table.values[rows[i]][c].conj();
      e = e + class_sum[c].scaled(v.reduce(f, root));
    }
    return e.scaled(f.inv(f.reduce(static_cast<std::int64_t>(table.order))));
  };

  std::vector<Idempotent> out;
  std::vector<bool> done(table.rows.size(), false);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (done[r]) continue;
    std::vector<std::vector<std::size_t>> groups;
    std::optional<Residue> root;
    if (auto gp = table.pair_of(r)) {
      done[gp->first] = done[gp->second] = true;
      root = f.sqrt(f.reduce(gp->radicand));
      if (root) groups = {{gp->first}, {gp->second}};
      else groups = {{gp->first, gp->second}};
    } else {
      done[r] = true;
      groups = {{r}};
    }
    for (const auto& rows : groups) {
      Idempotent e;
      for (auto row : rows) {
        e.labels.push_back(table.rows[row]);
        e.irreducible_dim += table.degree(row);
      }
      e.matrix = idempotent(rows, root);
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// Components as images of central idempotents, for A4, S4, A5. The
/// idempotent identities are checked before the images are taken.
template <class V>
std::vector<IsotypicComponent> decompose_idempotent(const HomologyModule& q, const GroupData& group,
                                                    const chartab::BoundTable<V>& bt) {
  const auto& f = q.field();
  const auto idems = central_idempotents(q, group, bt);
  Matrix total(f, q.dim(), q.dim());
  for (std::size_t i = 0; i < idems.size(); ++i) {
    const Matrix& e = idems[i].matrix;
    verify(e * e == e, "idempotent identity e^2 = e fails");
    for (std::size_t j = 0; j < idems.size(); ++j)
      if (i != j) verify((e * idems[j].matrix).is_zero(), "idempotents are not orthogonal");
    total = total + e;
  }
  verify(total == Matrix::identity(f, q.dim()), "idempotents do not sum to the identity");

  std::vector<IsotypicComponent> out;
  for (const auto& e : idems) {
    if (e.matrix.is_zero()) continue;
    IsotypicComponent c;
    c.labels = e.labels;
    c.subspace = detail::column_space(e.matrix);
    c.irreducible_dim = e.irreducible_dim;
    detail::finish_component(c);
    out.push_back(std::move(c));
  }
  return out;
}

/// Components as kernels of f^Delta(rho(a)), one per orbit Delta of <p, -1>
/// on Z_n; the orbits {0} and {n/2} are split further by the eigenvalue of b.
inline std::vector<IsotypicComponent> decompose_dihedral(const HomologyModule& q, const GroupData& group) {
  const auto gens = chartab::dihedral_generators(group);
  const std::uint64_t n = gens.n, p = q.p();
  if ((2 * n) % p == 0) throw ModularCaseUnsupported("p divides 2n");
  const auto& f = q.field();
  const Matrix& A = q.action(gens.a);
  const Matrix& B = q.action(gens.b);
  const Matrix I = Matrix::identity(f, q.dim());

  const auto factors = gf::factor_xn_minus_1(n, p);
  std::vector<IsotypicComponent> out;
  auto add = [&](std::string label, Subspace s, unsigned d) {
    if (s.dim() == 0) return;
    IsotypicComponent c;
    c.labels = {std::move(label)};
    c.subspace = std::move(s);
    c.irreducible_dim = d;
    detail::finish_component(c);
    out.push_back(std::move(c));
  };
  for (const auto& delta : gf::coset_orbits(n, p)) {
    gf::Polynomial fd = gf::Polynomial::constant(f, 1);
    for (const auto& cf : factors)
      if (std::binary_search(delta.members.begin(), delta.members.end(), cf.orbit.members.front()))
        fd = fd * cf.factor;
    verify(fd.degree() == static_cast<int>(delta.size()), "f^Delta has the wrong degree");
    Subspace k = detail::kernel(detail::evaluate(fd, A));
    const std::uint64_t rep = delta.members.front();
    if (rep == 0 || (n % 2 == 0 && rep == n / 2)) {
      Subspace plus = intersect(k, detail::kernel(B - I));
      Subspace minus = intersect(k, detail::kernel(B + I));
      verify(plus.dim() + minus.dim() == k.dim(), "b does not split the eigenvalue +-1 component");
      add(rep == 0 ? "chi1" : "chi3", plus, 1);
      add(rep == 0 ? "chi2" : "chi4", minus, 1);
    } else {
      add("xi" + std::to_string(rep), k, static_cast<unsigned>(delta.size()));
    }
  }
  return out;
}

/// Finds an irreducible seed W inside the component, End_G(W), and an E-basis
/// of Hom_G(W, component). With multiplicity 2 and a central antipodal
/// involution c, the basis is (phi_inf, phi_0 = c phi_inf).
inline void endo_and_hom(IsotypicComponent& comp, const HomologyModule& q,
                         const std::optional<Matrix>& antipodal = std::nullopt,
                         std::optional<Vector> seed = std::nullopt) {
  const auto& f = q.field();
  const auto gens = q.generators();
  const std::uint64_t p = q.p();

  // Spin a vector; while the span is reducible, cut it down with the kernel
  // of a singular nonzero endomorphism.
  if (!seed) seed = comp.subspace.vector(0);
  verify(comp.subspace.contains(*seed), comp.label() + ": seed outside the component");
  detail::CyclicBasis U = detail::cyclic_basis(gens, *seed, f);
  constexpr std::uint64_t kSearchLimit = 200000;
  while (U.dim() > comp.irreducible_dim) {
    auto endo = detail::endomorphisms(U, gens);
    std::optional<Vector> kernel_vec;
    const std::uint64_t limit = endo.size() >= 20 ? kSearchLimit : std::min<std::uint64_t>(
        kSearchLimit, static_cast<std::uint64_t>(std::pow(static_cast<double>(p), static_cast<double>(endo.size()))));
    for (std::uint64_t idx = 1; idx < limit && !kernel_vec; ++idx) {
      Matrix x = detail::combination(endo, detail::digits(idx, p, endo.size()), f);
      auto ns = x.nullspace();
      if (!ns.empty() && !x.is_zero()) kernel_vec = ns.front();
    }
    verify(kernel_vec.has_value(), comp.label() + ": no singular endomorphism found to split the seed");
    U = detail::cyclic_basis(gens, U.ambient(*kernel_vec), f);
  }
  verify(U.dim() == comp.irreducible_dim, comp.label() + ": seed module has the wrong dimension");

  comp.seed_vectors = U.vectors;
  comp.seed = U.space;
  comp.endo_basis = detail::endomorphisms(U, gens);
  comp.endo_degree = static_cast<unsigned>(comp.endo_basis.size());
  for (const auto& e : comp.endo_basis)
    verify(e.rank() == U.dim(), comp.label() + ": End(W) is not a division algebra");
  verify(comp.irreducible_dim % comp.endo_degree == 0, comp.label() + ": s does not divide d");

  // Hom(W, component), with maps written as n x d ambient matrices.
  const Subspace& C = comp.subspace;
  std::vector<Matrix> cgens;
  for (const auto& g : gens) cgens.push_back(C.restrict(g));
  std::vector<Matrix> homs;
  for (const auto& x : detail::equivariant_maps(U, gens, cgens)) {
    Matrix amb(f, q.dim(), U.dim());
    for (std::size_t i = 0; i < U.dim(); ++i) {
      Vector col = C.combine(x.column(i));
      for (std::size_t r = 0; r < q.dim(); ++r) amb(r, i) = col[r];
    }
    homs.push_back(std::move(amb));
  }
  verify(homs.size() == static_cast<std::size_t>(comp.multiplicity) * comp.endo_degree,
         comp.label() + ": dim Hom(W, component) != m s");

  // E-basis, greedily (or the antipodal pair for m = 2)
  auto e_span_adds = [&](EchelonBuilder& eb, const Matrix& phi) {
    bool grew = false;
    for (const auto& e : comp.endo_basis) grew = eb.add((phi * e).data()) || grew;
    return grew;
  };
  comp.hom_basis.clear();
  if (comp.multiplicity == 2 && antipodal) {
    for (const auto& phi : homs) {
      EchelonBuilder eb(f, q.dim() * U.dim());
      Matrix cphi = *antipodal * phi;
      e_span_adds(eb, phi);
      e_span_adds(eb, cphi);
      if (eb.dim() == 2 * comp.endo_degree) {
        comp.hom_basis = {phi, cphi};
        break;
      }
    }
  }
  if (comp.hom_basis.empty()) {
    EchelonBuilder eb(f, q.dim() * U.dim());
    for (const auto& phi : homs) {
      if (comp.hom_basis.size() == comp.multiplicity) break;
      if (!eb.add(phi.data())) continue;
      // eb now holds phi itself; add the rest of its E-multiples
      for (std::size_t t = 1; t < comp.endo_basis.size(); ++t) eb.add((phi * comp.endo_basis[t]).data());
      comp.hom_basis.push_back(phi);
    }
  }
  verify(comp.hom_basis.size() == comp.multiplicity, comp.label() + ": could not choose an E-basis of Hom");
  Subspace total = q.zero();
  for (const auto& phi : comp.hom_basis) total = sum(total, detail::column_space(phi));
  verify(total == comp.subspace, comp.label() + ": Hom basis images do not span the component");
}

/// Full decomposition of Q: idempotents for A4/S4/A5, kernels for D_n; then
/// seed, End and Hom for every component, with invariance and completeness checked.
inline std::vector<IsotypicComponent> decompose(const HomologyModule& q, const GroupData& group) {
  std::vector<IsotypicComponent> comps;
  if (group.family().is_dihedral_group()) comps = decompose_dihedral(q, group);
  else comps = decompose_idempotent(q, group, chartab::bind_polyhedral(group));

  std::optional<Matrix> anti;
  if (auto c = group.antipodal()) anti = q.matrix_of(*c);
  std::size_t total = 0;
  std::vector<Vector> cols;
  for (auto& c : comps) {
    verify(q.is_submodule(c.subspace), c.label() + ": component is not G-invariant");
    total += c.dim();
    for (const auto& v : c.subspace.vectors()) cols.push_back(v);
  }
  const auto& f = q.field();
  Matrix adapted = Matrix::from_columns(f, q.dim(), cols);
  verify(total == q.dim() && adapted.rank() == q.dim(), "components do not form a direct sum decomposition of Q");

  // seed: projection of the first standard basis vector with a nonzero part in the component
  const Matrix to_adapted = adapted.inverse();
  std::size_t offset = 0;
  for (auto& c : comps) {
    std::optional<Vector> seed;
    for (std::size_t i = 0; i < q.dim() && !seed; ++i) {
      Vector coords = to_adapted.column(i);
      Vector part(c.dim());
      std::copy_n(coords.begin() + static_cast<std::ptrdiff_t>(offset), c.dim(), part.begin());
      if (!is_zero_vector(part)) seed = c.subspace.combine(part);
    }
    endo_and_hom(c, q, anti, seed);
    offset += c.dim();
  }
  return comps;
}

}  // namespace platocover::decompose
