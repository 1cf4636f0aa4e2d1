#pragma once

// The G-module Q = P/P_1 over F_p, P the permutation module on the chosen
// punctures, and the submodules that come straight from the combinatorics.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "platocover/errors.hpp"
#include "platocover/gf.hpp"
#include "platocover/linalg.hpp"
#include "platocover/maps.hpp"

namespace platocover::homology {

using maps::GroupData;
using maps::PunctureClass;

struct Puncture {
  PunctureClass cls;
  std::uint32_t index;
};

/// Punctures ordered vertices, edges, faces; coordinates drop the last one,
/// whose class is minus the sum of the others.
class HomologyModule {
public:
  const PrimeField& field() const { return field_; }
  std::uint64_t p() const { return field_.modulus(); }
  std::size_t dim() const { return punctures_.size() - 1; }
  std::size_t puncture_count() const { return punctures_.size(); }
  const std::vector<Puncture>& punctures() const { return punctures_; }
  const std::vector<PunctureClass>& branch() const { return branch_; }
  bool branched_over(PunctureClass c) const { return std::find(branch_.begin(), branch_.end(), c) != branch_.end(); }

  /// rho(g) for the element with index g.
  const Matrix& action(std::size_t g) const { return action_[g]; }
  const std::vector<Matrix>& actions() const { return action_; }
  const Matrix& x() const { return action_[gen_x_]; }
  const Matrix& z() const { return action_[gen_z_]; }
  std::vector<Matrix> generators() const { return {x(), z()}; }
  /// Plain permutation matrix of the reflection on the punctures.
  const Matrix& reflection() const { return reflection_; }

  /// Image of the i-th puncture in Q.
  const Vector& puncture_vector(std::size_t i) const { return puncture_vectors_[i]; }
  /// Indices of the punctures of one class.
  std::vector<std::size_t> punctures_of(PunctureClass c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < punctures_.size(); ++i)
      if (punctures_[i].cls == c) out.push_back(i);
    return out;
  }
  std::size_t index_of(PunctureClass c, std::uint32_t k) const {
    for (std::size_t i = 0; i < punctures_.size(); ++i)
      if (punctures_[i].cls == c && punctures_[i].index == k) return i;
    throw InvalidArgument("index_of: puncture not in module");
  }

  /// Image in Q of a vector of P (one entry per puncture).
  Vector project(const Vector& a) const {
    const std::size_t n = dim();
    Vector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = field_.sub(a[j], a[n]);
    return v;
  }

  Subspace zero() const { return Subspace::zero(field_, dim()); }
  Subspace full() const { return Subspace::full(field_, dim()); }

  /// Matrix on Q of any automorphism of the map (orientation-reversing ones
  /// act by their plain permutation matrix).
  Matrix matrix_of(const maps::GroupElement& g) const {
    const std::size_t n = dim();
    Matrix m(field_, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& pu = punctures_[i];
      const Vector& col = puncture_vectors_[offset_[static_cast<int>(pu.cls)] + g.on(pu.cls)[pu.index]];
      for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
    }
    return m;
  }

  bool is_submodule(const Subspace& s) const { return s.is_invariant(x()) && s.is_invariant(z()); }

private:
  friend HomologyModule build_homology(const GroupData&, std::vector<PunctureClass>, std::uint64_t);
  explicit HomologyModule(PrimeField f) : field_(f) {}

  PrimeField field_;
  std::vector<PunctureClass> branch_;
  std::vector<Puncture> punctures_;
  std::vector<Matrix> action_;
  Matrix reflection_{field_, 0, 0};
  std::vector<Vector> puncture_vectors_;
  std::size_t gen_x_ = 0, gen_z_ = 0;
  std::array<std::size_t, 3> offset_{0, 0, 0};
};

/// Rejects p = 2, composite p and p dividing |G|.
inline void check_prime_for_group(const GroupData& group, std::uint64_t p) {
  if (p == 2) throw EvenPrimeUnsupported("p = 2 divides |G| = " + std::to_string(group.order()));
  if (!gf::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (group.order() % p == 0)
    throw ModularCaseUnsupported("p = " + std::to_string(p) + " divides |G| = " + std::to_string(group.order()));
}

inline HomologyModule build_homology(const GroupData& group, std::vector<PunctureClass> branch, std::uint64_t p) {
  if (branch.empty()) throw InvalidArgument("build_homology: empty branch set");
  check_prime_for_group(group, p);
  std::sort(branch.begin(), branch.end());
  branch.erase(std::unique(branch.begin(), branch.end()), branch.end());

  HomologyModule q{PrimeField(p)};
  q.branch_ = branch;
  for (auto c : branch) {
    q.offset_[static_cast<int>(c)] = q.punctures_.size();
    for (std::uint32_t k = 0; k < group.map().count(c); ++k) q.punctures_.push_back({c, k});
  }
  const std::size_t N = q.punctures_.size(), n = N - 1;
  if (N < 2) throw InvalidArgument("build_homology: need at least two punctures");
  const auto& f = q.field_;

  for (std::size_t i = 0; i < N; ++i) {
    Vector e(N, 0);
    e[i] = 1;
    q.puncture_vectors_.push_back(q.project(e));
  }
  q.action_.reserve(group.order());
  for (const auto& g : group.elements()) q.action_.push_back(q.matrix_of(g));
  q.reflection_ = q.matrix_of(group.reflection());
  q.gen_x_ = group.gen_x();
  q.gen_z_ = group.gen_z();

  const Matrix I = Matrix::identity(f, n);
  verify(q.x().power(group.family().valency()) == I, "rho(x)^m != 1");
  verify(q.z().power(group.family().face_size()) == I, "rho(z)^n != 1");
  verify((q.x() * q.z()).power(2) == I, "(rho(x) rho(z))^2 != 1");
  Matrix rinv = q.reflection_.inverse();
  for (auto gen : {q.gen_x_, q.gen_z_}) {
    Matrix conj = q.reflection_ * q.action_[gen] * rinv;
    verify(std::find(q.action_.begin(), q.action_.end(), conj) != q.action_.end(),
           "reflection does not normalize the matrix group");
  }
  return q;
}

struct NamedSubmodule {
  std::string name;
  Subspace subspace;
};

/// A G-invariant partition of one puncture class.
struct BlockSystem {
  std::string name;
  std::vector<std::vector<std::uint32_t>> blocks;
};

namespace detail {

inline std::vector<bool> closure(const GroupData& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> list{0};
  in[0] = true;
  for (std::size_t head = 0; head < list.size(); ++head)
    for (auto s : gens) {
      std::size_t h = g.multiply(list[head], s);
      if (!in[h]) {
        in[h] = true;
        list.push_back(h);
      }
    }
  return in;
}

}  // namespace detail

/// Block systems of a puncture class, one per subgroup K with H < K < G,
/// found by closing H under added elements. The antipodal system is named
/// "a" and the others "b", "c", ... in order of discovery.
inline std::vector<BlockSystem> block_systems(const GroupData& group, PunctureClass c) {
  const auto H = maps::stabilizer_H(group, c);
  const std::uint32_t base = group.base_puncture(c);
  std::vector<std::vector<bool>> found;
  std::vector<std::vector<std::size_t>> gens_of;
  auto add = [&](std::vector<std::size_t> gens) {
    auto k = detail::closure(group, gens);
    std::size_t size = std::count(k.begin(), k.end(), true);
    if (size == group.order() || size == H.size()) return;
    if (std::find(found.begin(), found.end(), k) != found.end()) return;
    found.push_back(std::move(k));
    gens_of.push_back(std::move(gens));
  };
  const std::vector<std::size_t> hgen{H.size() > 1 ? H[1] : 0};
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (std::find(H.begin(), H.end(), e) != H.end()) continue;
    auto gens = hgen;
    gens.push_back(e);
    add(gens);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t e = 0; e < group.order(); ++e)
      if (!found[i][e]) {
        auto gens = gens_of[i];
        gens.push_back(e);
        add(gens);
      }

  const std::uint32_t count = group.map().count(c);
  const auto anti = group.antipodal();
  std::vector<BlockSystem> out;
  for (const auto& k : found) {
    std::vector<std::uint32_t> base_block;
    for (std::size_t e = 0; e < group.order(); ++e)
      if (k[e]) base_block.push_back(group.element(e).on(c)[base]);
    std::sort(base_block.begin(), base_block.end());
    base_block.erase(std::unique(base_block.begin(), base_block.end()), base_block.end());
    std::vector<int> block_of(count, -1);
    BlockSystem bs;
    for (const auto& g : group.elements()) {
      std::vector<std::uint32_t> img;
      for (auto b : base_block) img.push_back(g.on(c)[b]);
      std::sort(img.begin(), img.end());
      if (block_of[img[0]] >= 0) continue;
      for (auto b : img) {
        verify(block_of[b] < 0, "block_systems: overlapping blocks");
        block_of[b] = static_cast<int>(bs.blocks.size());
      }
      bs.blocks.push_back(std::move(img));
    }
    std::sort(bs.blocks.begin(), bs.blocks.end());
    bool antipodal = anti && base_block.size() == 2;
    if (antipodal)
      for (const auto& blk : bs.blocks)
        if (anti->on(c)[blk[0]] != blk[1]) antipodal = false;
    if (antipodal) bs.name = "a";
    out.push_back(std::move(bs));
  }
  char next = 'b';
  for (auto& bs : out) {
    if (!bs.name.empty()) continue;
    bs.name = next <= 'z' ? std::string(1, next) : "k" + std::to_string(next - 'a');
    ++next;
  }
  std::stable_sort(out.begin(), out.end(), [](const BlockSystem& x, const BlockSystem& y) { return x.name < y.name; });
  return out;
}

/// Q^1 when p | N; for a single branch class also Q_X (block sums) and Q_X'
/// (vectors summing to zero on every block) for each block system X, and
/// for pairs of systems Q_X + Q_Y and Q_X' & Q_Y' (intersection).
inline std::vector<NamedSubmodule> named_submodules(const HomologyModule& q, const GroupData& group) {
  std::vector<NamedSubmodule> out;
  const auto& f = q.field();
  const std::size_t N = q.puncture_count();
  if (N % q.p() == 0) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i + 1 < N; ++i) {
      Vector a(N, 0);
      a[i] = 1;
      a[i + 1] = f.neg(1);
      gens.push_back(q.project(a));
    }
    out.push_back({"Q^1", Subspace::span(f, q.dim(), gens)});
  }
  if (q.branch().size() == 1) {
    const PunctureClass c = q.branch()[0];
    std::vector<std::pair<std::string, Subspace>> sums, diffs;
    for (const auto& bs : block_systems(group, c)) {
      std::vector<Vector> s_gens, d_gens;
      for (const auto& blk : bs.blocks) {
        Vector a(N, 0);
        for (auto b : blk) a[q.index_of(c, b)] = 1;
        s_gens.push_back(q.project(a));
        for (std::size_t i = 1; i < blk.size(); ++i) {
          Vector d(N, 0);
          d[q.index_of(c, blk[0])] = 1;
          d[q.index_of(c, blk[i])] = f.neg(1);
          d_gens.push_back(q.project(d));
        }
      }
      sums.emplace_back("Q_" + bs.name, Subspace::span(f, q.dim(), s_gens));
      diffs.emplace_back("Q_" + bs.name + "'", Subspace::span(f, q.dim(), d_gens));
    }
    for (std::size_t i = 0; i < sums.size(); ++i) {
      out.push_back({sums[i].first, sums[i].second});
      out.push_back({diffs[i].first, diffs[i].second});
    }
    for (std::size_t i = 0; i < sums.size(); ++i)
      for (std::size_t j = i + 1; j < sums.size(); ++j) {
        const std::string x = sums[i].first.substr(2), y = sums[j].first.substr(2);
        out.push_back({"Q_" + x + "+Q_" + y, sum(sums[i].second, sums[j].second)});
        out.push_back({"Q_" + x + "'&Q_" + y + "'", intersect(diffs[i].second, diffs[j].second)});
      }
  }
  for (const auto& ns : out) verify(q.is_submodule(ns.subspace), ns.name + " is not G-invariant");
  return out;
}

}  // namespace platocover::homology
