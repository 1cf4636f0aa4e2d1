#pragma once

// Platonic maps as dart structures, and their rotation groups G = Aut+ M and
// full automorphism groups A = Aut M acting on vertices, edges and faces.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "platocover/errors.hpp"

namespace platocover::maps {

using Perm = std::vector<std::uint32_t>;

enum class FamilyKind { tetrahedron, cube, octahedron, dodecahedron, icosahedron, dihedron, hosohedron };

/// The Platonic map {n, m}: n-gonal faces, m-valent vertices.
struct MapFamily {
  FamilyKind kind = FamilyKind::tetrahedron;
  unsigned param = 0;  // only for dihedron / hosohedron

  static MapFamily tetrahedron() { return {FamilyKind::tetrahedron, 0}; }
  static MapFamily cube() { return {FamilyKind::cube, 0}; }
  static MapFamily octahedron() { return {FamilyKind::octahedron, 0}; }
  static MapFamily dodecahedron() { return {FamilyKind::dodecahedron, 0}; }
  static MapFamily icosahedron() { return {FamilyKind::icosahedron, 0}; }
  static MapFamily dihedron(unsigned n) { return {FamilyKind::dihedron, n}; }
  static MapFamily hosohedron(unsigned n) { return {FamilyKind::hosohedron, n}; }

  /// Parses "cube", "dihedron:7", "hosohedron:95", ...
  static MapFamily parse(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    unsigned param = 0;
    if (colon != std::string::npos) {
      try {
        std::size_t used = 0;
        param = static_cast<unsigned>(std::stoul(s.substr(colon + 1), &used));
        if (used != s.size() - colon - 1) throw InvalidArgument("trailing characters");
      } catch (const std::exception&) {
        throw InvalidArgument("bad map parameter in '" + s + "'");
      }
    }
    MapFamily f;
    if (head == "tetrahedron") f = tetrahedron();
    else if (head == "cube") f = cube();
    else if (head == "octahedron") f = octahedron();
    else if (head == "dodecahedron") f = dodecahedron();
    else if (head == "icosahedron") f = icosahedron();
    else if (head == "dihedron") f = dihedron(param);
    else if (head == "hosohedron") f = hosohedron(param);
    else throw InvalidArgument("unknown map family '" + head + "'");
    if (f.parametric() != (colon != std::string::npos))
      throw InvalidArgument("map '" + s + "': parameter required exactly for dihedron and hosohedron");
    f.validate();
    return f;
  }

  bool parametric() const { return kind == FamilyKind::dihedron || kind == FamilyKind::hosohedron; }

  void validate() const {
    if (parametric() && param < 3)
      throw InvalidArgument(name() + ": parameter must be at least 3");
  }

  /// Face size n.
  unsigned face_size() const {
    switch (kind) {
      case FamilyKind::tetrahedron: return 3;
      case FamilyKind::cube: return 4;
      case FamilyKind::octahedron: return 3;
      case FamilyKind::dodecahedron: return 5;
      case FamilyKind::icosahedron: return 3;
      case FamilyKind::dihedron: return param;
      case FamilyKind::hosohedron: return 2;
    }
    return 0;
  }
  /// Vertex valency m.
  unsigned valency() const {
    switch (kind) {
      case FamilyKind::tetrahedron: return 3;
      case FamilyKind::cube: return 3;
      case FamilyKind::octahedron: return 4;
      case FamilyKind::dodecahedron: return 3;
      case FamilyKind::icosahedron: return 5;
      case FamilyKind::dihedron: return 2;
      case FamilyKind::hosohedron: return param;
    }
    return 0;
  }

  MapFamily dual() const {
    switch (kind) {
      case FamilyKind::tetrahedron: return tetrahedron();
      case FamilyKind::cube: return octahedron();
      case FamilyKind::octahedron: return cube();
      case FamilyKind::dodecahedron: return icosahedron();
      case FamilyKind::icosahedron: return dodecahedron();
      case FamilyKind::dihedron: return hosohedron(param);
      case FamilyKind::hosohedron: return dihedron(param);
    }
    return *this;
  }

  bool is_dihedral_group() const { return parametric(); }

  std::string name() const {
    switch (kind) {
      case FamilyKind::tetrahedron: return "tetrahedron";
      case FamilyKind::cube: return "cube";
      case FamilyKind::octahedron: return "octahedron";
      case FamilyKind::dodecahedron: return "dodecahedron";
      case FamilyKind::icosahedron: return "icosahedron";
      case FamilyKind::dihedron: return "dihedron:" + std::to_string(param);
      case FamilyKind::hosohedron: return "hosohedron:" + std::to_string(param);
    }
    return "?";
  }

  bool operator==(const MapFamily&) const = default;
};

enum class PunctureClass { vertices = 0, edges = 1, faces = 2 };

inline constexpr std::array<PunctureClass, 3> kAllClasses{PunctureClass::vertices, PunctureClass::edges,
                                                          PunctureClass::faces};

inline std::string to_string(PunctureClass c) {
  switch (c) {
    case PunctureClass::vertices: return "vertices";
    case PunctureClass::edges: return "edges";
    case PunctureClass::faces: return "faces";
  }
  return "?";
}

inline PunctureClass parse_puncture_class(const std::string& s) {
  if (s == "vertices" || s == "V") return PunctureClass::vertices;
  if (s == "edges" || s == "E") return PunctureClass::edges;
  if (s == "faces" || s == "F") return PunctureClass::faces;
  throw InvalidArgument("unknown branch class '" + s + "'");
}

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint32_t>(i);
  return c;
}

inline bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

/// Orbit index of every point under a permutation, orbits numbered by least point.
inline std::vector<std::uint32_t> orbit_labels(const Perm& p, std::uint32_t* count = nullptr) {
  std::vector<std::uint32_t> label(p.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (label[i] != UINT32_MAX) continue;
    for (std::size_t j = i; label[j] == UINT32_MAX; j = p[j]) label[j] = next;
    ++next;
  }
  if (count) *count = next;
  return label;
}

/// Oriented map on darts: sigma rotates a dart counterclockwise about its
/// vertex, alpha reverses it. Faces are the orbits of sigma∘alpha.
struct DartMap {
  Perm sigma;
  Perm alpha;
  Perm face_perm;  // sigma∘alpha
  std::vector<std::uint32_t> vertex_of, edge_of, face_of;
  std::uint32_t vertex_count = 0, edge_count = 0, face_count = 0;

  DartMap(Perm s, Perm a) : sigma(std::move(s)), alpha(std::move(a)) {
    if (sigma.size() != alpha.size()) throw InvalidArgument("DartMap: sigma/alpha size mismatch");
    for (std::size_t d = 0; d < alpha.size(); ++d)
      if (alpha[d] == d || alpha[alpha[d]] != d) throw InvalidArgument("DartMap: alpha is not a fixed-point-free involution");
    face_perm = compose(sigma, alpha);
    vertex_of = orbit_labels(sigma, &vertex_count);
    edge_of = orbit_labels(alpha, &edge_count);
    face_of = orbit_labels(face_perm, &face_count);
  }

  std::size_t dart_count() const { return sigma.size(); }
  std::uint32_t count(PunctureClass c) const {
    switch (c) {
      case PunctureClass::vertices: return vertex_count;
      case PunctureClass::edges: return edge_count;
      case PunctureClass::faces: return face_count;
    }
    return 0;
  }
  const std::vector<std::uint32_t>& labels(PunctureClass c) const {
    switch (c) {
      case PunctureClass::vertices: return vertex_of;
      case PunctureClass::edges: return edge_of;
      default: return face_of;
    }
  }
  int euler_characteristic() const {
    return static_cast<int>(vertex_count) - static_cast<int>(edge_count) + static_cast<int>(face_count);
  }
  /// Darts of each face, in traversal order starting from the least dart.
  std::vector<std::vector<std::uint32_t>> face_boundaries() const {
    std::vector<std::vector<std::uint32_t>> out(face_count);
    for (std::uint32_t d = 0; d < dart_count(); ++d) {
      auto& f = out[face_of[d]];
      if (!f.empty()) continue;
      for (std::uint32_t e = d;;) {
        f.push_back(e);
        e = face_perm[e];
        if (e == d) break;
      }
    }
    return out;
  }
};

namespace detail {

// Vertex neighbours in counterclockwise order seen from outside the solid.
inline const std::vector<std::vector<std::uint32_t>>& rotation_system(FamilyKind k) {
  static const std::vector<std::vector<std::uint32_t>> tet{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  static const std::vector<std::vector<std::uint32_t>> cube{{1, 2, 4}, {0, 5, 3}, {0, 3, 6}, {1, 7, 2},
                                                             {0, 6, 5}, {1, 4, 7}, {2, 7, 4}, {3, 5, 6}};
  static const std::vector<std::vector<std::uint32_t>> oct{{2, 4, 3, 5}, {2, 5, 3, 4}, {0, 5, 1, 4},
                                                            {0, 4, 1, 5}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  static const std::vector<std::vector<std::uint32_t>> dod{
      {9, 10, 8},  {11, 16, 9}, {10, 12, 14}, {12, 16, 17}, {8, 13, 15}, {15, 19, 11}, {14, 18, 13},
      {17, 19, 18}, {0, 14, 4},  {0, 15, 1},   {16, 2, 0},   {5, 17, 1},  {2, 3, 18},   {4, 6, 19},
      {6, 8, 2},   {4, 5, 9},   {1, 3, 10},   {3, 11, 7},   {6, 12, 7},  {13, 7, 5}};
  static const std::vector<std::vector<std::uint32_t>> ico{
      {1, 2, 6, 5, 7},  {7, 3, 8, 2, 0},  {0, 1, 8, 4, 6},  {7, 11, 9, 8, 1}, {8, 9, 10, 6, 2},  {6, 10, 11, 7, 0},
      {0, 2, 4, 10, 5}, {0, 5, 11, 3, 1}, {1, 3, 9, 4, 2},  {3, 11, 10, 4, 8}, {4, 9, 11, 5, 6}, {3, 7, 5, 10, 9}};
  switch (k) {
    case FamilyKind::tetrahedron: return tet;
    case FamilyKind::cube: return cube;
    case FamilyKind::octahedron: return oct;
    case FamilyKind::dodecahedron: return dod;
    case FamilyKind::icosahedron: return ico;
    default: throw InvalidArgument("rotation_system: not a solid");
  }
}

/// Darts of a simple graph numbered vertex by vertex in rotation order.
inline DartMap from_rotation_system(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::vector<std::uint32_t> offset(adj.size() + 1, 0);
  for (std::size_t v = 0; v < adj.size(); ++v) offset[v + 1] = offset[v] + static_cast<std::uint32_t>(adj[v].size());
  Perm sigma(offset.back()), alpha(offset.back());
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    const auto deg = static_cast<std::uint32_t>(adj[v].size());
    for (std::uint32_t k = 0; k < deg; ++k) {
      sigma[offset[v] + k] = offset[v] + (k + 1) % deg;
      const std::uint32_t w = adj[v][k];
      auto it = std::find(adj[w].begin(), adj[w].end(), v);
      if (it == adj[w].end()) throw InvalidArgument("rotation system is not symmetric");
      alpha[offset[v] + k] = offset[w] + static_cast<std::uint32_t>(it - adj[w].begin());
    }
  }
  return DartMap(std::move(sigma), std::move(alpha));
}

}  // namespace detail

/// Dart structure of a Platonic map, validated against its {n, m} symbol.
inline DartMap build_map(const MapFamily& family) {
  family.validate();
  const unsigned n = family.param;
  auto result = [&]() -> DartMap {
    switch (family.kind) {
      case FamilyKind::dihedron: {
        // n-cycle; darts 2v -> v+1 and 2v+1 -> v-1
        Perm sigma(2 * n), alpha(2 * n);
        for (std::uint32_t v = 0; v < n; ++v) {
          sigma[2 * v] = 2 * v + 1;
          sigma[2 * v + 1] = 2 * v;
          alpha[2 * v] = 2 * ((v + 1) % n) + 1;
          alpha[2 * v + 1] = 2 * ((v + n - 1) % n);
        }
        return DartMap(std::move(sigma), std::move(alpha));
      }
      case FamilyKind::hosohedron: {
        // north pole darts 0..n-1, south pole darts n..2n-1; edge k joins dart k and n+k
        Perm sigma(2 * n), alpha(2 * n);
        for (std::uint32_t k = 0; k < n; ++k) {
          sigma[k] = (k + 1) % n;
          sigma[n + k] = n + (k + n - 1) % n;
          alpha[k] = n + k;
          alpha[n + k] = k;
        }
        return DartMap(std::move(sigma), std::move(alpha));
      }
      default:
        return detail::from_rotation_system(detail::rotation_system(family.kind));
    }
  }();
  if (result.euler_characteristic() != 2) throw VerificationFailure(family.name() + ": V - E + F != 2");
  std::vector<std::uint32_t> vlen(result.vertex_count, 0), flen(result.face_count, 0);
  for (std::size_t d = 0; d < result.dart_count(); ++d) {
    ++vlen[result.vertex_of[d]];
    ++flen[result.face_of[d]];
  }
  for (auto l : vlen) verify(l == family.valency(), family.name() + ": vertex valency mismatch");
  for (auto l : flen) verify(l == family.face_size(), family.name() + ": face size mismatch");
  return result;
}

/// An automorphism of the map, on darts and on each puncture class.
struct GroupElement {
  Perm darts;
  bool reversing = false;         // orientation-reversing (in A \ G)
  std::array<Perm, 3> punctures;  // indexed by PunctureClass

  const Perm& on(PunctureClass c) const { return punctures[static_cast<int>(c)]; }
};

struct ConjugacyClass {
  std::vector<std::size_t> members;
  unsigned element_order = 1;
  std::size_t size() const { return members.size(); }
  std::size_t representative() const { return members.front(); }
};

namespace detail {

/// Extends d0 -> target to a dart permutation f with f∘alpha = alpha∘f and
/// f∘sigma = sigma^{±1}∘f; nullopt if inconsistent.
inline std::optional<Perm> propagate(const DartMap& map, std::uint32_t target, bool reversing) {
  const std::size_t n = map.dart_count();
  const Perm sigma_inv = invert(map.sigma);
  const Perm& sigma_img = reversing ? sigma_inv : map.sigma;
  Perm f(n, UINT32_MAX);
  f[0] = target;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    std::uint32_t d = stack.back();
    stack.pop_back();
    const std::array<std::pair<std::uint32_t, std::uint32_t>, 2> moves{
        std::pair{map.sigma[d], sigma_img[f[d]]}, std::pair{map.alpha[d], map.alpha[f[d]]}};
    for (auto [src, dst] : moves) {
      if (f[src] == UINT32_MAX) {
        f[src] = dst;
        stack.push_back(src);
      } else if (f[src] != dst) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (auto v : f) {
    if (v == UINT32_MAX || hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return f;
}

// A reversing automorphism sends the face on the left of d to the face on the
// left of alpha(f(d)).
inline Perm induced(const DartMap& map, const Perm& darts, PunctureClass c, bool reversing) {
  const auto& lab = map.labels(c);
  const bool flip = reversing && c == PunctureClass::faces;
  Perm out(map.count(c), UINT32_MAX);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    const std::uint32_t img = lab[flip ? map.alpha[darts[d]] : darts[d]];
    std::uint32_t& slot = out[lab[d]];
    if (slot == UINT32_MAX) slot = img;
    else if (slot != img) throw VerificationFailure("automorphism does not preserve puncture class");
  }
  return out;
}

inline GroupElement make_element(const DartMap& map, Perm darts, bool reversing = false) {
  GroupElement g;
  g.reversing = reversing;
  for (auto c : kAllClasses) g.punctures[static_cast<int>(c)] = induced(map, darts, c, reversing);
  g.darts = std::move(darts);
  return g;
}

}  // namespace detail

/// Rotation group G (acting regularly on darts) plus one orientation-reversing
/// automorphism generating A over G.
class GroupData {
public:
  GroupData(MapFamily family, DartMap map) : family_(family), map_(std::move(map)) { build(); }

  const MapFamily& family() const { return family_; }
  const DartMap& map() const { return map_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const GroupElement& reflection() const { return reflection_; }
  std::size_t gen_x() const { return gen_x_; }
  std::size_t gen_y() const { return gen_y_; }
  std::size_t gen_z() const { return gen_z_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t g) const { return class_of_[g]; }

  /// Index of the element mapping dart 0 to dart d.
  std::size_t index_of_dart_image(std::uint32_t d) const { return by_image_[d]; }

  /// g∘h
  std::size_t multiply(std::size_t g, std::size_t h) const {
    return by_image_[elements_[g].darts[elements_[h].darts[0]]];
  }
  std::size_t inverse(std::size_t g) const {
    const auto& d = elements_[g].darts;
    for (std::uint32_t i = 0; i < d.size(); ++i)
      if (d[i] == 0) return by_image_[i];
    return 0;
  }
  std::size_t power(std::size_t g, std::uint64_t k) const {
    std::size_t r = 0;
    for (std::uint64_t i = 0; i < k; ++i) r = multiply(r, g);
    return r;
  }
  unsigned element_order(std::size_t g) const {
    unsigned k = 1;
    for (std::size_t h = g; h != 0; h = multiply(h, g)) ++k;
    return k;
  }

  /// The base puncture of each class: the vertex, edge and face of dart 0.
  std::uint32_t base_puncture(PunctureClass c) const { return map_.labels(c)[0]; }

  /// The element of A \ G that is central in A, an involution, and fixes no
  /// vertex, edge or face (the antipodal map), when one exists.
  std::optional<GroupElement> antipodal() const {
    for (const auto& g : elements_) {
      Perm c = compose(g.darts, reflection_.darts);
      if (!is_identity(compose(c, c))) continue;
      bool central = true;
      for (auto gen : {gen_x_, gen_z_}) {
        const Perm& s = elements_[gen].darts;
        if (compose(c, s) != compose(s, c)) central = false;
      }
      if (!central) continue;
      GroupElement e = detail::make_element(map_, std::move(c), true);
      bool free = true;
      for (auto cls : kAllClasses) {
        const Perm& pp = e.on(cls);
        for (std::size_t i = 0; i < pp.size(); ++i)
          if (pp[i] == i) free = false;
      }
      if (free) return e;
    }
    return std::nullopt;
  }

private:
  void build();

  MapFamily family_;
  DartMap map_;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> by_image_;
  GroupElement reflection_;
  std::size_t gen_x_ = 0, gen_y_ = 0, gen_z_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

inline void GroupData::build() {
  const std::size_t n = map_.dart_count();
  elements_.clear();
  by_image_.assign(n, SIZE_MAX);
  for (std::uint32_t t = 0; t < n; ++t) {
    auto f = detail::propagate(map_, t, false);
    if (!f) continue;
    by_image_[t] = elements_.size();
    elements_.push_back(detail::make_element(map_, std::move(*f)));
  }
  if (elements_.size() != n)
    throw VerificationFailure(family_.name() + ": found " + std::to_string(elements_.size()) +
                              " orientation-preserving automorphisms, expected " + std::to_string(n));

  // An automorphism g is determined by g(0) = w(0) for a word w in sigma, alpha,
  // and g_u∘g_w = g_{w∘u}. With x: 0 -> sigma^{-1}(0), y: 0 -> alpha(0) and
  // z: 0 -> sigma(alpha(0)) this gives xyz = 1, z preserving the face of dart 0.
  const Perm sigma_inv = invert(map_.sigma);
  gen_x_ = by_image_[sigma_inv[0]];
  gen_y_ = by_image_[map_.alpha[0]];
  gen_z_ = by_image_[map_.face_perm[0]];
  verify(multiply(gen_x_, multiply(gen_y_, gen_z_)) == 0, "xyz != 1");
  verify(multiply(gen_y_, gen_y_) == 0, "y is not an involution");
  verify(element_order(gen_x_) == family_.valency(), "order of x differs from the valency");
  verify(element_order(gen_z_) == family_.face_size(), "order of z differs from the face size");
  for (auto c : kAllClasses) {
    const std::size_t gen = c == PunctureClass::vertices ? gen_x_ : c == PunctureClass::edges ? gen_y_ : gen_z_;
    verify(elements_[gen].on(c)[base_puncture(c)] == base_puncture(c), "generator does not fix its base puncture");
  }

  std::optional<Perm> refl;
  for (std::uint32_t t = 0; t < n && !refl; ++t) refl = detail::propagate(map_, t, true);
  if (!refl) throw VerificationFailure(family_.name() + ": no orientation-reversing automorphism");
  reflection_ = detail::make_element(map_, std::move(*refl), true);

  // conjugacy classes
  class_of_.assign(n, SIZE_MAX);
  classes_.clear();
  std::vector<std::size_t> inv(n);
  for (std::size_t g = 0; g < n; ++g) inv[g] = inverse(g);
  for (std::size_t g = 0; g < n; ++g) {
    if (class_of_[g] != SIZE_MAX) continue;
    ConjugacyClass cls;
    cls.element_order = element_order(g);
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t c = multiply(multiply(h, g), inv[h]);
      if (class_of_[c] == SIZE_MAX) {
        class_of_[c] = classes_.size();
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

inline GroupData build_group(const MapFamily& family) { return GroupData(family, build_map(family)); }

/// Cyclic stabilizer of the base puncture: <x> (vertices), <y> (edges), <z> (faces).
inline std::vector<std::size_t> stabilizer_H(const GroupData& group, PunctureClass c) {
  const std::size_t gen = c == PunctureClass::vertices ? group.gen_x()
                          : c == PunctureClass::edges  ? group.gen_y()
                                                       : group.gen_z();
  std::vector<std::size_t> out{0};
  for (std::size_t h = gen; h != 0; h = group.multiply(h, gen)) out.push_back(h);
  return out;
}

/// Fixed points of each group element on a puncture class.
inline std::size_t fixed_points(const GroupElement& g, PunctureClass c) {
  const Perm& p = g.on(c);
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) k += p[i] == i;
  return k;
}

}  // namespace platocover::maps
