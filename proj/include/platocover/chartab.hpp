#pragma once

// Ordinary character tables of A4, S4, A5 and D_n with exact values, matched
// against the conjugacy classes of a computed GroupData.

#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "platocover/errors.hpp"
#include "platocover/gf.hpp"
#include "platocover/maps.hpp"

namespace platocover::chartab {

// Compare Rational values only against Rational or via numerator(): boost 1.74's
// mixed rational/int operator== recurses forever under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;
using gf::PrimeField;
using gf::Residue;

inline Residue reduce_rational(const Rational& r, const PrimeField& f) {
  if (r.denominator() % f.modulus() == 0) throw ModularCaseUnsupported("denominator divisible by p");
  return f.mul(f.reduce(r.numerator()), f.inv(f.reduce(r.denominator())));
}

/// a + b·sqrt(d) with rational a, b; d = 0 marks a rational value.
class QuadraticValue {
public:
  QuadraticValue() = default;
  QuadraticValue(std::int64_t n) : a_(n) {}  // NOLINT: integers convert implicitly
  QuadraticValue(Rational a, Rational b, int d) : a_(a), b_(b), d_(d) { normalize(); }

  Rational rational_part() const { return a_; }
  Rational surd_part() const { return b_; }
  int radicand() const { return d_; }
  bool is_rational() const { return b_.numerator() == 0; }

  std::optional<std::int64_t> as_integer() const {
    if (!is_rational() || a_.denominator() != 1) return std::nullopt;
    return a_.numerator();
  }

  /// Complex conjugate.
  QuadraticValue conj() const { return d_ < 0 ? QuadraticValue(a_, -b_, d_) : *this; }
  /// Image under sqrt(d) -> -sqrt(d).
  QuadraticValue galois() const { return QuadraticValue(a_, -b_, d_); }

  friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
    return QuadraticValue(x.a_ + y.a_, x.b_ + y.b_, common(x, y));
  }
  friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
    return QuadraticValue(x.a_ - y.a_, x.b_ - y.b_, common(x, y));
  }
  friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
    const int d = common(x, y);
    return QuadraticValue(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadraticValue operator/(const QuadraticValue& x, std::int64_t k) {
    return QuadraticValue(x.a_ / k, x.b_ / k, x.d_);
  }
  bool operator==(const QuadraticValue& o) const { return a_ == o.a_ && b_ == o.b_ && (b_.numerator() == 0 || d_ == o.d_); }

  /// Residue mod p; irrational values need a square root of d in F_p.
  Residue reduce(const PrimeField& f, std::optional<Residue> sqrt_d = std::nullopt) const {
    Residue r = reduce_rational(a_, f);
    if (b_.numerator() == 0) return r;
    if (!sqrt_d) throw InvalidArgument("reduce: no square root of " + std::to_string(d_) + " supplied");
    return f.add(r, f.mul(reduce_rational(b_, f), *sqrt_d));
  }

  std::string to_string() const {
    std::ostringstream os;
    auto put = [&](const Rational& r) {
      os << r.numerator();
      if (r.denominator() != 1) os << "/" << r.denominator();
    };
    if (b_.numerator() == 0) {
      put(a_);
      return os.str();
    }
    if (a_.numerator() != 0) {
      put(a_);
      os << (b_.numerator() < 0 ? " - " : " + ");
    } else if (b_.numerator() < 0) {
      os << "-";
    }
    Rational mag = b_.numerator() < 0 ? -b_ : b_;
    if (mag != Rational(1)) {
      put(mag);
      os << "*";
    }
    os << "sqrt(" << d_ << ")";
    return os.str();
  }

private:
  static int common(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.b_.numerator() != 0 && y.b_.numerator() != 0 && x.d_ != y.d_) throw InvalidArgument("QuadraticValue: mixed radicands");
    return x.b_.numerator() != 0 ? x.d_ : y.d_;
  }
  void normalize() {
    if (b_.numerator() == 0) d_ = 0;
  }

  Rational a_{0}, b_{0};
  int d_ = 0;
};

/// Element of Z[zeta_n], stored as sum c_k zeta^k (k mod n), compared modulo Phi_n.
class CyclotomicValue {
public:
  CyclotomicValue() = default;
  CyclotomicValue(std::int64_t v) : n_(1), c_{v} {}  // NOLINT: integers convert implicitly
  static CyclotomicValue zeta_power(std::uint64_t n, std::int64_t k) {
    CyclotomicValue z;
    z.n_ = n;
    z.c_.assign(n, 0);
    z.c_[((k % static_cast<std::int64_t>(n)) + n) % n] = 1;
    return z;
  }

  std::uint64_t order() const { return n_; }

  CyclotomicValue conj() const {
    CyclotomicValue r = *this;
    for (std::uint64_t k = 0; k < n_; ++k) r.c_[(n_ - k) % n_] = c_[k];
    return r;
  }

  friend CyclotomicValue operator+(const CyclotomicValue& x, const CyclotomicValue& y) {
    auto [a, b] = lift(x, y);
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    return a;
  }
  friend CyclotomicValue operator-(const CyclotomicValue& x, const CyclotomicValue& y) {
    auto [a, b] = lift(x, y);
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] -= b.c_[k];
    return a;
  }
  friend CyclotomicValue operator*(const CyclotomicValue& x, const CyclotomicValue& y) {
    if (x.n_ == 1 || y.n_ == 1) {
      CyclotomicValue r = x.n_ == 1 ? y : x;
      const std::int64_t k = x.n_ == 1 ? x.c_[0] : y.c_[0];
      for (auto& c : r.c_) c *= k;
      return r;
    }
    auto [a, b] = lift(x, y);
    CyclotomicValue r;
    r.n_ = a.n_;
    r.c_.assign(a.n_, 0);
    for (std::uint64_t i = 0; i < a.n_; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::uint64_t j = 0; j < a.n_; ++j) r.c_[(i + j) % a.n_] += a.c_[i] * b.c_[j];
    }
    return r.canonical();
  }
  bool operator==(const CyclotomicValue& o) const {
    auto [a, b] = lift(*this, o);
    return a.reduced() == b.reduced();
  }

  std::optional<std::int64_t> as_integer() const {
    gf::IntPolynomial r = reduced();
    if (r.degree() > 0) return std::nullopt;
    return r.coeff(0);
  }

  /// Residue mod p, when the value is a rational integer.
  Residue reduce(const PrimeField& f, std::optional<Residue> = std::nullopt) const {
    auto v = as_integer();
    if (!v) throw InvalidArgument("CyclotomicValue::reduce: value is not rational");
    return f.reduce(*v);
  }

  std::string to_string() const {
    auto v = as_integer();
    if (v) return std::to_string(*v);
    return reduced().to_string('z');
  }

private:
  gf::IntPolynomial reduced() const {
    gf::IntPolynomial p{c_};
    if (n_ <= 1) return p;
    return divmod_monic(p, gf::cyclotomic_polynomial(n_)).second;
  }
  // Keeps coefficients small: representative of degree < phi(n) in the power basis.
  CyclotomicValue canonical() const {
    if (n_ <= 1) return *this;
    CyclotomicValue r;
    r.n_ = n_;
    r.c_.assign(n_, 0);
    auto red = reduced();
    for (std::size_t k = 0; k < red.coeffs.size(); ++k) r.c_[k] = red.coeffs[k];
    return r;
  }
  CyclotomicValue at_order(std::uint64_t n) const {
    if (n == n_) return *this;
    CyclotomicValue r;
    r.n_ = n;
    r.c_.assign(n, 0);
    const std::uint64_t step = n / n_;
    for (std::uint64_t k = 0; k < n_; ++k) r.c_[k * step] = c_[k];
    return r;
  }
  static std::pair<CyclotomicValue, CyclotomicValue> lift(const CyclotomicValue& x, const CyclotomicValue& y) {
    std::uint64_t n = std::max(x.n_, y.n_);
    if (n % x.n_ != 0 || n % y.n_ != 0) throw InvalidArgument("CyclotomicValue: incompatible orders");
    return {x.at_order(n), y.at_order(n)};
  }

  std::uint64_t n_ = 1;
  std::vector<std::int64_t> c_{0};
};

struct ClassInfo {
  std::string label;
  std::size_t size = 1;
  unsigned element_order = 1;
};

/// Two algebraically conjugate rows; they are realized over F_p iff d is a square mod p.
struct GaloisPair {
  std::size_t first = 0, second = 0;
  int radicand = 0;
};

template <class V>
struct CharacterTable {
  std::string group;
  std::size_t order = 0;
  std::vector<ClassInfo> classes;
  std::vector<std::string> rows;
  std::vector<std::vector<V>> values;  // values[row][column]
  std::vector<GaloisPair> pairs;

  std::size_t row_index(const std::string& name) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == name) return i;
    throw InvalidArgument(group + ": no character named " + name);
  }
  unsigned degree(std::size_t row) const { return static_cast<unsigned>(*values[row][0].as_integer()); }

  std::optional<GaloisPair> pair_of(std::size_t row) const {
    for (const auto& gp : pairs)
      if (gp.first == row || gp.second == row) return gp;
    return std::nullopt;
  }

  /// <chi_i, chi_j> * |G|
  V inner_times_order(std::size_t i, std::size_t j) const {
    V s(0);
    for (std::size_t c = 0; c < classes.size(); ++c)
      s = s + V(static_cast<std::int64_t>(classes[c].size)) * values[i][c] * values[j][c].conj();
    return s;
  }

  bool rows_orthonormal() const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i; j < rows.size(); ++j)
        if (!(inner_times_order(i, j) == V(i == j ? static_cast<std::int64_t>(order) : 0))) return false;
    return true;
  }

  void verify_orthogonality() const { verify(rows_orthonormal(), group + ": character table rows are not orthonormal"); }
};

namespace detail {

inline QuadraticValue q(Rational a, Rational b, int d) { return QuadraticValue(a, b, d); }

}  // namespace detail

// omega = (-1 + sqrt(-3))/2
inline CharacterTable<QuadraticValue> table_A4() {
  using detail::q;
  const QuadraticValue w = q(Rational(-1, 2), Rational(1, 2), -3), wb = w.conj();
  CharacterTable<QuadraticValue> t;
  t.group = "A4";
  t.order = 12;
  t.classes = {{"1", 1, 1}, {"(..)(..)", 3, 2}, {"(...)+", 4, 3}, {"(...)-", 4, 3}};
  t.rows = {"chi1", "chi2", "chi3", "chi4"};
  t.values = {{1, 1, 1, 1}, {1, 1, w, wb}, {1, 1, wb, w}, {3, -1, 0, 0}};
  t.pairs = {{1, 2, -3}};
  t.verify_orthogonality();
  return t;
}

inline CharacterTable<QuadraticValue> table_S4() {
  CharacterTable<QuadraticValue> t;
  t.group = "S4";
  t.order = 24;
  t.classes = {{"1", 1, 1}, {"(..)", 6, 2}, {"(..)(..)", 3, 2}, {"(...)", 8, 3}, {"(....)", 6, 4}};
  t.rows = {"chi1", "chi2", "chi3", "chi4", "chi5"};
  t.values = {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}};
  t.verify_orthogonality();
  return t;
}

// lambda, mu = (1 ± sqrt 5)/2
inline CharacterTable<QuadraticValue> table_A5() {
  using detail::q;
  const QuadraticValue l = q(Rational(1, 2), Rational(1, 2), 5), m = l.galois();
  CharacterTable<QuadraticValue> t;
  t.group = "A5";
  t.order = 60;
  t.classes = {{"1", 1, 1}, {"(..)(..)", 15, 2}, {"(...)", 20, 3}, {"(.....)+", 12, 5}, {"(.....)-", 12, 5}};
  t.rows = {"chi1", "chi2", "chi3", "chi4", "chi5"};
  t.values = {{1, 1, 1, 1, 1}, {3, -1, 0, l, m}, {3, -1, 0, m, l}, {4, 0, 1, -1, -1}, {5, 1, -1, 0, 0}};
  t.pairs = {{1, 2, 5}};
  t.verify_orthogonality();
  return t;
}

/// Columns: 1, a^{±j} (j = 1..floor((n-1)/2)), [a^{n/2}], then the reflection
/// class(es) a^j b (all j for odd n; even j, odd j for even n).
/// Rows: chi1, chi2, [chi3, chi4], xi_k.
inline CharacterTable<CyclotomicValue> table_dihedral(unsigned n) {
  if (n < 3) throw InvalidArgument("table_dihedral: n must be at least 3");
  const bool even = n % 2 == 0;
  const unsigned half = (n - 1) / 2;
  CharacterTable<CyclotomicValue> t;
  t.group = "D" + std::to_string(n);
  t.order = 2 * n;
  t.classes.push_back({"1", 1, 1});
  for (unsigned j = 1; j <= half; ++j)
    t.classes.push_back({"a^" + std::to_string(j), 2, static_cast<unsigned>(n / std::gcd(n, j))});
  if (even) {
    t.classes.push_back({"a^" + std::to_string(n / 2), 1, 2});
    t.classes.push_back({"b", n / 2, 2});
    t.classes.push_back({"ab", n / 2, 2});
  } else {
    t.classes.push_back({"b", n, 2});
  }
  auto rotation_value = [&](unsigned j, unsigned k) {
    return CyclotomicValue::zeta_power(n, static_cast<std::int64_t>(j) * k) +
           CyclotomicValue::zeta_power(n, -static_cast<std::int64_t>(j) * k);
  };
  const std::size_t cols = t.classes.size();
  auto add_row = [&](std::string name, auto value_of) {
    t.rows.push_back(std::move(name));
    std::vector<CyclotomicValue> r;
    for (std::size_t c = 0; c < cols; ++c) r.push_back(value_of(c));
    t.values.push_back(std::move(r));
  };
  // column c: 0 identity, 1..half rotations a^c, then a^{n/2} (even), then reflections
  auto rot_exp = [&](std::size_t c) -> std::optional<unsigned> {
    if (c <= half) return static_cast<unsigned>(c);
    if (even && c == half + 1) return n / 2;
    return std::nullopt;
  };
  auto refl_parity = [&](std::size_t c) { return even ? static_cast<int>(c - (half + 2)) : 0; };
  add_row("chi1", [&](std::size_t) { return CyclotomicValue(1); });
  add_row("chi2", [&](std::size_t c) { return CyclotomicValue(rot_exp(c) ? 1 : -1); });
  if (even) {
    add_row("chi3", [&](std::size_t c) {
      auto j = rot_exp(c);
      return CyclotomicValue(j ? (*j % 2 ? -1 : 1) : (refl_parity(c) ? -1 : 1));
    });
    add_row("chi4", [&](std::size_t c) {
      auto j = rot_exp(c);
      return CyclotomicValue(j ? (*j % 2 ? -1 : 1) : (refl_parity(c) ? 1 : -1));
    });
  }
  for (unsigned k = 1; k <= half; ++k)
    add_row("xi" + std::to_string(k), [&, k](std::size_t c) {
      auto j = rot_exp(c);
      return j ? rotation_value(*j, k) : CyclotomicValue(0);
    });
  return t;
}

/// Generators a (rotation of order n) and b (involution) with G = D_n.
struct DihedralGenerators {
  std::size_t a = 0, b = 0;
  unsigned n = 0;
  std::vector<unsigned> exponent;   // g = a^k or g = a^k b
  std::vector<bool> is_reflection;
};

/// Dihedron: a = z rotates the faces, b = x; hosohedron: a = x, b = z fixes a face.
inline DihedralGenerators dihedral_generators(const maps::GroupData& g) {
  const auto& fam = g.family();
  if (!fam.is_dihedral_group()) throw InvalidArgument(fam.name() + ": not a dihedral family");
  DihedralGenerators d;
  d.n = fam.param;
  d.a = fam.kind == maps::FamilyKind::dihedron ? g.gen_z() : g.gen_x();
  d.b = fam.kind == maps::FamilyKind::dihedron ? g.gen_x() : g.gen_z();
  verify(g.element_order(d.a) == d.n && g.element_order(d.b) == 2, "dihedral generators have wrong orders");
  d.exponent.assign(g.order(), 0);
  d.is_reflection.assign(g.order(), false);
  std::size_t ak = 0;
  for (unsigned k = 0; k < d.n; ++k) {
    d.exponent[ak] = k;
    const std::size_t akb = g.multiply(ak, d.b);
    d.exponent[akb] = k;
    d.is_reflection[akb] = true;
    ak = g.multiply(ak, d.a);
  }
  return d;
}

/// A character table together with the column of each group element.
template <class V>
struct BoundTable {
  CharacterTable<V> table;
  std::vector<std::size_t> column_of_element;

  const V& value(std::size_t row, std::size_t element) const { return table.values[row][column_of_element[element]]; }
};

namespace detail {

template <class V>
BoundTable<V> bind_by_invariants(const maps::GroupData& g, CharacterTable<V> t) {
  // "+" class of a conjugate pair: class of the first of z, x, y with that order
  std::vector<std::size_t> col_of_class(g.classes().size(), SIZE_MAX);
  std::vector<bool> used(t.classes.size(), false);
  for (std::size_t ci = 0; ci < g.classes().size(); ++ci) {
    const auto& cls = g.classes()[ci];
    std::vector<std::size_t> cand;
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      if (t.classes[c].size == cls.size() && t.classes[c].element_order == cls.element_order) cand.push_back(c);
    if (cand.empty()) throw VerificationFailure(t.group + ": no column matches a class of " + g.family().name());
    if (cand.size() == 1) {
      col_of_class[ci] = cand[0];
      continue;
    }
    verify(cand.size() == 2, t.group + ": ambiguous class matching");
    std::optional<std::size_t> plus_class;
    for (auto gen : {g.gen_z(), g.gen_x(), g.gen_y()}) {
      if (g.element_order(gen) == cls.element_order) {
        plus_class = g.class_of(gen);
        break;
      }
    }
    verify(plus_class.has_value(), t.group + ": no generator fixes the '+' class");
    col_of_class[ci] = *plus_class == ci ? cand[0] : cand[1];
  }
  for (auto c : col_of_class) {
    verify(!used[c], t.group + ": two classes matched to one column");
    used[c] = true;
  }
  BoundTable<V> b{std::move(t), {}};
  for (std::size_t e = 0; e < g.order(); ++e) b.column_of_element.push_back(col_of_class[g.class_of(e)]);
  return b;
}

}  // namespace detail

inline BoundTable<QuadraticValue> bind_polyhedral(const maps::GroupData& g) {
  switch (g.order()) {
    case 12: return detail::bind_by_invariants(g, table_A4());
    case 24: return detail::bind_by_invariants(g, table_S4());
    case 60: return detail::bind_by_invariants(g, table_A5());
    default: throw InvalidArgument(g.family().name() + ": not a polyhedral group");
  }
}

inline BoundTable<CyclotomicValue> bind_dihedral(const maps::GroupData& g) {
  const auto d = dihedral_generators(g);
  const unsigned n = d.n, half = (n - 1) / 2;
  BoundTable<CyclotomicValue> b{table_dihedral(n), {}};
  for (std::size_t e = 0; e < g.order(); ++e) {
    const unsigned k = d.exponent[e];
    std::size_t col;
    if (d.is_reflection[e]) col = n % 2 ? half + 1 : half + 2 + k % 2;
    else if (k == 0) col = 0;
    else col = std::min(k, n - k);  // a^{n/2} lands on half + 1 for even n
    b.column_of_element.push_back(col);
  }
  // sanity: column sizes agree with the table
  std::vector<std::size_t> count(b.table.classes.size(), 0);
  for (auto c : b.column_of_element) ++count[c];
  for (std::size_t c = 0; c < count.size(); ++c)
    verify(count[c] == b.table.classes[c].size, b.table.group + ": class sizes disagree with the table");
  return b;
}

/// Fixed points of each group element on the given puncture class.
inline std::vector<std::int64_t> permutation_character(const maps::GroupData& g, maps::PunctureClass c) {
  std::vector<std::int64_t> out;
  for (const auto& e : g.elements()) out.push_back(static_cast<std::int64_t>(maps::fixed_points(e, c)));
  return out;
}

/// (1/|H|) sum_{h in H} chi(h), required to be a non-negative integer.
template <class V>
unsigned multiplicity_by_H_average(const BoundTable<V>& bt, std::size_t row, const std::vector<std::size_t>& H) {
  V s(0);
  for (auto h : H) s = s + bt.value(row, h);
  auto total = s.as_integer();
  if (!total || *total % static_cast<std::int64_t>(H.size()) != 0 || *total < 0)
    throw VerificationFailure("multiplicity_by_H_average: non-integral average for " + bt.table.rows[row]);
  return static_cast<unsigned>(*total / static_cast<std::int64_t>(H.size()));
}

/// Multiplicities (chi_i, theta) of a rational class function given per element.
template <class V>
std::vector<unsigned> decompose_class_function(const BoundTable<V>& bt, const std::vector<std::int64_t>& theta) {
  std::vector<unsigned> out;
  const auto order = static_cast<std::int64_t>(bt.table.order);
  for (std::size_t r = 0; r < bt.table.rows.size(); ++r) {
    V s(0);
    for (std::size_t e = 0; e < theta.size(); ++e) s = s + bt.value(r, e).conj() * V(theta[e]);
    auto total = s.as_integer();
    if (!total || *total % order != 0 || *total < 0)
      throw VerificationFailure("class function is not a character of " + bt.table.group);
    out.push_back(static_cast<unsigned>(*total / order));
  }
  return out;
}

/// Orders labels like chi2 < chi10 < xi1 < xi2 < xi10.
struct LabelLess {
  bool operator()(const std::string& a, const std::string& b) const {
    auto split = [](const std::string& s) {
      std::size_t i = 0;
      while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::uint64_t num = i < j ? std::stoull(s.substr(i, j - i)) : 0;
      return std::make_tuple(s.substr(0, i), num, s.substr(j));
    };
    return split(a) < split(b);
  }
};

/// Character names with multiplicities.
using CharacterMultiset = std::map<std::string, unsigned, LabelLess>;

/// Character of Q: the permutation characters of the branch classes summed, minus chi1.
template <class V>
CharacterMultiset homology_character(const maps::GroupData& g, const BoundTable<V>& bt,
                                     const std::vector<maps::PunctureClass>& branch) {
  if (branch.empty()) throw InvalidArgument("homology_character: empty branch set");
  std::vector<std::int64_t> theta(g.order(), -1);
  for (auto c : branch) {
    auto pi = permutation_character(g, c);
    for (std::size_t e = 0; e < theta.size(); ++e) theta[e] += pi[e];
  }
  auto mult = decompose_class_function(bt, theta);
  CharacterMultiset out;
  for (std::size_t r = 0; r < mult.size(); ++r)
    if (mult[r]) out[bt.table.rows[r]] = mult[r];
  return out;
}

inline CharacterMultiset homology_character(const maps::GroupData& g, const std::vector<maps::PunctureClass>& branch) {
  if (g.family().is_dihedral_group()) return homology_character(g, bind_dihedral(g), branch);
  return homology_character(g, bind_polyhedral(g), branch);
}

/// Irreducible degree of a named character of the group of g.
inline unsigned character_degree(const maps::GroupData& g, const std::string& name) {
  if (g.family().is_dihedral_group()) return name.rfind("xi", 0) == 0 ? 2 : 1;
  auto bt = bind_polyhedral(g);
  return bt.table.degree(bt.table.row_index(name));
}

inline std::string to_string(const CharacterMultiset& m) {
  std::string s;
  for (const auto& [name, k] : m) {
    if (!s.empty()) s += "+";
    if (k > 1) s += std::to_string(k);
    s += name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace platocover::chartab
