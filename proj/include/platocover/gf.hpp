#pragma once

// Prime fields, their extensions, univariate polynomials, cyclotomic
// polynomials and the splitting of x^n - 1 over F_p via cyclotomic cosets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "platocover/errors.hpp"

namespace platocover::gf {

using BigInt = boost::multiprecision::cpp_int;
using Residue = std::uint32_t;

/// Deterministic trial division; inputs are small.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Order of a in (Z/m)^*; gcd(a, m) must be 1. ord mod 1 is 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1) throw InvalidArgument("multiplicative_order: gcd(a, m) != 1");
  std::uint64_t x = a, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

/// Arithmetic in F_p for an odd or even prime p < 2^31.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p) : p_(static_cast<Residue>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw InvalidArgument("PrimeField: modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  Residue modulus() const { return p_; }

  Residue reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Residue>(r);
  }
  Residue inv(Residue a) const {
    if (a % p_ == 0) throw InvalidArgument("PrimeField::inv: zero has no inverse");
    return pow(a, p_ - 2);
  }
  /// Tonelli-Shanks. Of the two roots, the even integer representative is returned.
  std::optional<Residue> sqrt(Residue a) const;

  /// Residue printed in the symmetric range (-p/2, p/2].
  std::int64_t signed_value(Residue a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField&) const = default;

private:
  Residue p_;
};

inline std::optional<Residue> PrimeField::sqrt(Residue a) const {
  a %= p_;
  if (a == 0) return Residue{0};
  if (p_ == 2) return a;
  if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
  // p - 1 = q * 2^s with q odd
  std::uint64_t q = p_ - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Residue z = 2;
  while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
  Residue m = static_cast<Residue>(s);
  Residue c = pow(z, q);
  Residue t = pow(a, q);
  Residue r = pow(a, (q + 1) / 2);
  while (t != 1) {
    Residue i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
    }
    Residue b = c;
    for (Residue j = 0; j + 1 < m - i; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r % 2 == 0 ? r : p_ - r;
}

/// A residue together with its modulus.
struct FieldElement {
  Residue value = 0;
  Residue modulus = 0;

  FieldElement() = default;
  FieldElement(std::int64_t v, const PrimeField& f) : value(f.reduce(v)), modulus(f.modulus()) {}
  bool operator==(const FieldElement&) const = default;
};

inline std::optional<FieldElement> sqrt_mod_p(const FieldElement& a) {
  PrimeField f(a.modulus);
  if (auto r = f.sqrt(a.value)) return FieldElement(*r, f);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
class Polynomial {
public:
  explicit Polynomial(const PrimeField& f) : field_(f) {}
  Polynomial(const PrimeField& f, std::vector<Residue> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= f.modulus();
    trim();
  }
  Polynomial(const PrimeField& f, std::initializer_list<std::int64_t> coeffs) : field_(f) {
    for (auto v : coeffs) c_.push_back(f.reduce(v));
    trim();
  }

  static Polynomial monomial(const PrimeField& f, std::size_t degree, Residue coeff = 1) {
    std::vector<Residue> c(degree + 1, 0);
    c[degree] = coeff;
    return Polynomial(f, std::move(c));
  }
  static Polynomial constant(const PrimeField& f, Residue v) { return Polynomial(f, std::vector<Residue>{v}); }

  const PrimeField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Residue>& coefficients() const { return c_; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Residue inv = field_.inv(leading());
    std::vector<Residue> c(c_);
    for (auto& v : c) v = field_.mul(v, inv);
    return Polynomial(field_, std::move(c));
  }

  Residue evaluate(Residue x) const {
    Residue acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const std::uint64_t p = a.field_.modulus();
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
    return Polynomial(a.field_, std::vector<Residue>(acc.begin(), acc.end()));
  }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidArgument("Polynomial division by zero");
    const auto& f = a.field_;
    std::vector<Residue> r(a.c_);
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<Residue> q(a.c_.size() - b.c_.size() + 1, 0);
    Residue inv = f.inv(b.leading());
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      Residue t = f.mul(r[i + b.degree()], inv);
      q[i] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.sub(r[i + j], f.mul(t, b.c_[j]));
    }
    return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }

  /// Human-readable, descending powers, symmetric residues: "x^4 + x^3 - 2".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      std::int64_t v = field_.signed_value(c_[i]);
      if (v == 0) continue;
      std::int64_t mag = v < 0 ? -v : v;
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << var;
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField field_;
  std::vector<Residue> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^exp mod modulus.
inline Polynomial powmod(Polynomial base, const BigInt& exp, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
  base = base % modulus;
  if (exp == 0) return result;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(exp)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (boost::multiprecision::bit_test(exp, i)) result = (result * base) % modulus;
  }
  return result;
}

/// Ben-Or test: f of degree e is irreducible iff gcd(f, x^{p^k} - x) = 1 for k <= e/2.
inline bool is_irreducible(const Polynomial& f) {
  const int e = f.degree();
  if (e < 1) return false;
  if (e == 1) return true;
  if (f.coeff(0) == 0) return false;
  const auto& field = f.field();
  const Polynomial x = Polynomial::monomial(field, 1);
  Polynomial xp = x;  // x^{p^k} mod f
  for (int k = 1; 2 * k <= e; ++k) {
    xp = powmod(xp, BigInt(field.modulus()), f);
    if (gcd(f, xp - x).degree() != 0) return false;
  }
  return true;
}

/// First monic irreducible of the given degree, scanning the lower coefficients
/// as base-p integers from 0 upward (constant term least significant).
inline Polynomial first_irreducible(const PrimeField& field, int degree) {
  if (degree < 1) throw InvalidArgument("first_irreducible: degree must be positive");
  const Residue p = field.modulus();
  std::vector<Residue> c(degree + 1, 0);
  c[degree] = 1;
  while (true) {
    Polynomial cand(field, c);
    if (is_irreducible(cand)) return cand;
    int i = 0;
    while (i < degree && ++c[i] == p) c[i++] = 0;
    if (i == degree) throw VerificationFailure("first_irreducible: search exhausted");
  }
}

// ---------------------------------------------------------------------------
// Extension fields F_{p^e} = F_p[t]/(f(t))

/// Element of F_p[t]/(f); representative has degree < e.
struct ExtFieldElement {
  Polynomial representative;
  bool operator==(const ExtFieldElement& o) const { return representative == o.representative; }
};

class ExtensionField {
public:
  ExtensionField(const PrimeField& base, int degree) : base_(base), modulus_(first_irreducible(base, degree)) {}
  ExtensionField(const PrimeField& base, Polynomial defining)
      : base_(base), modulus_(std::move(defining)) {
    if (!is_irreducible(modulus_)) throw InvalidArgument("ExtensionField: defining polynomial is reducible");
    modulus_ = modulus_.monic();
  }

  const PrimeField& base() const { return base_; }
  int degree() const { return modulus_.degree(); }
  const Polynomial& defining_polynomial() const { return modulus_; }
  BigInt order() const { return boost::multiprecision::pow(BigInt(base_.modulus()), degree()); }

  ExtFieldElement element(Polynomial rep) const { return {rep % modulus_}; }
  ExtFieldElement from_base(Residue v) const { return {Polynomial::constant(base_, v)}; }
  ExtFieldElement zero() const { return {Polynomial(base_)}; }
  ExtFieldElement one() const { return from_base(1); }

  ExtFieldElement add(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return {a.representative + b.representative};
  }
  ExtFieldElement sub(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return {a.representative - b.representative};
  }
  ExtFieldElement mul(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return {(a.representative * b.representative) % modulus_};
  }
  ExtFieldElement pow(const ExtFieldElement& a, const BigInt& e) const {
    return {powmod(a.representative, e, modulus_)};
  }
  bool is_one(const ExtFieldElement& a) const {
    return a.representative.degree() == 0 && a.representative.coeff(0) == 1;
  }

  /// Element encoded by the base-p digits of `index` (constant term least significant).
  ExtFieldElement enumerate(std::uint64_t index) const {
    std::vector<Residue> c(degree(), 0);
    for (int i = 0; i < degree() && index; ++i) {
      c[i] = static_cast<Residue>(index % base_.modulus());
      index /= base_.modulus();
    }
    return {Polynomial(base_, std::move(c))};
  }

  /// A fixed element of exact multiplicative order n; requires n | p^e - 1.
  /// Scans elements h in enumeration order and takes the first h^((q-1)/n) of order n.
  ExtFieldElement root_of_unity(std::uint64_t n) const {
    const BigInt q1 = order() - 1;
    if (q1 % n != 0) throw InvalidArgument("root_of_unity: n does not divide p^e - 1");
    const BigInt cofactor = q1 / n;
    const auto primes = prime_factors(n);
    for (std::uint64_t idx = 1;; ++idx) {
      ExtFieldElement w = pow(enumerate(idx), cofactor);
      if (w.representative.is_zero()) continue;
      bool ok = n == 1 ? is_one(w) : true;
      for (auto r : primes)
        if (is_one(pow(w, BigInt(n / r)))) ok = false;
      if (ok) return w;
    }
  }

private:
  PrimeField base_;
  Polynomial modulus_;
};

// ---------------------------------------------------------------------------
// Integer polynomials and cyclotomic polynomials

/// Dense polynomial over Z, lowest degree first.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d >= 0 && coeffs[d] == 0) --d;
    return d;
  }
  std::int64_t coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    IntPolynomial r{std::vector<std::int64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
  }
  bool operator==(const IntPolynomial& o) const {
    IntPolynomial a = *this, b = o;
    a.trim();
    b.trim();
    return a.coeffs == b.coeffs;
  }

  /// Division by a monic divisor; returns (quotient, remainder).
  friend std::pair<IntPolynomial, IntPolynomial> divmod_monic(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    if (db < 0 || b.coeffs[db] != 1) throw InvalidArgument("divmod_monic: divisor is not monic");
    a.trim();
    int da = a.degree();
    if (da < db) return {IntPolynomial{}, a};
    IntPolynomial q{std::vector<std::int64_t>(da - db + 1, 0)};
    for (int i = da - db; i >= 0; --i) {
      std::int64_t t = a.coeffs[i + db];
      q.coeffs[i] = t;
      if (t == 0) continue;
      for (int j = 0; j <= db; ++j) a.coeffs[i + j] -= t * b.coeffs[j];
    }
    a.trim();
    q.trim();
    return {q, a};
  }

  Polynomial reduce(const PrimeField& f) const {
    std::vector<Residue> c;
    for (auto v : coeffs) c.push_back(f.reduce(v));
    return Polynomial(f, std::move(c));
  }

  std::string to_string(char var = 'x') const {
    if (degree() < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      std::int64_t v = coeffs[i];
      if (v == 0) continue;
      std::int64_t mag = v < 0 ? -v : v;
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << var;
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }
};

/// Phi_m, by exact division of x^m - 1 by the Phi_d for proper divisors d of m.
inline IntPolynomial cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("cyclotomic_polynomial: m must be positive");
  if (m == 1) return IntPolynomial{{-1, 1}};
  IntPolynomial xm{std::vector<std::int64_t>(m + 1, 0)};
  xm.coeffs[0] = -1;
  xm.coeffs[m] = 1;
  IntPolynomial denom{{1}};
  for (auto d : divisors(m))
    if (d < m) denom = denom * cyclotomic_polynomial(d);
  auto [q, r] = divmod_monic(xm, denom);
  verify(r.degree() < 0, "cyclotomic_polynomial: inexact division");
  return q;
}

// ---------------------------------------------------------------------------
// Cyclotomic cosets

/// An orbit on Z_n, under <p> (a Frobenius coset) or under <p, -1>.
struct CosetOrbit {
  std::uint64_t m = 1;      // n / gcd(representative, n): order of the roots w^i, i in members
  std::uint64_t e = 1;      // multiplicative order of p mod m
  std::vector<std::uint64_t> members;  // sorted
  bool self_paired = true;  // closed under negation
  std::size_t size() const { return members.size(); }
  std::uint64_t representative() const { return members.front(); }
};

namespace detail {

inline CosetOrbit annotate(std::uint64_t n, std::uint64_t p, std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  CosetOrbit o;
  o.members = std::move(members);
  o.m = n / std::gcd(o.members.front(), n);
  o.e = multiplicative_order(p, o.m);
  if (o.m <= 2) {
    o.self_paired = true;
  } else {
    // some power of p is -1 mod m
    o.self_paired = false;
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < o.e; ++i) {
      if (x == o.m - 1) o.self_paired = true;
      x = x * (p % o.m) % o.m;
    }
  }
  return o;
}

inline void check_coprime(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidArgument("n must be positive");
  if (std::gcd(n, p) != 1)
    throw InvalidArgument("gcd(" + std::to_string(n) + ", " + std::to_string(p) + ") != 1");
}

}  // namespace detail

/// Orbits of <multiplication by p> on Z_n, ordered by least member.
inline std::vector<CosetOrbit> frobenius_cosets(std::uint64_t n, std::uint64_t p) {
  detail::check_coprime(n, p);
  std::vector<bool> seen(n, false);
  std::vector<CosetOrbit> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::uint64_t> mem;
    std::uint64_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      mem.push_back(j);
      j = j * (p % n) % n;
    }
    out.push_back(detail::annotate(n, p, std::move(mem)));
  }
  return out;
}

/// Orbits of <multiplication by p, negation> on Z_n, ordered by least member.
inline std::vector<CosetOrbit> coset_orbits(std::uint64_t n, std::uint64_t p) {
  detail::check_coprime(n, p);
  std::vector<bool> seen(n, false);
  std::vector<CosetOrbit> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::uint64_t> mem, stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      std::uint64_t j = stack.back();
      stack.pop_back();
      mem.push_back(j);
      for (std::uint64_t k : {j * (p % n) % n, (n - j) % n}) {
        if (!seen[k]) {
          seen[k] = true;
          stack.push_back(k);
        }
      }
    }
    out.push_back(detail::annotate(n, p, std::move(mem)));
  }
  return out;
}

/// Irreducible factor f^Gamma(x) = prod_{i in Gamma} (x - w^i) for one Frobenius coset Gamma.
struct CyclotomicFactor {
  CosetOrbit orbit;
  Polynomial factor;
};

/// Splits x^n - 1 over F_p into the f^Gamma, computed in F_{p^e'} with e' = ord_n(p).
/// Every factor is checked to have coefficients in F_p, and their product to be x^n - 1.
inline std::vector<CyclotomicFactor> factor_xn_minus_1(std::uint64_t n, std::uint64_t p) {
  detail::check_coprime(n, p);
  PrimeField field(p);
  const auto ext_degree = static_cast<int>(multiplicative_order(p, n));
  ExtensionField ext(field, ext_degree);
  const ExtFieldElement w = ext.root_of_unity(n);

  std::vector<ExtFieldElement> powers{ext.one()};
  for (std::uint64_t i = 1; i < n; ++i) powers.push_back(ext.mul(powers.back(), w));

  std::vector<CyclotomicFactor> out;
  for (auto& orbit : frobenius_cosets(n, p)) {
    // coefficients of prod (x - w^i), each an element of F_{p^e'}
    std::vector<ExtFieldElement> poly{ext.one()};
    for (auto i : orbit.members) {
      std::vector<ExtFieldElement> next(poly.size() + 1, ext.zero());
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = ext.add(next[k + 1], poly[k]);
        next[k] = ext.sub(next[k], ext.mul(poly[k], powers[i]));
      }
      poly = std::move(next);
    }
    std::vector<Residue> coeffs;
    for (auto& c : poly) {
      verify(c.representative.degree() <= 0, "factor_xn_minus_1: factor coefficient outside F_p");
      coeffs.push_back(c.representative.coeff(0));
    }
    Polynomial f(field, std::move(coeffs));
    verify(is_irreducible(f), "factor_xn_minus_1: factor is reducible");
    out.push_back({std::move(orbit), std::move(f)});
  }

  Polynomial prod = Polynomial::constant(field, 1);
  for (auto& cf : out) prod = prod * cf.factor;
  Polynomial xn = Polynomial::monomial(field, n) - Polynomial::constant(field, 1);
  verify(prod == xn, "factor_xn_minus_1: product of factors differs from x^n - 1");
  return out;
}

}  // namespace platocover::gf
