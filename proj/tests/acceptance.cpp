// Acceptance run: one PASS/FAIL line per criterion.
//
// A criterion whose only failures are inputs the library rejects as modular
// (p dividing |G|) is printed as "FAIL (unattainable)" and does not change the
// exit status; any other failure does.

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "platocover/platocover.hpp"

using namespace platocover;
using maps::MapFamily;
using PC = maps::PunctureClass;
using gf::BigInt;

namespace {

struct Outcome {
  std::vector<std::string> failures;     // genuine mismatches
  std::vector<std::string> unattainable;  // cases rejected as modular
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class T, class U>
  void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

std::string name(const MapFamily& f, std::uint64_t p) { return f.name() + " p=" + std::to_string(p); }

std::string join(const std::vector<std::size_t>& v) { return render::dims_string(v); }

std::vector<std::size_t> repeat(std::initializer_list<std::pair<std::size_t, std::size_t>> counts) {
  std::vector<std::size_t> out;
  for (auto [c, k] : counts) out.insert(out.end(), k, c);
  return out;
}

bool admissible(const MapFamily& fam, std::uint64_t p) {
  return maps::build_group(fam).order() % p != 0;
}

BigInt pw(std::uint64_t p, std::size_t e) { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e)); }

std::size_t nu(std::uint64_t n, std::uint64_t p) { return gf::coset_orbits(n, p).size() - 1; }

// 1 -------------------------------------------------------------------------
Outcome face_censuses() {
  Outcome o;
  auto dims_case = [&](const MapFamily& fam, std::uint64_t p, const std::vector<std::size_t>& dims) {
    auto cs = lattice::census(fam, {PC::faces}, p);
    o.expect_eq(join(cs.summary.dims), join(dims), name(fam, p) + " dims");
  };
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    dims_case(MapFamily::tetrahedron(), p, {3});
    dims_case(MapFamily::cube(), p, {2, 3, 5});
    dims_case(MapFamily::octahedron(), p, {1, 3, 3, 4, 4, 6, 7});
  }
  for (std::uint64_t p : {11u, 19u}) dims_case(MapFamily::dodecahedron(), p, {3, 3, 5, 6, 8, 8, 11});
  for (std::uint64_t p : {7u, 13u}) dims_case(MapFamily::dodecahedron(), p, {5, 6, 11});
  for (std::uint64_t p : {11u, 19u, 7u, 13u}) {
    const bool split = p % 5 == 1 || p % 5 == 4;
    auto cs = lattice::census(MapFamily::icosahedron(), {PC::faces}, p);
    o.expect_eq(cs.summary.total, split ? 8 * p + 23 : 4 * p + 11, name(cs.family, p) + " total");
    o.expect_eq(cs.summary.regular, split ? 31u : 15u, name(cs.family, p) + " regular");
    o.expect_eq(cs.summary.chiral, split ? 8 * (p - 1) : 4 * (p - 1), name(cs.family, p) + " chiral");
  }
  for (unsigned n : {3u, 4u, 5u, 6u, 7u, 8u})
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
      auto fam = MapFamily::dihedron(n);
      if (!admissible(fam, p)) continue;
      dims_case(fam, p, {1});
    }
  for (unsigned n = 3; n <= 16; ++n)
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
      auto fam = MapFamily::hosohedron(n);
      if (!admissible(fam, p)) continue;
      auto cs = lattice::census(fam, {PC::faces}, p);
      o.expect_eq(BigInt(cs.summary.total), (BigInt(1) << nu(n, p)) - 1, name(fam, p) + " total");
    }
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome genus_closed_forms() {
  Outcome o;
  std::size_t n_checked = 0;
  auto face_form = [&](const lattice::Census& cs) {
    const std::uint64_t f = maps::build_map(cs.family).face_count;
    for (const auto& d : cs.coverings) {
      // 2g = (f-2)p^c - f p^(c-1) + 2
      const BigInt two_g = BigInt(f - 2) * pw(cs.p, d.c) - BigInt(f) * pw(cs.p, d.c - 1) + 2;
      o.expect_eq(2 * d.genus, two_g, name(cs.family, cs.p) + " covering " + std::to_string(d.id));
      ++n_checked;
    }
  };
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (auto fam : {MapFamily::tetrahedron(), MapFamily::cube(), MapFamily::octahedron()})
      face_form(lattice::census(fam, {PC::faces}, p));
    if (p != 5) {
      face_form(lattice::census(MapFamily::dodecahedron(), {PC::faces}, p));
      face_form(lattice::census(MapFamily::icosahedron(), {PC::faces}, p));
    }
    face_form(lattice::census(MapFamily::dihedron(p == 5 ? 6 : 5), {PC::faces}, p));
  }
  for (unsigned n = 3; n <= 16; ++n)
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
      auto fam = MapFamily::hosohedron(n);
      if (!admissible(fam, p)) continue;
      auto cs = lattice::census(fam, {PC::faces}, p);
      face_form(cs);
      for (const auto& d : cs.coverings) {
        // 2g = 2 + p^(c-1)(n(p-1) - 2p)
        const BigInt two_g = 2 + pw(p, d.c - 1) * (BigInt(n) * (p - 1) - 2 * BigInt(p));
        o.expect_eq(2 * d.genus, two_g, name(fam, p) + " hosohedral form, covering " + std::to_string(d.id));
      }
    }
  o.notes.push_back(std::to_string(n_checked) + " descriptors");
  return o;
}

// 3 -------------------------------------------------------------------------
Outcome quoted_genera() {
  Outcome o;
  auto genus_at = [&](const MapFamily& fam, std::uint64_t p, std::size_t c, std::uint64_t want) {
    auto cs = lattice::census(fam, {PC::faces}, p);
    bool seen = false;
    for (const auto& d : cs.coverings)
      if (d.c == c) {
        seen = true;
        o.expect_eq(d.genus, BigInt(want), name(fam, p) + " c=" + std::to_string(c));
      }
    o.expect(seen, name(fam, p) + " has no covering with c=" + std::to_string(c));
  };
  genus_at(MapFamily::tetrahedron(), 5, 3, 76);
  genus_at(MapFamily::cube(), 5, 2, 36);
  genus_at(MapFamily::cube(), 7, 2, 78);
  genus_at(MapFamily::octahedron(), 5, 1, 12);
  genus_at(MapFamily::octahedron(), 7, 1, 18);
  genus_at(MapFamily::octahedron(), 11, 1, 30);
  auto h3 = lattice::census(MapFamily::hosohedron(3), {PC::faces}, 5);
  o.expect_eq(h3.summary.total, 1u, "hosohedron:3 p=5 count");
  if (h3.summary.total == 1) {
    o.expect_eq(h3.coverings[0].genus, BigInt(6), "hosohedron:3 p=5 genus");
    o.expect_eq(h3.coverings[0].type_string(), std::string("{10,3}"), "hosohedron:3 p=5 type");
  }
  auto h4 = lattice::census(MapFamily::hosohedron(4), {PC::faces}, 3);
  o.expect_eq(join(h4.summary.dims), join({1, 2, 3}), "hosohedron:4 p=3 dims");
  std::vector<std::size_t> genera;
  for (const auto& d : h4.coverings) genera.push_back(d.genus.convert_to<std::size_t>());
  std::sort(genera.begin(), genera.end());
  o.expect_eq(join(genera), join({2, 4, 10}), "hosohedron:4 p=3 genera");
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome hosohedron_95() {
  Outcome o;
  auto r = render::cyclotomic_report(95, 7);
  std::vector<std::size_t> sizes;
  for (const auto& orb : r.orbits) sizes.push_back(orb.orbit.size());
  std::sort(sizes.begin(), sizes.end());
  o.expect_eq(join(sizes), join({1, 4, 6, 6, 6, 24, 24, 24}), "orbit sizes");
  const gf::PrimeField f(7);
  gf::Polynomial prod = gf::Polynomial::constant(f, 1);
  for (const auto& cf : gf::factor_xn_minus_1(95, 7)) {
    o.expect_eq(static_cast<std::size_t>(cf.factor.degree()), cf.orbit.size(), "factor degree");
    prod = prod * cf.factor;
  }
  o.expect(prod == gf::Polynomial::monomial(f, 95) - gf::Polynomial::constant(f, 1), "product of factors is x^95 - 1");
  o.expect_eq(r.nu, 7u, "nu");
  auto cs = lattice::census(MapFamily::hosohedron(95), {PC::faces}, 7);
  o.expect_eq(cs.summary.total, 127u, "coverings");
  const auto& dims = cs.summary.dims;
  o.expect(!dims.empty() && dims.front() == 4, "minimum c is 4");
  o.expect_eq(std::count(dims.begin(), dims.end(), 4u), 1, "multiplicity of c=4");
  o.expect_eq(std::count(dims.begin(), dims.end(), 6u), 3, "multiplicity of c=6");
  return o;
}

// 5 -------------------------------------------------------------------------
Outcome hosohedron_13() {
  Outcome o;
  struct Case {
    std::uint64_t p;
    std::size_t total;
    std::vector<std::size_t> dims;  // empty: count only
  };
  const std::vector<Case> cases{{53, 63, {}},
                                {3, 3, {6, 6, 12}},
                                {17, 3, {6, 6, 12}},
                                {5, 7, {4, 4, 4, 8, 8, 8, 12}},
                                {41, 1, {12}}};
  for (const auto& c : cases) {
    auto cs = lattice::census(MapFamily::hosohedron(13), {PC::faces}, c.p);
    o.expect_eq(cs.summary.total, c.total, name(cs.family, c.p) + " total");
    o.expect_eq(BigInt(cs.summary.total), (BigInt(1) << nu(13, c.p)) - 1, name(cs.family, c.p) + " 2^nu - 1");
    if (!c.dims.empty()) o.expect_eq(join(cs.summary.dims), join(c.dims), name(cs.family, c.p) + " dims");
  }
  if (o.failures.empty()) {
    auto cs = lattice::census(MapFamily::hosohedron(13), {PC::faces}, 53);
    std::vector<std::size_t> want;
    for (std::size_t k = 1; k <= 6; ++k) {
      std::size_t binom = 1;
      for (std::size_t i = 0; i < k; ++i) binom = binom * (6 - i) / (i + 1);
      want.insert(want.end(), binom, 2 * k);
    }
    o.expect_eq(join(cs.summary.dims), join(want), "hosohedron:13 p=53 dims");
  }
  return o;
}

// 6 -------------------------------------------------------------------------
Outcome mixed_branching() {
  Outcome o;
  for (std::uint64_t p : {5u, 7u}) {
    auto cs = lattice::census(MapFamily::tetrahedron(), {PC::vertices, PC::faces}, p);
    o.expect_eq(cs.summary.total, 2 * p + 5, name(cs.family, p) + " V+F total");
    o.expect_eq(join(cs.summary.dims), join(repeat({{1, 1}, {3, p + 1}, {4, p + 1}, {6, 1}, {7, 1}})),
                name(cs.family, p) + " V+F dims");
    for (const auto& d : cs.coverings)
      if (d.c == 1) {
        const std::string t = "{" + std::to_string(3 * p) + "," + std::to_string(3 * p) + "}";
        o.expect_eq(d.type_string(), t, name(cs.family, p) + " c=1 type");
        o.expect_eq(d.genus, BigInt(3 * (p - 1)), name(cs.family, p) + " c=1 genus");
      }
    for (auto fam : {MapFamily::cube(), MapFamily::octahedron()}) {
      auto c2 = lattice::census(fam, {PC::vertices, PC::faces}, p);
      o.expect_eq(c2.summary.total, 16 * p + 47, name(fam, p) + " V+F total");
    }
  }
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome edge_and_full_branching() {
  Outcome o;
  for (std::uint64_t p : {7u, 13u, 5u, 11u}) {
    auto cs = lattice::census(MapFamily::tetrahedron(), {PC::edges}, p);
    const bool split = p % 3 == 1;
    o.expect_eq(cs.summary.total, split ? 7u : 3u, name(cs.family, p) + " edges total");
    o.expect_eq(join(cs.summary.dims), split ? join({1, 1, 2, 3, 4, 4, 5}) : join({2, 3, 5}),
                name(cs.family, p) + " edges dims");
    std::set<std::size_t> chiral_c;
    for (const auto& d : cs.coverings)
      if (!d.regular) chiral_c.insert(d.c);
    o.expect(split ? chiral_c == std::set<std::size_t>{1, 4} : chiral_c.empty(),
             name(cs.family, p) + " edges chiral pairs");
    if (split) o.expect_eq(cs.summary.chiral, 4u, name(cs.family, p) + " edges chiral count");
  }
  auto g = maps::build_group(MapFamily::tetrahedron());
  o.expect_eq(chartab::to_string(chartab::homology_character(g, {PC::vertices, PC::edges, PC::faces})),
              std::string("2chi1+chi2+chi3+3chi4"), "full-branching character");
  const std::uint64_t p = 5;
  auto cs = lattice::census(MapFamily::tetrahedron(), {PC::vertices, PC::edges, PC::faces}, p);
  std::size_t pure = 0;
  for (const auto& d : cs.coverings)
    if (d.character == chartab::CharacterMultiset{{"chi1", 1}}) ++pure;
  o.expect_eq(pure, p + 1, "pure chi1 coverings at p=5");
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t agreed = 0;
  auto run = [&](const MapFamily& fam, std::vector<PC> branch, std::uint64_t p) {
    try {
      auto r = checks::oracle_check(lattice::census(fam, branch, p));
      o.expect(r.equal, name(fam, p) + ": oracle " + std::to_string(r.oracle_count) + ", lattice " +
                            std::to_string(r.lattice_count));
      agreed += r.equal;
    } catch (const ModularCaseUnsupported&) {
      o.unattainable.push_back(name(fam, p));
    }
  };
  for (auto fam : {MapFamily::tetrahedron(), MapFamily::cube(), MapFamily::octahedron()}) run(fam, {PC::faces}, 5);
  for (unsigned n = 3; n <= 8; ++n)
    for (std::uint64_t p : {5u, 7u}) run(MapFamily::hosohedron(n), {PC::faces}, p);
  for (std::uint64_t p : {5u, 7u}) run(MapFamily::tetrahedron(), {PC::edges}, p);
  o.notes.push_back(std::to_string(agreed) + " cases agree");
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome euler_cross_check() {
  Outcome o;
  std::size_t checked = 0;
  auto run = [&](const MapFamily& fam, std::uint64_t p, bool required) {
    try {
      auto r = checks::euler_check(lattice::census(fam, {PC::faces}, p));
      for (const auto& m : r.mismatches) o.failures.push_back(name(fam, p) + " " + m);
      checked += r.checked;
      if (!required) o.notes.push_back("substitute " + name(fam, p) + ": " + std::to_string(r.checked) + " agree");
    } catch (const ModularCaseUnsupported&) {
      o.unattainable.push_back(name(fam, p));
    }
  };
  for (auto fam : {MapFamily::tetrahedron(), MapFamily::cube(), MapFamily::octahedron(), MapFamily::dodecahedron(),
                   MapFamily::icosahedron()})
    run(fam, 5, true);
  o.notes.insert(o.notes.begin(), std::to_string(checked) + " coverings at p=5 agree");
  // the A5 solids at the smallest admissible prime of each congruence class
  run(MapFamily::dodecahedron(), 11, false);
  run(MapFamily::icosahedron(), 7, false);
  run(MapFamily::icosahedron(), 11, false);
  return o;
}

// 10 ------------------------------------------------------------------------
Outcome property_groups() {
  Outcome o;
  struct Group {
    const char* binary;
    const char* filter;
  };
  const std::vector<Group> groups{{PLATOCOVER_TEST_DECOMPOSE, "Idempotents.*"},
                                  {PLATOCOVER_TEST_LINALG, "RrefCanonicity.*"},
                                  {PLATOCOVER_TEST_CHARTAB, "TableOrthogonality.*"},
                                  {PLATOCOVER_TEST_LATTICE, "Duality.*"},
                                  {PLATOCOVER_TEST_LATTICE, "Chirality.*"}};
  for (const auto& g : groups) {
    const std::string cmd = std::string("\"") + g.binary + "\" --gtest_filter=" + g.filter + " 2>&1";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      o.failures.push_back(std::string("cannot run ") + g.filter);
      continue;
    }
    std::string out;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    const bool ran = out.find("[  PASSED  ] ") != std::string::npos && out.find("[  PASSED  ] 0 tests") == std::string::npos;
    o.expect(status == 0 && ran, std::string(g.filter) + " did not pass standalone");
    if (status == 0 && ran) o.notes.push_back(g.filter);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"face-branching censuses", face_censuses},
      {"genus closed forms", genus_closed_forms},
      {"quoted individual genera", quoted_genera},
      {"hosohedron n=95 p=7 end to end", hosohedron_95},
      {"hosohedron n=13 congruence sweep", hosohedron_13},
      {"vertex and face branching", mixed_branching},
      {"edge and full branching", edge_and_full_branching},
      {"oracle equivalence", oracle_equivalence},
      {"Euler cross-check at p=5", euler_cross_check},
      {"standalone property groups", property_groups}};
  int status = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::string verdict = "PASS";
    if (!o.failures.empty()) {
      verdict = "FAIL";
      status = 1;
    } else if (!o.unattainable.empty()) {
      verdict = "FAIL (unattainable)";
    }
    std::cout << verdict << " " << i + 1 << " " << criteria[i].first;
    std::string detail;
    for (const auto& n : o.notes) detail += (detail.empty() ? "" : "; ") + n;
    if (!o.unattainable.empty()) {
      detail += (detail.empty() ? "" : "; ") + std::string("rejected as modular:");
      for (const auto& u : o.unattainable) detail += " [" + u + "]";
    }
    for (const auto& f : o.failures) detail += (detail.empty() ? "" : "; ") + f;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
  return status;
}
