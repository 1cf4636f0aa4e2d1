#pragma once

// Text and JSON output for censuses and cyclotomic reports, plus the fixture runner.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "platocover/chartab.hpp"
#include "platocover/gf.hpp"
#include "platocover/lattice.hpp"
#include "platocover/maps.hpp"

namespace platocover::render {

using json = nlohmann::ordered_json;
using lattice::Census;

// ---------------------------------------------------------------------------
// Census records: the rendered content of a census, independent of subspaces

struct CoveringRecord {
  std::size_t c = 0;
  std::array<std::uint64_t, 3> type{};
  std::string genus;  // decimal
  std::map<std::string, unsigned, chartab::LabelLess> character;
  bool regular = true;
  std::optional<std::size_t> mate;
  bool operator==(const CoveringRecord&) const = default;
};

struct CensusRecord {
  std::string family;
  unsigned n = 0, m = 0;
  std::uint64_t p = 0;
  std::vector<std::string> branch;
  std::vector<CoveringRecord> coverings;
  std::size_t total = 0, regular = 0, chiral = 0;
  std::vector<std::size_t> dims;
  bool operator==(const CensusRecord&) const = default;
};

inline CensusRecord record(const Census& cs) {
  CensusRecord r;
  r.family = cs.family.name();
  r.n = cs.family.face_size();
  r.m = cs.family.valency();
  r.p = cs.p;
  for (auto c : cs.branch) r.branch.push_back(maps::to_string(c));
  for (const auto& d : cs.coverings)
    r.coverings.push_back({d.c, d.type, d.genus.str(), {d.character.begin(), d.character.end()}, d.regular, d.mate});
  r.total = cs.summary.total;
  r.regular = cs.summary.regular;
  r.chiral = cs.summary.chiral;
  r.dims = cs.summary.dims;
  return r;
}

// genus as a JSON integer when it fits, else as a decimal string
inline json genus_json(const std::string& g) {
  if (g.size() < 20 || (g.size() == 20 && g <= "18446744073709551615")) return std::stoull(g);
  return g;
}

inline json to_json(const CensusRecord& r) {
  json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["m"] = r.m;
  j["p"] = r.p;
  j["branch"] = r.branch;
  j["coverings"] = json::array();
  for (const auto& c : r.coverings) {
    json e;
    e["c"] = c.c;
    e["type"] = c.type;
    e["genus"] = genus_json(c.genus);
    e["character"] = json::object();
    for (const auto& [l, k] : c.character) e["character"][l] = k;
    e["regular"] = c.regular;
    e["mate"] = c.mate ? json(*c.mate) : json(nullptr);
    j["coverings"].push_back(std::move(e));
  }
  j["summary"] = {{"total", r.total}, {"regular", r.regular}, {"chiral", r.chiral}, {"dims", r.dims}};
  return j;
}

inline json to_json(const Census& cs) { return to_json(record(cs)); }

inline CensusRecord record_from_json(const json& j) {
  CensusRecord r;
  r.family = j.at("family").get<std::string>();
  r.n = j.at("n").get<unsigned>();
  r.m = j.at("m").get<unsigned>();
  r.p = j.at("p").get<std::uint64_t>();
  r.branch = j.at("branch").get<std::vector<std::string>>();
  for (const auto& e : j.at("coverings")) {
    CoveringRecord c;
    c.c = e.at("c").get<std::size_t>();
    c.type = e.at("type").get<std::array<std::uint64_t, 3>>();
    const auto& g = e.at("genus");
    c.genus = g.is_string() ? g.get<std::string>() : std::to_string(g.get<std::uint64_t>());
    for (const auto& [l, k] : e.at("character").items()) c.character[l] = k.get<unsigned>();
    c.regular = e.at("regular").get<bool>();
    if (!e.at("mate").is_null()) c.mate = e.at("mate").get<std::size_t>();
    r.coverings.push_back(std::move(c));
  }
  const auto& s = j.at("summary");
  r.total = s.at("total").get<std::size_t>();
  r.regular = s.at("regular").get<std::size_t>();
  r.chiral = s.at("chiral").get<std::size_t>();
  r.dims = s.at("dims").get<std::vector<std::size_t>>();
  return r;
}

// ---------------------------------------------------------------------------
// Text

inline std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s = "{";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "}";
}

inline std::string summary_line(const Census& cs) {
  std::ostringstream os;
  os << cs.summary.total << " coverings, " << cs.summary.regular << " regular, " << cs.summary.chiral
     << " chiral; c = " << dims_string(cs.summary.dims);
  return os.str();
}

inline std::string table(const Census& cs) {
  std::vector<std::array<std::string, 7>> rows{{"id", "c", "type", "genus", "character", "chirality", "choice"}};
  for (const auto& d : cs.coverings) {
    std::string choice;
    for (std::size_t i = 0; i < d.component_choice.size(); ++i)
      choice += (i ? " " : "") + cs.components[i].label() + ":" + d.component_choice[i];
    rows.push_back({std::to_string(d.id), std::to_string(d.c), d.type_string(), d.genus.str(),
                    chartab::to_string(d.character), d.regular ? "regular" : "chiral(" + std::to_string(*d.mate) + ")",
                    choice});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  os << cs.family.name() << " {" << cs.family.face_size() << "," << cs.family.valency() << "}, p = " << cs.p
     << ", branch =";
  for (auto c : cs.branch) os << " " << maps::to_string(c);
  os << "\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      if (i + 1 < r.size()) cell.resize(width[i], ' ');
      line += (i ? "  " : "") + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  os << summary_line(cs) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic report

struct OrbitReport {
  gf::CosetOrbit orbit;
  std::vector<gf::Polynomial> factors;  // f^Gamma for the <p>-orbits inside
};

struct CyclotomicReport {
  std::uint64_t n = 0, p = 0;
  std::vector<OrbitReport> orbits;
  std::size_t nu = 0;
  gf::BigInt coverings = 0;  // 2^nu - 1
};

inline CyclotomicReport cyclotomic_report(std::uint64_t n, std::uint64_t p) {
  if (!gf::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  CyclotomicReport r{n, p, {}, 0, 0};
  const auto factors = gf::factor_xn_minus_1(n, p);
  for (auto& o : gf::coset_orbits(n, p)) {
    OrbitReport rep{o, {}};
    for (const auto& cf : factors)
      if (std::binary_search(o.members.begin(), o.members.end(), cf.orbit.members.front()))
        rep.factors.push_back(cf.factor);
    r.orbits.push_back(std::move(rep));
  }
  r.nu = r.orbits.size() - 1;
  r.coverings = (gf::BigInt(1) << r.nu) - 1;
  return r;
}

inline std::string text(const CyclotomicReport& r) {
  std::ostringstream os;
  os << "x^" << r.n << " - 1 over F_" << r.p << "\n";
  for (const auto& o : r.orbits) {
    os << "orbit " << o.orbit.representative() << ": m=" << o.orbit.m << " e=" << o.orbit.e
       << " size=" << o.orbit.size() << (o.orbit.self_paired ? " self-paired" : " paired") << "\n";
    for (const auto& f : o.factors) os << "  " << f.to_string() << "\n";
  }
  os << "nu = " << r.nu << ", coverings = " << r.coverings << "\n";
  return os.str();
}

inline json to_json(const CyclotomicReport& r) {
  json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["orbits"] = json::array();
  for (const auto& o : r.orbits) {
    json e;
    e["representative"] = o.orbit.representative();
    e["m"] = o.orbit.m;
    e["e"] = o.orbit.e;
    e["size"] = o.orbit.size();
    e["self_paired"] = o.orbit.self_paired;
    e["factors"] = json::array();
    for (const auto& f : o.factors) e["factors"].push_back(f.to_string());
    j["orbits"].push_back(std::move(e));
  }
  j["nu"] = r.nu;
  j["coverings"] = r.coverings.str();
  return j;
}

// ---------------------------------------------------------------------------
// Fixtures: JSON files holding {"cases": [{name, map, prime, branch, expect}]}.
// expect may hold total, regular, chiral, dims and genera ({"c": genus}).

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::vector<maps::PunctureClass> parse_branch(const std::vector<std::string>& names) {
  std::vector<maps::PunctureClass> out;
  for (const auto& n : names) out.push_back(maps::parse_puncture_class(n));
  return out;
}

inline FixtureResult run_fixture(const json& fx) {
  FixtureResult res;
  res.name = fx.at("name").get<std::string>();
  try {
    const auto fam = maps::MapFamily::parse(fx.at("map").get<std::string>());
    const auto branch = parse_branch(fx.value("branch", std::vector<std::string>{"faces"}));
    const auto cs = lattice::census(fam, branch, fx.at("prime").get<std::uint64_t>());
    const auto& ex = fx.at("expect");
    std::ostringstream diff;
    auto check = [&](const char* key, std::size_t got) {
      if (ex.contains(key) && ex.at(key).get<std::size_t>() != got)
        diff << key << ": expected " << ex.at(key).dump() << ", got " << got << "; ";
    };
    check("total", cs.summary.total);
    check("regular", cs.summary.regular);
    check("chiral", cs.summary.chiral);
    if (ex.contains("dims") && ex.at("dims").get<std::vector<std::size_t>>() != cs.summary.dims)
      diff << "dims: expected " << ex.at("dims").dump() << ", got " << dims_string(cs.summary.dims) << "; ";
    if (ex.contains("genera"))
      for (const auto& [c, g] : ex.at("genera").items()) {
        const std::size_t cc = std::stoul(c);
        const std::string want = g.is_string() ? g.get<std::string>() : std::to_string(g.get<std::uint64_t>());
        bool seen = false;
        for (const auto& d : cs.coverings)
          if (d.c == cc) {
            seen = true;
            if (d.genus.str() != want) diff << "genus at c=" << c << ": expected " << want << ", got " << d.genus << "; ";
          }
        if (!seen) diff << "no covering with c=" << c << "; ";
      }
    // JSON round trip
    const auto rec = record(cs);
    if (!(record_from_json(json::parse(to_json(rec).dump())) == rec)) diff << "JSON round trip differs; ";
    res.detail = diff.str();
    res.passed = res.detail.empty();
  } catch (const std::exception& e) {
    res.detail = e.what();
  }
  return res;
}

inline std::vector<FixtureResult> run_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  if (files.empty()) throw InvalidArgument("no fixture files in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<FixtureResult> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    const json doc = json::parse(in);
    for (const auto& fx : doc.at("cases")) out.push_back(run_fixture(fx));
  }
  return out;
}

}  // namespace platocover::render
