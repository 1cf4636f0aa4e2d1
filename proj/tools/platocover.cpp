// platocover: classify elementary-abelian branched regular coverings of Platonic maps.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "platocover/platocover.hpp"

using namespace platocover;

namespace {

struct ClassifyArgs {
  std::string map;
  std::uint64_t prime = 0;
  std::string branch = "faces";
  std::string format = "table";
  bool verify_euler = false;
  bool oracle = false;
  bool fixtures = false;
  std::string fixture_dir = PLATOCOVER_FIXTURE_DIR;
  std::uint64_t budget = lattice::kDefaultSubmoduleBudget;
};

std::vector<maps::PunctureClass> split_branch(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) names.push_back(item);
  if (names.empty()) throw InvalidArgument("empty --branch list");
  return render::parse_branch(names);
}

int run_fixtures(const ClassifyArgs& a) {
  int failed = 0;
  for (const auto& r : render::run_fixtures(a.fixture_dir)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      std::cout << ": " << r.detail;
      ++failed;
    }
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}

int classify(const ClassifyArgs& a) {
  if (a.fixtures) return run_fixtures(a);
  if (a.map.empty() || a.prime == 0) throw InvalidArgument("--map and --prime are required");
  const auto cs = lattice::census(maps::MapFamily::parse(a.map), split_branch(a.branch), a.prime, a.budget);
  int status = 0;
  std::vector<std::string> notes;
  if (a.verify_euler) {
    const auto r = checks::euler_check(cs);
    notes.push_back("euler: " + std::to_string(r.checked) + " checked, " + std::to_string(r.skipped) +
                    " over the dart budget, " + std::to_string(r.mismatches.size()) + " mismatches");
    for (const auto& m : r.mismatches) notes.push_back("  " + m);
    if (!r.ok()) status = 1;
  }
  if (a.oracle) {
    const auto r = checks::oracle_check(cs);
    notes.push_back("oracle: " + std::to_string(r.oracle_count) + " invariant subspaces, lattice " +
                    std::to_string(r.lattice_count) + (r.equal ? ", equal" : ", DIFFERENT"));
    if (!r.equal) status = 1;
  }
  if (a.format == "json") {
    std::cout << render::to_json(cs).dump(2) << "\n";
    for (const auto& n : notes) std::cerr << n << "\n";
  } else {
    std::cout << render::table(cs);
    for (const auto& n : notes) std::cout << n << "\n";
  }
  return status;
}

int cyclotomic(std::uint64_t n, std::uint64_t p, const std::string& format) {
  const auto r = render::cyclotomic_report(n, p);
  if (format == "json") std::cout << render::to_json(r).dump(2) << "\n";
  else std::cout << render::text(r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary-abelian branched regular coverings of the Platonic maps"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* cl = app.add_subcommand("classify", "census of coverings for one map, prime and branch set");
  cl->add_option("--map", ca.map, "tetrahedron|cube|octahedron|dodecahedron|icosahedron|dihedron:N|hosohedron:N");
  cl->add_option("--prime", ca.prime, "odd prime not dividing |G|");
  cl->add_option("--branch", ca.branch, "comma list of vertices,edges,faces")->capture_default_str();
  cl->add_option("--format", ca.format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  cl->add_flag("--verify-euler", ca.verify_euler, "rebuild each covering from voltages and recount its genus");
  cl->add_flag("--oracle", ca.oracle, "compare with brute-force invariant subspaces");
  cl->add_option("--budget", ca.budget, "largest submodule count to enumerate")->capture_default_str();
  cl->add_flag("--fixtures", ca.fixtures, "run the regression fixtures and report differences");
  cl->add_option("--fixture-dir", ca.fixture_dir, "directory of fixture JSON files")->capture_default_str();

  std::uint64_t n = 0, p = 0;
  std::string cformat = "text";
  auto* cy = app.add_subcommand("cyclotomic", "orbits of <p, -1> on Z_n and the factors of x^n - 1 mod p");
  cy->add_option("--n", n, "n")->required();
  cy->add_option("--prime", p, "prime coprime to n")->required();
  cy->add_option("--format", cformat, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*cl) return classify(ca);
    return cyclotomic(n, p, cformat);
  } catch (const ModularCaseUnsupported& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const EvenPrimeUnsupported& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
