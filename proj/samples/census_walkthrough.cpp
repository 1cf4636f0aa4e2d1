// Library usage: build the homology module of the cube with faces punctured,
// split it into isotypic components, list the coverings and rebuild one of them
// from voltages.

#include <iostream>

#include "platocover/platocover.hpp"

using namespace platocover;
using maps::MapFamily;
using PC = maps::PunctureClass;

int main() {
  const auto fam = MapFamily::cube();
  const std::uint64_t p = 7;

  const auto group = maps::build_group(fam);
  const auto q = homology::build_homology(group, {PC::faces}, p);
  std::cout << fam.name() << ": |G| = " << group.order() << ", dim Q = " << q.dim() << "\n";

  for (const auto& c : decompose::decompose(q, group))
    std::cout << "  component " << c.label() << ": dim " << c.dim() << ", multiplicity " << c.multiplicity
              << ", endomorphism degree " << c.endo_degree << "\n";

  const auto cs = lattice::census(fam, {PC::faces}, p);
  std::cout << render::table(cs);

  // rebuild the smallest covering as a derived map and count its cells
  const auto& first = cs.coverings.front();
  const auto e = builder::euler_verify(builder::solve_voltages(q, first.L, group.map()));
  std::cout << "covering " << first.id << " rebuilt: V=" << e.vertices << " E=" << e.edges << " F=" << e.faces
            << " genus " << e.genus << " (descriptor says " << first.genus << ")\n";

  // the same census as JSON, and the coset machinery behind a hosohedron count
  std::cout << render::to_json(lattice::census(MapFamily::tetrahedron(), {PC::edges}, 7)).dump(2) << "\n";
  std::cout << render::text(render::cyclotomic_report(19, 7));
}
