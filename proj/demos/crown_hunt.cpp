// Walkthrough: where crowns come from.
//
// The affine plane of order 3 packs 12 triples onto 9 points so that every
// pair lies in exactly one triple.  Its minimum degree is 4, which is enough
// to force a crown; the Fano plane (7 points, degree 3) has none.  The crown
// is found through the colored link of a base edge: color each link edge by
// the base endpoint it used, and a crown is exactly a rainbow matching.

#include <iostream>

#include "crowns/constructions.hpp"
#include "crowns/links.hpp"

using namespace crowns;

int main() {
  LinearThreeGraph plane = sts9();
  std::cout << "affine plane of order 3:\n" << serialize(plane) << '\n';

  LinearThreeGraph f = fano();
  std::cout << "fano plane has a crown? " << (find_crown(f) ? "yes" : "no") << '\n';

  auto crown = find_crown(plane);
  if (!crown) {
    std::cout << "unexpected: no crown in the affine plane\n";
    return 1;
  }
  std::cout << "crown in the affine plane:\n";
  std::cout << "  base  " << crown->base.to_string() << '\n';
  for (const Triple& j : crown->jewels) std::cout << "  jewel " << j.to_string() << '\n';

  ColoredLinkGraph link = link_graph(plane, crown->base);
  std::cout << "\nlink of the base edge (color = base endpoint used):\n";
  for (const ColoredEdge& e : link.edges())
    std::cout << "  " << e.u << ' ' << e.v << ' ' << color_letter(e.color) << '\n';

  auto rm = has_rainbow_matching(link);
  std::cout << "\nrainbow matching: " << rm->a.u << '-' << rm->a.v << " (A), " << rm->b.u << '-'
            << rm->b.v << " (B), " << rm->c.u << '-' << rm->c.v << " (C)\n";
  return 0;
}
