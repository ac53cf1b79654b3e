// Computes H̃₁((4),(2,2)) and H₁((4),(2,2)) with the tuple oracle and the
// tropical engine, then lists the graph classes behind the tropical count.
#include <iostream>

#include "hurwitz/oracle/tuples.hpp"
#include "hurwitz/tropical/enumerate.hpp"
#include "hurwitz/tropical/hurwitz.hpp"

int main() {
  using namespace hurwitz;
  int status = 0;
  for (bool structure : {true, false}) {
    const auto q = make_query(Partition({4}), Partition({2, 2}), 1, structure);
    const Dyadic oracle = hurwitz_oracle(q);
    const Dyadic tropical = tropical_hurwitz(q);
    std::cout << (structure ? "H~" : "H ") << "_1((4),(2,2)): oracle " << oracle << ", tropical " << tropical << '\n';
    if (oracle != tropical) status = 1;
  }
  const auto q = make_query(Partition({4}), Partition({2, 2}), 1, true);
  for (const auto& c : enumerate_graphs(q))
    std::cout << "  o=" << c.orderings << " m~=" << multiplicity_tilde(c.canonical) << "  " << c.canonical.to_string() << '\n';
  return status;
}
