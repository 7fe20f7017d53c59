// Library walkthrough: a tiny Groebner basis, then the fixed points of a
// two-variable update map, both printed to stdout.

#include "boolgb/buchberger.hpp"
#include "boolgb/encoders.hpp"
#include "boolgb/oracle.hpp"

#include <iostream>

int main() {
  using namespace boolgb;

  Ring ring(std::vector<std::string>{"x", "y", "z"});
  std::vector<Polynomial> gens{parse_polynomial("x*y + z", ring)};
  GroebnerBasis gb = groebner_basis(gens, ring);
  std::cout << "basis of <x*y + z>:\n";
  for (const Polynomial& f : gb.elements) std::cout << "  " << to_string(f, ring) << "\n";

  BooleanModel model = parse_model("ring 2\nx1 = x1*x2\nx2 = x1\n");
  std::vector<Polynomial> ideal = fixed_point_ideal(model);
  VarietyReport fixed = enumerate_variety(ideal, model.ring);
  std::cout << "fixed points of (x1, x2) -> (x1*x2, x1):\n";
  for (Point p : fixed.points) {
    std::cout << "  ";
    for (int i = 1; i <= model.ring.nvars(); ++i)
      std::cout << ((p.bits >> model.ring.bit_of(i)) & 1);
    std::cout << "\n";
  }
  return 0;
}
