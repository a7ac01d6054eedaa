// Library walk-through: build an AND-OR, push its AND-XOR through the noise
// operator, and measure how far a perturbed majority is from the structured
// families.

#include <iostream>

#include "polyspec/polyspec.hpp"

using namespace polyspec;

int main() {
  const BlockPartition part = BlockPartition::parse("0,1;2,3");
  const BooleanFunction g = make_and_or(5, part);
  const BooleanFunction phi = make_and_xor(5, part);

  // T(AND-XOR) = 2^{-width} AND-OR, so (phi, g) is an exact pair with lambda = 1/4.
  const NoiseParams prm{0.5, 0.5, 0.25};
  std::cout << "residual(AND-XOR, AND-OR) = " << residual(phi, g, prm) << '\n';

  const ExactPairSolution sol = solve_exact_pair(g, 0.5, 0.25);
  std::cout << "solve: feasible=" << sol.feasible << " matches AND-XOR=" << sol.matches_and_xor << '\n';

  const BooleanFunction maj = make_majority(5, 0b111);
  std::cout << "hom agreement(MAJ3) = " << homomorphism_agreement(maj, 0.5, 0.5, EstimateMode::exact).estimate << '\n';

  const StructureVerdict v = distance_to_constant_or_and(maj, 0.5);
  std::cout << "closest " << kind_name(v.kind) << " " << v.witness() << " at distance " << v.distance << '\n';

  const InfluenceProfile prof = profile(maj, 0.5);
  std::cout << "influences:";
  for (double i : prof.influence) std::cout << ' ' << i;
  std::cout << "\nsensitivity " << *prof.sensitivity << ", degree " << prof.degree << '\n';
  return 0;
}
