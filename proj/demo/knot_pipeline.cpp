// Tree -> divide -> plane curve -> knot in S^3 -> diagram, for one code.
// usage: knot_pipeline [code] [out.svg]

#include <fstream>
#include <iostream>

#include "slalom/slalom.hpp"

using namespace slalom;

int main(int argc, char** argv) {
  const std::string code = argc > 1 ? argv[1] : "[0,1,1,1]";
  const auto tree = parse_cayley(code);
  const auto divide = build_divide(tree);
  const auto imm = layout_immersion(divide);
  std::cout << code << ": " << imm.double_points().size() << " double points, clearance " << imm.clearance() << '\n';

  const auto knot = tangent_lift(imm);
  std::cout << "lift: " << knot.size() << " vertices, |x|-1 at most " << knot.sphere_residual() << '\n';

  const auto pk = project_diagram(knot);
  std::cout << "diagram: " << pk.info.raw_crossings << " crossings, " << pk.simplified.crossing_count()
            << " after Reidemeister I/II\n";
  std::cout << "gauss:";
  for (int g : pk.simplified.gauss_code()) std::cout << ' ' << g;
  std::cout << '\n';

  const auto from_diagram = alexander_from_diagram(pk.simplified);
  const auto from_coxeter = normalize_alexander(alexander_polynomial(dynkin_of(tree)));
  std::cout << "alexander (diagram) " << from_diagram.to_string() << '\n'
            << "alexander (coxeter) " << from_coxeter.to_string() << '\n';

  if (argc > 2) {
    std::ofstream(argv[2]) << render_immersion_svg(imm);
    std::cout << "wrote " << argv[2] << '\n';
  }
  return from_diagram == from_coxeter ? 0 : 1;
}
