// Writes the generated fixtures into the directory given as argv[1].
#include <filesystem>
#include <fstream>
#include <iostream>

#include "phq/catalog.hpp"
#include "phq/constructions.hpp"
#include "phq/io.hpp"

namespace {

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: phq_make_fixtures DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  using namespace phq;

  write(dir / "L42.alg", serialize(build("L(4,2)")));
  write(dir / "L24.alg", serialize(build("L(2,4)")));
  write(dir / "L24_R02.alg", serialize(build("L(2,4)+R(0,2)")));
  write(dir / "tstar0.alg", serialize(build("Tstar0K")));
  write(dir / "tstar_theta3.alg", serialize(build("TstarTheta3K")));
  write(dir / "tstar_theta1.alg", serialize(tstar_kodaira({1, 0, 0, 0})));
  write(dir / "L42_tensor_t2.alg", serialize(tensor_construct(build("L(4,2)"), truncated_poly(2))));
  write(dir / "lorentz_plane.alg", serialize(read_recipe(dir / "lorentz_plane.recipe")));

  // [x1,x2] = +Jx3 instead of -Jx3.
  const PHQAlgebra l = build("L(4,2)");
  StructureConstants c = l.algebra().constants();
  c.set_bracket(0, 2, unit_vector(6, 5));
  write(dir / "L42_flipped.alg", serialize(PHQAlgebra(LieAlgebra(l.algebra().basis_names(), c), l.J(), l.phi())));
  return 0;
}
