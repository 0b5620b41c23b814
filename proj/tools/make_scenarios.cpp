// Writes the gallery scenarios and the identity fixtures as JSON files.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pilab/errors.hpp"
#include "pilab/gallery.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? argv[1] : "scenarios";
  try {
    fs::create_directories(dir);
    using namespace pilab;
    write(dir / "s3_graded_m2m2.json", emit_scenario(s3_graded_m2m2()));
    write(dir / "fs3_natural_grading.json", emit_scenario(fs3_natural_grading()));
    write(dir / "f2_swap.json", emit_scenario(idempotents_cyclic(2)));
    write(dir / "f3_cycle.json", emit_scenario(idempotents_cyclic(3)));
    write(dir / "m2m2_transpose_swap.json", emit_scenario(m2m2_transpose_swap()));
    write(dir / "ut2ut2_swap.json", emit_scenario(ut2ut2_swap()));
    write(dir / "sweedler.json", emit_scenario(sweedler()));

    const Scenario flip = m2_sign_flip();
    const Scenario tr = m2_transpose();
    const Scenario dual = m2_dual_z2();
    write(dir / "m2_sign_flip.json", emit_scenario(flip));
    write(dir / "m2_transpose.json", emit_scenario(tr));
    write(dir / "m2_dual_z2.json", emit_scenario(dual));
    write(dir / "m2_sign_flip.poly.json", emit_polynomial(symmetrized_commutator(flip.action.h(), 1), flip.action.h()));
    write(dir / "m2_transpose.poly.json", emit_polynomial(symmetrized_commutator(tr.action.h(), -1), tr.action.h()));
    write(dir / "m2_dual_z2.poly.json", emit_polynomial(labelled_commutator(dual.action.h(), 0), dual.action.h()));
    write(dir / "m2_sign_flip.commutator.poly.json", emit_polynomial(commutator(flip.action.h()), flip.action.h()));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
