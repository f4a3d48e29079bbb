// Writes the bundled manifold manifests and root-system data to a directory
// (default: data).  Everything is computed by the engine, so regenerating is
// idempotent.
#include <iostream>
#include <string>

#include "charnum/bundle_bh.hpp"
#include "charnum/json_io.hpp"
#include "charnum/lattice.hpp"
#include "charnum/ring_model.hpp"

int main(int argc, char** argv) {
  using namespace charnum;
  std::string dir = argc > 1 ? argv[1] : "data";
  try {
    const KappaData& kd = KappaData::instance();
    save_json_file(dir + "/m1.json", numbers_to_json(kd.basis_numbers[0]));
    save_json_file(dir + "/m2.json", numbers_to_json(kd.basis_numbers[1]));
    save_json_file(
        dir + "/m3.json",
        model_to_json(product_model(kervaire_milnor_model(2), op2_model())));
    save_json_file(dir + "/m4.json", model_to_json(m4_model()));
    save_json_file(dir + "/m0_8.json", model_to_json(kervaire_milnor_model(2)));
    save_json_file(dir + "/op2.json", model_to_json(op2_model()));
    save_json_file(dir + "/n8.json", model_to_json(n8_model()));
    save_json_file(dir + "/f4_spin9_roots.json",
                   roots_to_json(f4_spin9_roots()));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote 8 manifests to " << dir << "\n";
  return 0;
}
