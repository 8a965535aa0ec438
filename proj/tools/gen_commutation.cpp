#include <filesystem>
#include <fstream>
#include <iostream>

#include "artin/commutation.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path(ARTIN_DATA_DIR) / "commutation";
  try {
    artin::CommutationLemma lemma;
    const auto& p = lemma.presentation();
    fs::create_directories(dir);
    std::ofstream(dir / "presentation.txt") << artin::format_machine(p);
    auto derived = lemma.derive();
    for (int k = 1; k <= 3; ++k) {
      const auto& d = derived[static_cast<std::size_t>(k - 1)];
      auto check = artin::check_derivation(p, d.script);
      if (!check.ok) {
        std::cerr << "identity " << k << ": " << check.message << "\n";
        return 1;
      }
      fs::path file = dir / ("eq" + std::to_string(k) + ".script");
      std::ofstream(file) << artin::format_annotated(p, d.script, d.notes);
      std::cout << file.string() << ": " << d.script.steps.size() << " steps\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
