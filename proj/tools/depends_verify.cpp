// depends-verify <lang> <src> <truth.json>: prints the accuracy report of an
// extraction (all subdirectories of src) against a ground-truth file.

#include <iostream>

#include "depends/depends.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: depends-verify <lang> <src> <truth.json>\n";
    return 2;
  }
  try {
    depends::Extraction ex = depends::extract_directory(argv[1], argv[2], true);
    for (const auto& d : ex.diagnostics) std::cerr << "warning: " << d << "\n";
    auto truth = depends::parse_ground_truth(depends::detail::read_file(argv[3]));
    std::cout << depends::report_json(depends::compare(ex.relations, ex.tree, truth));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
