#include <iostream>

#include "m0n/cli/run.hpp"

int main(int argc, char** argv) {
  try {
    return m0n::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
