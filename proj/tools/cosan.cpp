#include <iostream>

#include "cosan/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return cosan::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
