#include <iostream>

#include "wfinite_cli/cli.hpp"

int main(int argc, char** argv) {
  return wfinite::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
