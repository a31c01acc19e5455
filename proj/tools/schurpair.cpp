#include <iostream>

#include "schurpair/cli.hpp"

int main(int argc, char** argv) {
  return schurpair::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
