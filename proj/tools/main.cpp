#include <iostream>

#include "cfw/cli.hpp"

int main(int argc, char** argv) {
  return cfw::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
