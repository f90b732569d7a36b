#include <iostream>

#include "pentatail/cli.hpp"

int main(int argc, char** argv) {
  return pentatail::cli::run(argc, argv, std::cout, std::cerr);
}
