#include <iostream>

#include "regmap/cli.hpp"

int main(int argc, char** argv) {
  return regmap::cli::run(argc, argv, std::cout, std::cerr);
}
