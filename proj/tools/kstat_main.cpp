#include <iostream>

#include "kstat/cli.hpp"

int main(int argc, char** argv) {
  return kstat::cli::run(argc, argv, std::cout, std::cerr);
}
