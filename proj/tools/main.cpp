#include <iostream>

#include "driver.hpp"

int main(int argc, char** argv) {
  return sigbasis::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
