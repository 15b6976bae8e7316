#include <iostream>

#include "lusztig/cli.hpp"

int main(int argc, char** argv) {
  return lusztig::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
