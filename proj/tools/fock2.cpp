#include <iostream>
#include <string>
#include <vector>

#include "fock2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fock2::cli::parse_and_dispatch(std::move(args), std::cout, std::cerr);
}
