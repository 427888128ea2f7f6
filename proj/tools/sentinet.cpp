#include <iostream>
#include <string>
#include <vector>

#include "sentinet/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return sentinet::cli::run(args, std::cout, std::cerr);
}
