#include <iostream>
#include <string>
#include <vector>

#include "sparkcalc.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return sparkcalc::run(args, std::cout, std::cerr);
}
