#include <iostream>
#include <string>
#include <vector>

#include "geodkit/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = geodkit::run(args);
  std::cout << r.output;
  std::cerr << r.diagnostics;
  return r.exit_code;
}
