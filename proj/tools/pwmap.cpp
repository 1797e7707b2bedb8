#include <iostream>

#include "pwmap/cli.hpp"

int main(int argc, char** argv) {
  const pwmap::CliResult r = pwmap::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
