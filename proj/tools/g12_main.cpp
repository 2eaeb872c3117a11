// g12: command-line front end.
#include <iostream>
#include <string>
#include <vector>

#include "g12/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  int code = g12::run_cli(args, &out, &err);
  std::cout << out;
  std::cerr << err;
  return code;
}
