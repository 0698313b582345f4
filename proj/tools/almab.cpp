#include <iostream>

#include "almab/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return almab::run_cli(args, std::cout, std::cerr);
}
