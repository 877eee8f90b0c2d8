#include <iostream>
#include <string>
#include <vector>

#include "qosroute/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qosroute::RunCli(args, std::cout, std::cerr);
}
