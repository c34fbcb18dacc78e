#include <iostream>
#include <string>
#include <vector>

#include "weilcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weilcert::dispatch(args, std::cout, std::cerr);
}
