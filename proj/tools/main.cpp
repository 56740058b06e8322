#include <string>
#include <vector>

#include "analytica/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return analytica::dispatch(std::move(args));
}
