#include <iostream>

#include "irrwalk/cli/run.hpp"

int main(int argc, char** argv) { return irrwalk::run_cli(argc, argv, std::cout, std::cerr); }
