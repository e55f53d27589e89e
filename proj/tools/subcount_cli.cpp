#include "subcount/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return subcount::run_cli(argc, argv, std::cout, std::cerr); }
