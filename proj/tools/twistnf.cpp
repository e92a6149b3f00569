#include <iostream>

#include "twistnf/cli.hpp"

int main(int argc, char** argv) { return twistnf::run(argc, argv, std::cout, std::cerr); }
