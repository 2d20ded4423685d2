#include <iostream>

#include "knotinv/cli.hpp"

int main(int argc, char** argv) { return knotinv::run(argc, argv, std::cout, std::cerr); }
