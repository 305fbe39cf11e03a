#include <iostream>

#include "zetaeq/cli.hpp"

int main(int argc, char** argv) { return zetaeq::run(argc, argv, std::cout, std::cerr); }
