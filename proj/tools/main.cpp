#include <iostream>

#include "coxnerve/cli.hpp"

int main(int argc, char** argv) { return coxnerve::cli_main(argc, argv, std::cout, std::cerr); }
