#include <iostream>

#include "coxcomb/cli.hpp"

int main(int argc, char** argv) { return coxcomb::run_cli(argc, argv, std::cout, std::cerr); }
