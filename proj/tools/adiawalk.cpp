#include <iostream>

#include "adiawalk/cli.hpp"

int main(int argc, char** argv) { return adiawalk::cli::run(argc, argv, std::cout, std::cerr); }
