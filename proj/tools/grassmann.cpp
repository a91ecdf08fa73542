#include <iostream>

#include "grassmann/cli.hpp"

int main(int argc, char** argv) { return grassmann::cli::main_entry(argc, argv, std::cout, std::cerr); }
