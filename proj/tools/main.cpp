#include <iostream>

#include "trinomial_cli.hpp"

int main(int argc, char** argv) { return trinomial::cli::main(argc, argv, std::cout, std::cerr); }
