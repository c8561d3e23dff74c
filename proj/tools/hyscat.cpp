#include <iostream>

#include "hyscat/cli.hpp"

int main(int argc, char** argv) { return hyscat::cli::run(argc, argv, std::cout, std::cerr); }
