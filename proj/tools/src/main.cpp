#include <iostream>

#include "cotlat_cli/app.hpp"

int main(int argc, char** argv) { return cotlat::cli::run_cli(argc, argv, std::cout, std::cerr); }
