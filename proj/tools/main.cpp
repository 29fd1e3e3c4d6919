#include <iostream>

#include "sspc/cli.hpp"

int main(int argc, char** argv) { return sspc::cli::run(argc, argv, std::cout, std::cerr); }
