#include <iostream>

#include "shc/cli/app.hpp"

int main(int argc, char** argv) { return shc::cli::run(argc, argv, std::cout, std::cerr); }
