#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return hbtool::run(argc, argv, std::cout, std::cerr); }
