#include <iostream>

#include "wtrace_tool/cli.hpp"

int main(int argc, char** argv) { return wtrace::tool::run_cli(argc, argv, std::cout, std::cerr); }
