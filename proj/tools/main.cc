#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return iasl::run_cli(argc, argv, std::cout, std::cerr);
}
