#include <iostream>

#include <univ/cli.hpp>

int main(int argc, char **argv)
{
    return univ::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
