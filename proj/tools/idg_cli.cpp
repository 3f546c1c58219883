#include <iostream>

#include "idg/cli.hpp"

int main(int argc, char **argv)
{
    return idg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
