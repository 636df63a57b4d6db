#include <iostream>

#include "diracsea/cli.hpp"

int main(int argc, char** argv)
{
    return diracsea::cli::run_cli(argc, argv, std::cout, std::cerr);
}
