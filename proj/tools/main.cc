#include "cli.hh"

#include <iostream>

int main(int argc, char **argv)
{
    return rolecol::cli::run(argc, argv, std::cout, std::cerr);
}
