#include <iostream>

#include "deza/cli.hpp"

int main(int argc, char** argv)
{
    return deza::cli::run(argc, argv, std::cout, std::cerr);
}
