#include <iostream>
#include <string>
#include <vector>

#include "genboot/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return genboot::cli::run(args, std::cout, std::cerr);
}
