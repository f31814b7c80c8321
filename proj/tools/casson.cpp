#include <iostream>
#include <string>
#include <vector>

#include "casson/cli/run.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return casson::cli::run(args, std::cout, std::cerr);
}
