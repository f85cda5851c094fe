#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "covolume/cli.hpp"

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    covol::cli::Context ctx;
    ctx.interactive = ::isatty(STDOUT_FILENO) != 0;
    return covol::cli::run(args, std::cout, std::cerr, ctx);
}
