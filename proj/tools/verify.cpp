#include <iostream>
#include <string>
#include <vector>

#include <qhyper/cli.hpp>

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return qhyper::run_cli(args, std::cout, std::cerr);
}
