#include "tps/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tps::run_cli(args, std::cout, std::cerr, std::cin);
}
