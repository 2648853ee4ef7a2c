#include "rcusum/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return rcusum::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
