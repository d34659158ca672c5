#include <iostream>
#include <string>
#include <vector>

#include "charcensus/cli.hpp"

int main(int argc, char** argv) {
    return charcensus::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                           std::cerr);
}
