#include <iostream>
#include <string>
#include <vector>

#include "qcstar/cli.hpp"

int main(int argc, char** argv) {
    return qcstar::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
