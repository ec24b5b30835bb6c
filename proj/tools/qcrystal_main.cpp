#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "qcrystal/cli.hpp"

int main(int argc, char** argv) {
    try {
        return qcrystal::run_cli(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
