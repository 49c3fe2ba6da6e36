#include <iostream>

#include "qfano/cli.hpp"

int main(int argc, char** argv) {
    return qfano::run_cli(argc, argv, std::cout, std::cerr);
}
