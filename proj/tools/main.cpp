// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "commands.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return servqual::cli::run(args, std::cout, std::cerr);
}
