// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return nocplan::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
