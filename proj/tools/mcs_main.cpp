// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "mcs/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return mcs::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
