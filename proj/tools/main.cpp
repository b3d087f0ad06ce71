// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return fockhrt::cli::main_entry(argc, argv, std::cout, std::cerr); }
