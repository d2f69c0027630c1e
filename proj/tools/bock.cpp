// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "bock/cli.hpp"

int main(int argc, char** argv) {
  return bock::cli::main(argc, argv, std::cout, std::cerr);
}
