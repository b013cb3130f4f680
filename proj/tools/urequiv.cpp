// SPDX-License-Identifier: Apache-2.0
#include "urequiv/cli.hpp"

int main(int argc, char** argv) { return urequiv::main_with_args(argc, argv); }
