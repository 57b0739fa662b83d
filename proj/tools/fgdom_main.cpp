/**
 * @file fgdom_main.cpp
 * @brief Binary entry point; all logic lives in the library (cli.hpp).
 */

#include "fgdom/cli.hpp"

int main(int argc, char** argv) { return fgdom::run_cli(argc, argv); }
