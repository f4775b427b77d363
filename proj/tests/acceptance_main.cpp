#include "vuf/acceptance.hpp"

#include <iostream>

int main() { return vuf::print_acceptance(vuf::run_acceptance(), std::cout) ? 0 : 1; }
