#include <chrono>
#include <iostream>
#include "hypermaps/engine.hpp"
#include "hypermaps/oracle.hpp"
int main() { std::cout << "placeholder\n"; }
