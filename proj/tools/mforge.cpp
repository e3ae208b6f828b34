#include "mforge/version.hpp"

#include <iostream>

int main() {
    std::cout << mforge::kEngineVersion << "\n";
    return 0;
}
