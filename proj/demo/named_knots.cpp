// Prints the text report for a handful of well-known slalom knots.

#include <iostream>

#include "slalom/slalom.hpp"

int main() {
  for (const char* code : {"[0]", "[0,1,1,2]", "[0,1,1,1]", "[0,1,2,2]", "[0,1,1,2,4]"}) {
    std::cout << slalom::to_text(slalom::analyze(slalom::CayleyCode::from_string(code))) << '\n';
  }
}
