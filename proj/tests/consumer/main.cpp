#include <iostream>

#include <coxcensus/families.hpp>
#include <coxcensus/presentation.hpp>
#include <coxcensus/smith.hpp>

int main() {
  auto p = coxcensus::build_presentation(coxcensus::parse_family_spec("C(5,5;2,2;3,3)"));
  auto h = coxcensus::abelian_invariants(p).to_string();
  std::cout << h << "\n";
  return h == "Z2" ? 0 : 1;
}
