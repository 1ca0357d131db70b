#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "powmat/divisibility.hpp"

int main(int argc, char** argv) {
  powmat::set_divides_self_check(true);
  return doctest::Context(argc, argv).run();
}
