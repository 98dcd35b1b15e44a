#include "swrt/precision.hpp"

#include <cstdlib>

namespace swrt {

namespace {
int read_precision() {
  const char* env = std::getenv("SEIFERT_WRT_PRECISION");
  if (!env) return 64;
  const int bits = std::atoi(env);
  return bits > 0 ? bits : 64;
}
}  // namespace

int precision_bits() {
  static const int bits = read_precision();
  return bits;
}

bool use_extended_precision() { return precision_bits() > 64; }

}  // namespace swrt
