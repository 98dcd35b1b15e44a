#include "swrt/poly.hpp"

#include <algorithm>
#include <cmath>

namespace swrt {

double BivariatePoly::eval_double(double k, double x) const {
  double acc = 0;
  for (const auto& [key, c] : c_)
    acc += c.to_double() * std::pow(k, key.first) * std::pow(x, key.second);
  return acc;
}

int BivariatePoly::max_k_degree() const {
  int deg = -1;
  for (const auto& [key, c] : c_) deg = std::max(deg, key.first);
  return deg;
}

int BivariatePoly::max_x_degree() const {
  int deg = -1;
  for (const auto& [key, c] : c_) deg = std::max(deg, key.second);
  return deg;
}

}  // namespace swrt
