#include "sp/rational.hpp"

#include <cstdlib>

namespace sp {

std::string Rational::to_decimal_string() const {
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  int digits = twos > fives ? twos : fives;
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = num_ * (scale / den_);
  bool neg = scaled < 0;
  std::int64_t abs = neg ? -scaled : scaled;
  std::int64_t whole = abs / scale;
  std::int64_t frac = abs % scale;
  std::string out = (neg ? "-" : "") + std::to_string(whole);
  if (digits > 0) {
    std::string fs = std::to_string(frac);
    fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();
    if (!fs.empty()) out += "." + fs;
  }
  return out;
}

std::string Rational::to_fixed_string(int decimals) const {
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // round half up on the exact value
  std::int64_t n = num_ * scale * 2 + den_;  // 2*(v*scale) + 1, in halves
  std::int64_t q = n / (2 * den_);
  if (num_ < 0 && n % (2 * den_) != 0) { /* keep toward +inf for half-up */ }
  std::int64_t whole = q / scale;
  std::int64_t frac = q % scale;
  if (frac < 0) frac = -frac;
  std::string out = std::to_string(whole);
  if (decimals > 0) {
    std::string fs = std::to_string(frac);
    fs.insert(fs.begin(), static_cast<size_t>(decimals) - fs.size(), '0');
    out += "." + fs;
  }
  return out;
}

}  // namespace sp
