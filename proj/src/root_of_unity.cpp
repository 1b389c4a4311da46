#include "maxab/root_of_unity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "maxab/errors.hpp"

namespace maxab {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ValidationError("root of unity: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  std::int64_t r = e % den_;
  if (r < 0) r += den_;
  return {(num_ * r) % den_, den_};
}

double RootOfUnity::real() const {
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
}

double RootOfUnity::imag() const {
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
}

std::string RootOfUnity::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RootOfUnity RootOfUnity::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const long long a = std::stoll(s, &used);
      if (used != s.size()) throw ValidationError("bad phase '" + s + "'");
      return {a, 1};
    }
    std::size_t used_a = 0, used_b = 0;
    const std::string a_str = s.substr(0, slash), b_str = s.substr(slash + 1);
    const long long a = std::stoll(a_str, &used_a);
    const long long b = std::stoll(b_str, &used_b);
    if (used_a != a_str.size() || used_b != b_str.size() || b <= 0)
      throw ValidationError("bad phase '" + s + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError("bad phase '" + s + "'");
  }
}

}  // namespace maxab
