#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace maxab {

/// Exact element of finite order in U(1): the scalar exp(2*pi*i * num/den),
/// stored in lowest terms with 0 <= num < den.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  static RootOfUnity i() { return {1, 4}; }
  /// Primitive n-th root exp(2*pi*i/n).
  static RootOfUnity primitive(std::int64_t n) { return {1, n}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
  RootOfUnity inverse() const { return {den_ - num_, den_}; }
  RootOfUnity pow(std::int64_t e) const;
  /// Complex conjugate; equals the inverse on U(1).
  RootOfUnity conj() const { return inverse(); }
  /// A square root (the one with angle num/(2 den)).
  RootOfUnity sqrt() const { return {num_, 2 * den_}; }

  double real() const;
  double imag() const;

  /// "a/b" form used by the JSON formats.
  std::string to_string() const;
  static RootOfUnity parse(const std::string& s);

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    // compare angles a.num/a.den against b.num/b.den
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace maxab

template <>
struct std::hash<maxab::RootOfUnity> {
  std::size_t operator()(const maxab::RootOfUnity& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num() * 1000003 + r.den());
  }
};
