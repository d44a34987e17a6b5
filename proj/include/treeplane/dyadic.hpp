#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace treeplane {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational num / 2^exp, canonical: num odd or zero (exp 0 when
// num is zero). All arithmetic is exact; floating point is rejected at
// compile time.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(int n) : num_(n) {}
  DyadicRational(long long n) : num_(n) {}
  DyadicRational(double) = delete;
  DyadicRational(float) = delete;

  static DyadicRational scaled(BigInt num, std::uint32_t exp);
  // 2^e for e >= 0, 1/2^-e for e < 0.
  static DyadicRational power_of_two(int e);

  const BigInt& numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  DyadicRational operator+(const DyadicRational& o) const;
  DyadicRational operator-(const DyadicRational& o) const;
  DyadicRational operator*(const DyadicRational& o) const;
  DyadicRational operator-() const;

  bool operator==(const DyadicRational& o) const {
    return num_ == o.num_ && exp_ == o.exp_;
  }
  bool operator!=(const DyadicRational& o) const { return !(*this == o); }
  bool operator<(const DyadicRational& o) const;
  bool operator<=(const DyadicRational& o) const { return !(o < *this); }
  bool operator>(const DyadicRational& o) const { return o < *this; }
  bool operator>=(const DyadicRational& o) const { return !(*this < o); }

  // Canonical text form "num/2^exp".
  std::string to_string() const;
  static DyadicRational parse(const std::string& s);

 private:
  void canonicalize();

  BigInt num_ = 0;
  std::uint32_t exp_ = 0;
};

}  // namespace treeplane
