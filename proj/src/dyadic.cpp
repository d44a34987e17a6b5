#include "treeplane/dyadic.hpp"

#include <algorithm>

#include "treeplane/error.hpp"

namespace treeplane {

void DyadicRational::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

DyadicRational DyadicRational::scaled(BigInt num, std::uint32_t exp) {
  DyadicRational r;
  r.num_ = std::move(num);
  r.exp_ = exp;
  r.canonicalize();
  return r;
}

DyadicRational DyadicRational::power_of_two(int e) {
  if (e >= 0) return scaled(BigInt(1) << e, 0);
  return scaled(1, static_cast<std::uint32_t>(-e));
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
  std::uint32_t e = std::max(exp_, o.exp_);
  BigInt a = num_ << (e - exp_);
  BigInt b = o.num_ << (e - o.exp_);
  return scaled(a + b, e);
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
  return *this + (-o);
}

DyadicRational DyadicRational::operator*(const DyadicRational& o) const {
  return scaled(num_ * o.num_, exp_ + o.exp_);
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool DyadicRational::operator<(const DyadicRational& o) const {
  std::uint32_t e = std::max(exp_, o.exp_);
  return (num_ << (e - exp_)) < (o.num_ << (e - o.exp_));
}

std::string DyadicRational::to_string() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

DyadicRational DyadicRational::parse(const std::string& s) {
  auto slash = s.find("/2^");
  if (slash == std::string::npos)
    throw Error(Errc::schema_error, "bad rational '" + s + "'");
  try {
    BigInt num(s.substr(0, slash));
    unsigned long exp = std::stoul(s.substr(slash + 3));
    return scaled(std::move(num), static_cast<std::uint32_t>(exp));
  } catch (const std::exception&) {
    throw Error(Errc::schema_error, "bad rational '" + s + "'");
  }
}

}  // namespace treeplane
