#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ballseq {

/// Signed working type, used only inside alternating sums.
using SignedCount = boost::multiprecision::cpp_int;

/// Arbitrary-precision non-negative integer. Every operation that could leave
/// the non-negative range throws std::domain_error instead.
class Count {
 public:
  Count() = default;
  Count(std::unsigned_integral auto v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Count(std::signed_integral auto v) : value_(v) { check(); }  // NOLINT
  explicit Count(const SignedCount& v) : value_(v) { check(); }
  /// Plain decimal digits only; throws std::invalid_argument otherwise.
  explicit Count(const std::string& decimal);
  explicit Count(const char* decimal) : Count(std::string(decimal)) {}

  const SignedCount& value() const noexcept { return value_; }
  explicit operator SignedCount() const { return value_; }
  std::string str() const { return value_.str(); }

  Count& operator+=(const Count& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Count& operator*=(const Count& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Truncating division; throws on division by zero.
  Count& operator/=(const Count& rhs) {
    if (rhs.value_ == 0) throw std::domain_error("Count: division by zero");
    value_ /= rhs.value_;
    return *this;
  }
  Count& operator-=(const Count& rhs) {
    value_ -= rhs.value_;
    check();
    return *this;
  }

  friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
  friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }
  friend Count operator/(Count lhs, const Count& rhs) { return lhs /= rhs; }
  friend Count operator-(Count lhs, const Count& rhs) { return lhs -= rhs; }

  friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    return a.value_ < b.value_   ? std::strong_ordering::less
           : b.value_ < a.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value_; }

 private:
  void check() const {
    if (value_ < 0) throw std::domain_error("Count: negative value " + value_.str());
  }

  SignedCount value_ = 0;
};

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count parse_count(const std::string& text) { return Count(text); }

/// base^exp with 0^0 = 1.
Count power(std::uint64_t base, std::uint64_t exp);

}  // namespace ballseq
