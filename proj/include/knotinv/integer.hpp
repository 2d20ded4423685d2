// Arbitrary-precision integer with an inline int64 fast path.
//
// Values that fit in int64_t live inline; anything larger is promoted to a
// heap-allocated GMP integer. Arithmetic never overflows silently.

#ifndef KNOTINV_INTEGER_HPP
#define KNOTINV_INTEGER_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace knotinv {

class Integer {
 public:
  Integer() noexcept = default;
  Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v);

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer from_string(std::string_view text);

  Integer(const Integer& other);
  Integer(Integer&& other) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&& other) noexcept = default;
  ~Integer() = default;

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  /// Only meaningful when is_small().
  std::int64_t small_value() const noexcept { return small_; }
  mpz_class to_mpz() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  Integer operator-() const;

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Integer& v) {
    return os << v.to_string();
  }

 private:
  void demote();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace knotinv

#endif  // KNOTINV_INTEGER_HPP
