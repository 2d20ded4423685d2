#include "knotinv/integer.hpp"

#include <limits>
#include <stdexcept>

namespace knotinv {

namespace {

mpz_class from_int64(std::int64_t v) {
  mpz_class z;
  // mpz_set_si takes a long; long is 64-bit on every platform we build for.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) {
  demote();
}

Integer Integer::from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

Integer::Integer(const Integer& other) : small_(other.small_) {
  if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
  if (this == &other) return *this;
  small_ = other.small_;
  if (other.big_) {
    big_ = std::make_unique<mpz_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

int Integer::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_int64(small_); }

void Integer::demote() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() + rhs.to_mpz());
  demote();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() - rhs.to_mpz());
  demote();
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() * rhs.to_mpz());
  demote();
  return *this;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

bool operator==(const Integer& a, const Integer& b) {
  // Both sides are always demoted when they fit, so mixed representations differ.
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Integer::to_string() const {
  return big_ ? big_->get_str(10) : std::to_string(small_);
}

}  // namespace knotinv
