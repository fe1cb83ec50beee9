#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "recur/errors.hpp"

namespace recur {

/// Exact rational scalar. The only numeric type in the engine; every value is
/// kept in lowest terms with a positive denominator (zero is 0/1).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rat(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) fail(ErrorCode::Internal, "rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  /// Parses "p", "-p", or "p/q". Returns nothing on malformed input.
  static std::optional<Rat> parse(const std::string& s);

  static Rat from_mpz(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::Internal, "rational with zero denominator");
    mpq_class q(num);
    q /= mpq_class(den);
    return Rat(q);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return v_ < 0; }
  bool is_positive() const { return v_ > 0; }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  /// Integer value; caller must ensure is_integer() and fit.
  long to_long() const { return mpz_get_si(v_.get_num().get_mpz_t()); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) fail(ErrorCode::Internal, "rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  /// Largest integer <= this.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  /// Smallest integer >= this.
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  /// this^k for integer k (k < 0 requires nonzero base).
  Rat pow(long k) const;

  /// this^e when the result is rational and the rewrite base^e -> value is
  /// globally valid: base > 0 with an exact rational e-th root structure, or
  /// any nonzero base with integer e. Returns nothing otherwise.
  std::optional<Rat> pow_rat(const Rat& e) const;

  std::string str() const;  // "p" or "p/q"

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

}  // namespace recur
