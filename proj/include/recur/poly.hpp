#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "recur/rational.hpp"

namespace recur {

/// Dense univariate polynomial over Rat; coefficient index = power of x.
/// The zero polynomial has an empty coefficient list, and degree() reports
/// the sentinel kZeroDegree for it (callers treat it as minus infinity; it
/// never participates in degree arithmetic).
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static Poly x() { return Poly{Rat(0), Rat(1)}; }
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of x^k (zero beyond the stored range).
  const Rat& coeff(std::size_t k) const {
    static const Rat kZero(0);
    return k < c_.size() ? c_[k] : kZero;
  }
  const Rat& leading() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly& operator*=(const Rat& s) { *this = *this * s; return *this; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  /// Lexicographic-by-coefficient ordering after degree; gives the canonical
  /// factor order used by normalization.
  bool operator<(const Poly& o) const;

  /// Quotient and remainder with p = q*quot + rem, deg(rem) < deg(q).
  static std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q);

  /// Exact Horner evaluation.
  Rat eval(const Rat& x0) const;

  /// Formal derivative with respect to x.
  Poly derivative() const;

  /// Antiderivative with zero constant term.
  Poly antiderivative() const;

  Poly pow(unsigned k) const;

  /// Monic greatest common divisor via the Euclidean remainder sequence.
  static Poly gcd(const Poly& p, const Poly& q);

  /// If *this == r * base for a rational r, returns r.
  std::optional<Rat> ratio_to(const Poly& base) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

}  // namespace recur
