#include "recur/poly.hpp"

#include "recur/errors.hpp"

namespace recur {

Poly Poly::operator-() const {
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  if (s.is_zero()) return Poly();
  std::vector<Rat> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return Poly(std::move(r));
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) fail(ErrorCode::DivisionByZeroPoly, "divrem by zero polynomial");
  Poly rem = p;
  if (p.degree() < q.degree()) return {Poly(), rem};
  std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= q.degree()) {
    int shift = rem.degree() - q.degree();
    Rat factor = rem.leading() / q.leading();
    quot[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rat> sub(static_cast<std::size_t>(shift), Rat(0));
    sub.push_back(factor);
    rem -= Poly(std::move(sub)) * q;
  }
  return {Poly(std::move(quot)), rem};
}

Rat Poly::eval(const Rat& x0) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::antiderivative() const {
  if (is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned k) const {
  Poly acc = Poly::one();
  for (unsigned i = 0; i < k; ++i) acc *= *this;
  return acc;
}

Poly Poly::gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0)");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = b;
    b = r;
  }
  return a * (Rat(1) / a.leading());  // monic
}

std::optional<Rat> Poly::ratio_to(const Poly& base) const {
  if (is_zero() || base.is_zero()) return std::nullopt;
  if (degree() != base.degree()) return std::nullopt;
  Rat r = leading() / base.leading();
  if (*this == base * r) return r;
  return std::nullopt;
}

}  // namespace recur
