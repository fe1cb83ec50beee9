#include "recur/rational.hpp"

namespace recur {

std::optional<Rat> Rat::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rat(mpq_class(mpz_class(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    return from_mpz(mpz_class(num), d);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Rat Rat::pow(long k) const {
  if (k == 0) return Rat(1);
  bool inv = k < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  if (inv && is_zero()) fail(ErrorCode::Internal, "0 raised to negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
  return inv ? from_mpz(d, n) : from_mpz(n, d);
}

std::optional<Rat> Rat::pow_rat(const Rat& e) const {
  if (e.is_zero()) return Rat(1);
  if (is_zero()) return std::nullopt;
  if (e.is_integer()) {
    long k = e.to_long();
    return pow(k);
  }
  if (is_negative()) return std::nullopt;  // fractional power of a negative scale
  // e = u/v in lowest terms, v >= 2: need exact v-th roots of num and den.
  unsigned long v = mpz_get_ui(e.den().get_mpz_t());
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num().get_mpz_t(), v)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den().get_mpz_t(), v)) return std::nullopt;
  Rat root = from_mpz(rn, rd);
  long u = mpz_get_si(e.num().get_mpz_t());
  return root.pow(u);
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace recur
