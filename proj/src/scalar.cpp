#include "nilva/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace nilva {

namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(__int128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v > __int128(kMin) && v <= __int128(kMax); }

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  *this = from_wide(num, den);
}

Scalar::Scalar(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  assign_big(std::move(c));
}

Scalar Scalar::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(uabs(num), u128(den));
  if (g > 1) {
    num /= __int128(g);
    den /= __int128(g);
  }
  Scalar r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  r.assign_big(std::move(q));
  return r;
}

void Scalar::assign_big(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("Scalar: zero denominator");
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_integer() const noexcept {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Scalar::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::optional<std::int64_t> Scalar::to_int64() const noexcept {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

std::string Scalar::fraction() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
  if (big_) return Scalar(mpq_class(-*big_));
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
        num_ = s;
        return *this;
      }
    }
    __int128 n = __int128(num_) * o.den_ + __int128(o.num_) * den_;
    __int128 d = __int128(den_) * o.den_;
    return *this = from_wide(n, d);
  }
  return *this = Scalar(mpq_class(to_mpq() + o.to_mpq()));
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
        num_ = p;
        return *this;
      }
    }
    __int128 n = __int128(num_) * o.num_;
    __int128 d = __int128(den_) * o.den_;
    return *this = from_wide(n, d);
  }
  return *this = Scalar(mpq_class(to_mpq() * o.to_mpq()));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (big_) return Scalar(mpq_class(1 / *big_));
  Scalar r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a small value is never stored big
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = __int128(a.num_) * b.den_;
    __int128 r = __int128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace nilva
