#include "smashcoh/linalg/scalar.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace smashcoh {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits(__int128 v) { return v <= kMax && v > kMin; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
  if (t < 0) t += p;
  return t;
}

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

// Residue of a scalar that is either already mod p or a rational.
std::int64_t residue_of(const Scalar& s, std::uint32_t p) {
  if (s.modulus() == p) return s.raw_numerator();
  if (s.modulus() != 0)
    throw FieldMismatch("cannot combine elements of F_" + std::to_string(s.modulus()) +
                        " and F_" + std::to_string(p));
  if (s.is_integer_literal()) {
    std::int64_t r = s.raw_numerator() % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  mpq_class q = s.to_mpq();
  std::int64_t n = reduce_mpz(q.get_num(), p);
  std::int64_t d = reduce_mpz(q.get_den(), p);
  if (d == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
  return static_cast<std::int64_t>((static_cast<__int128>(n) * mod_inverse(d, p)) % p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime_number(p) || p >= (std::int64_t{1} << 31))
    throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return p_ ? Scalar::residue(0, p_) : Scalar(0); }
Scalar Field::one() const { return p_ ? Scalar::residue(1, p_) : Scalar(1); }
Scalar Field::from_int(std::int64_t v) const { return p_ ? Scalar::residue(v, p_) : Scalar(v); }

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  return convert(Scalar::rational(num, den));
}

Scalar Field::convert(const Scalar& s) const {
  if (p_ == 0) {
    if (s.modulus() != 0)
      throw FieldMismatch("cannot map an element of F_" + std::to_string(s.modulus()) +
                          " into Q");
    return s;
  }
  return Scalar::residue(residue_of(s, p_), p_);
}

Scalar Field::parse(const std::string& text) const {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  auto bad = [&]() { return std::invalid_argument("malformed scalar '" + text + "'"); };
  if (t.empty()) throw bad();
  auto mod_pos = t.find("mod");
  if (mod_pos != std::string::npos) {
    std::string lhs = t.substr(0, mod_pos), rhs = t.substr(mod_pos + 3);
    std::int64_t p = 0;
    try {
      p = std::stoll(rhs);
    } catch (...) {
      throw bad();
    }
    if (p_ == 0 || p != static_cast<std::int64_t>(p_))
      throw FieldMismatch("scalar '" + text + "' does not live in " + name());
    return convert(Field::rationals().parse(lhs));
  }
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class z;
      if (z.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw bad();
      return convert(Scalar::rational(mpq_class(z)));
    }
    mpz_class n, d;
    std::string ns = t.substr(0, slash), ds = t.substr(slash + 1);
    if (n.set_str(ns[0] == '+' ? ns.substr(1) : ns, 10) != 0 || d.set_str(ds, 10) != 0)
      throw bad();
    if (d == 0) throw std::domain_error("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return convert(Scalar::rational(q));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string Field::name() const { return p_ ? "F_" + std::to_string(p_) : "Q"; }

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  Scalar s;
  s.mod_ = p;
  s.num_ = v % static_cast<std::int64_t>(p);
  if (s.num_ < 0) s.num_ += p;
  return s;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar s;
  s.set_from_i128(num, den);
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.set_from_mpq(q);
  return s;
}

Scalar::Scalar(const Scalar& o)
    : num_(o.num_), den_(o.den_), mod_(o.mod_),
      big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    mod_ = o.mod_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Scalar::set_from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  auto to_mpz = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  set_from_mpq(mpq_class(to_mpz(n), to_mpz(d)));
}

void Scalar::set_from_mpq(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != kMin) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  q.canonicalize();
  return q;
}

void Scalar::align_modulus(const Scalar& o) {
  if (mod_ == o.mod_) return;
  if (mod_ == 0) {
    std::int64_t r = residue_of(*this, o.mod_);
    *this = residue(r, o.mod_);
    return;
  }
  if (o.mod_ != 0)
    throw FieldMismatch("cannot combine elements of F_" + std::to_string(mod_) + " and F_" +
                        std::to_string(o.mod_));
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (mod_) {
    if (r.num_) r.num_ = mod_ - r.num_;
  } else if (big_) {
    r.set_from_mpq(-*big_);
  } else if (num_ == kMin) {
    r.set_from_i128(-static_cast<__int128>(num_), den_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (mod_) return residue(mod_inverse(num_, mod_), mod_);
  Scalar r;
  if (big_)
    r.set_from_mpq(1 / *big_);
  else
    r.set_from_i128(den_, num_);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (mod_ || o.mod_) {
    align_modulus(o);
    std::int64_t b = o.mod_ == mod_ ? o.num_ : residue_of(o, mod_);
    num_ += b;
    if (num_ >= static_cast<std::int64_t>(mod_)) num_ -= mod_;
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    set_from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  set_from_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (mod_ || o.mod_) {
    align_modulus(o);
    std::int64_t b = o.mod_ == mod_ ? o.num_ : residue_of(o, mod_);
    num_ = static_cast<std::int64_t>((static_cast<__int128>(num_) * b) % mod_);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    set_from_i128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  set_from_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) {
    std::uint32_t p = a.mod_ ? a.mod_ : b.mod_;
    if (a.mod_ && b.mod_) return false;
    return residue_of(a, p) == residue_of(b, p);
  }
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (mod_ || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace smashcoh
