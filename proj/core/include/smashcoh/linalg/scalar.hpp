#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace smashcoh {

class Scalar;

/// Exact ground field: the rationals or a prime field F_p.
class Field {
 public:
  /// The rationals.
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument when p is not prime or does not fit in 31 bits.
  static Field prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// num/den mapped into the field; throws when den is not invertible.
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;
  /// Parses "3", "-3/7" or "2 mod 5" (the modulus must equal the characteristic).
  Scalar parse(const std::string& text) const;
  /// Maps a scalar of another field (or an integer literal) into this one.
  Scalar convert(const Scalar& s) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact field element. Rationals use an int64 fast path that spills into GMP
/// on overflow; prime-field elements are residues tagged with their modulus.
/// A rational integer combines with a prime-field element by reduction, so
/// literals like Scalar(1) work in every field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : num_(v) {}           // NOLINT(google-explicit-constructor)

  static Scalar residue(std::int64_t v, std::uint32_t p);
  static Scalar rational(std::int64_t num, std::int64_t den);
  static Scalar rational(const mpq_class& q);

  Scalar(const Scalar& o);
  Scalar(Scalar&& o) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&& o) noexcept = default;
  ~Scalar() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  std::uint32_t modulus() const { return mod_; }
  bool is_integer_literal() const { return mod_ == 0 && !big_ && den_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact decimal form: "n", "n/d" for rationals, the residue for F_p.
  std::string to_string() const;
  mpq_class to_mpq() const;
  /// Residue / numerator; meaningful for prime fields and small integers.
  std::int64_t raw_numerator() const { return num_; }

 private:
  void set_from_i128(__int128 n, __int128 d);
  void set_from_mpq(mpq_class q);
  void align_modulus(const Scalar& o);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t mod_ = 0;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace smashcoh
