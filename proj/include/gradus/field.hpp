#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals and prime fields
// GF(p) with p prime, p not in {2,3}. All values are immutable after
// construction; operations are pure and safe to share between threads.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gradus {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  BadCharacteristic,
  InvalidType,
  TooWideGrading,
  NotHomogeneous,
  NotInvolution,
  NotUnital,
  StructIdFails,
  EqDefFails,
  JacobiFails,
  EmptyPair,
  OuterZeta,
  BadMultiplicity,
  UnsupportedWeights,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return FieldSpec{}; }

  // Throws BadCharacteristic unless p is a prime other than 2 and 3.
  static FieldSpec gf(std::uint64_t p);

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::uint64_t characteristic() const { return is_rationals() ? 0 : p; }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;  // "Q" or "GF(p)"
};

// One exact field element. Rationals are kept canonical (lowest terms,
// positive denominator, courtesy of mpq); prime-field residues live in [0,p).
class Scalar {
public:
  Scalar() : v_(mpq_class(0)), p_(0) {}

  static Scalar zero(const FieldSpec& fs) { return of(fs, 0); }
  static Scalar one(const FieldSpec& fs) { return of(fs, 1); }
  static Scalar of(const FieldSpec& fs, long n);
  static Scalar of(const FieldSpec& fs, long num, long den);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t r, std::uint64_t p);

  // Parses the serialized forms produced by str(): "-3/4" over Q,
  // "4 mod 5" (or a bare integer) over GF(p).
  static Scalar parse(const FieldSpec& fs, const std::string& text);

  FieldSpec field() const {
    return is_rational() ? FieldSpec::rationals() : FieldSpec{FieldSpec::Kind::PrimeField, p_};
  }
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  std::uint64_t res() const { return std::get<std::uint64_t>(v_); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Multiplicative inverse; throws DivisionByZero on 0.
  Scalar inverse() const;

  std::string str() const;

private:
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, std::uint64_t> v_;
  std::uint64_t p_ = 0;  // modulus when prime-field
};

// Modular helpers (p < 2^31, residues reduced).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

}  // namespace gradus
