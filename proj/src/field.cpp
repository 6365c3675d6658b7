#include "gradus/field.hpp"

#include <sstream>

namespace gradus {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
  if (p == 2 || p == 3)
    throw Error(Errc::BadCharacteristic, "characteristic " + std::to_string(p) + " is excluded");
  if (!is_prime_u64(p))
    throw Error(Errc::BadCharacteristic, "modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31))
    throw Error(Errc::BadCharacteristic, "modulus too large (must be < 2^31)");
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p) + ")";
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid on signed 64-bit; p < 2^31 so no overflow
  long long t = 0, newt = 1;
  long long r = (long long)p, newr = (long long)(a % p);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error(Errc::Internal, "non-invertible residue");
  if (t < 0) t += (long long)p;
  return (std::uint64_t)t;
}

Scalar Scalar::of(const FieldSpec& fs, long n) {
  if (fs.is_rationals()) return rational(mpq_class(n));
  long long r = n % (long long)fs.p;
  if (r < 0) r += (long long)fs.p;
  return residue((std::uint64_t)r, fs.p);
}

Scalar Scalar::of(const FieldSpec& fs, long num, long den) {
  return of(fs, num) / of(fs, den);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  mpq_class c = q;
  c.canonicalize();
  s.v_ = c;
  s.p_ = 0;
  return s;
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.v_ = r % p;
  s.p_ = p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& fs, const std::string& text) {
  std::string t = text;
  // strip spaces around, tolerate "r mod p"
  auto strip = [](std::string& s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
  };
  strip(t);
  if (t.empty()) throw Error(Errc::ParseError, "empty scalar");
  if (fs.is_rationals()) {
    try {
      mpq_class q(t);
      return rational(q);
    } catch (const std::invalid_argument&) {
      throw Error(Errc::ParseError, "bad rational: " + text);
    }
  }
  std::string head = t;
  auto pos = t.find("mod");
  if (pos != std::string::npos) {
    head = t.substr(0, pos);
    std::string tail = t.substr(pos + 3);
    strip(head);
    strip(tail);
    if (tail != std::to_string(fs.p))
      throw Error(Errc::FieldMismatch, "residue " + text + " is not over " + fs.str());
  }
  try {
    mpz_class z(head);
    mpz_class r = z % mpz_class((unsigned long)fs.p);
    if (r < 0) r += mpz_class((unsigned long)fs.p);
    return residue(r.get_ui(), fs.p);
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "bad residue: " + text);
  }
}

bool Scalar::is_zero() const {
  return is_rational() ? rat() == 0 : res() == 0;
}

bool Scalar::is_one() const {
  return is_rational() ? rat() == 1 : res() == 1 % p_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (is_rational() != o.is_rational() || p_ != o.p_)
    throw Error(Errc::FieldMismatch, "scalars over " + field().str() + " and " + o.field().str());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return rational(-rat());
  return residue(res() == 0 ? 0 : p_ - res(), p_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (is_rational()) return rational(rat() + o.rat());
  return residue(res() + o.res(), p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (is_rational()) return rational(rat() - o.rat());
  return residue(res() + p_ - o.res(), p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (is_rational()) return rational(rat() * o.rat());
  return residue(res() * o.res(), p_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() != o.is_rational() || p_ != o.p_) return false;
  return is_rational() ? rat() == o.rat() : res() == o.res();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0 over " + field().str());
  if (is_rational()) return rational(1 / rat());
  return residue(mod_inverse(res(), p_), p_);
}

std::string Scalar::str() const {
  if (is_rational()) {
    std::ostringstream os;
    os << rat();
    return os.str();
  }
  return std::to_string(res()) + " mod " + std::to_string(p_);
}

}  // namespace gradus
