#include "qbx/scalar.hpp"

#include <cctype>

namespace qbx {

namespace {

bool is_probable_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw compute_error("element not invertible mod p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw validation_error("prime modulus too large (need p < 2^31)");
  if (!is_probable_prime(p)) throw validation_error("modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::name() const {
  return p_ == 0 ? "q" : "gf:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(text.substr(3));
    } catch (...) {
      throw validation_error("bad field spec '" + text + "'");
    }
    return prime(p);
  }
  throw validation_error("bad field spec '" + text + "' (expected q or gf:<p>)");
}

Scalar Scalar::zero(const Field& f) { return of(f, 0); }
Scalar Scalar::one(const Field& f) { return of(f, 1); }

Scalar Scalar::of(const Field& f, long long n) {
  Scalar s;
  s.field_ = f;
  if (f.is_prime()) {
    long long m = n % static_cast<long long>(f.modulus());
    if (m < 0) m += static_cast<long long>(f.modulus());
    s.val_ = static_cast<std::uint64_t>(m);
  } else {
    s.rat_ = n;
  }
  return s;
}

Scalar Scalar::rational(BigRat r) {
  Scalar s;
  s.rat_ = std::move(r);
  return s;
}

Scalar Scalar::mod_p(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.field_ = Field::prime(p);
  s.val_ = v % p;
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime() ? val_ == 0 : rat_.is_zero(); }

bool Scalar::is_one() const { return field_.is_prime() ? val_ == 1 : rat_ == 1; }

bool Scalar::is_negative() const { return !field_.is_prime() && rat_ < 0; }

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw compute_error("scalars from different fields (" + field_.name() + " vs " + o.field_.name() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime())
    s.val_ = (val_ + o.val_) % field_.modulus();
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime())
    s.val_ = (val_ + field_.modulus() - o.val_) % field_.modulus();
  else
    s.rat_ = rat_ - o.rat_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime())
    s.val_ = mod_mul(val_, o.val_, field_.modulus());
  else
    s.rat_ = rat_ * o.rat_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  if (o.is_zero()) throw compute_error("division by zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime())
    s.val_ = mod_mul(val_, mod_inv(o.val_, field_.modulus()), field_.modulus());
  else
    s.rat_ = rat_ / o.rat_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime())
    s.val_ = val_ == 0 ? 0 : field_.modulus() - val_;
  else
    s.rat_ = -rat_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw compute_error("division by zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_prime())
    s.val_ = mod_inv(val_, field_.modulus());
  else
    s.rat_ = BigRat(1) / rat_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime() ? val_ == o.val_ : rat_ == o.rat_;
}

std::string Scalar::text() const {
  if (field_.is_prime()) return std::to_string(val_) + " mod " + std::to_string(field_.modulus());
  const BigInt num = boost::multiprecision::numerator(rat_);
  const BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  std::string t = trim(text);
  if (t.empty()) throw parse_error("empty scalar literal");

  auto modpos = t.find(" mod ");
  if (modpos != std::string::npos) {
    if (!f.is_prime()) throw parse_error("'mod' literal outside a GF(p) session");
    std::uint64_t p = 0, v = 0;
    try {
      v = std::stoull(trim(t.substr(0, modpos)));
      p = std::stoull(trim(t.substr(modpos + 5)));
    } catch (...) {
      throw parse_error("bad scalar literal '" + text + "'");
    }
    if (p != f.modulus())
      throw parse_error("literal modulus " + std::to_string(p) + " differs from session GF(" +
                        std::to_string(f.modulus()) + ")");
    return mod_p(v, p);
  }

  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt n(t);
      if (f.is_prime()) {
        BigInt r = n % f.modulus();
        if (r < 0) r += f.modulus();
        return mod_p(r.convert_to<std::uint64_t>(), f.modulus());
      }
      Scalar s;
      s.rat_ = BigRat(n);
      return s;
    }
    BigInt n(trim(t.substr(0, slash)));
    BigInt d(trim(t.substr(slash + 1)));
    if (d == 0) throw compute_error("division by zero");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (f.is_prime()) {
      BigInt rn = n % f.modulus(), rd = d % f.modulus();
      if (rn < 0) rn += f.modulus();
      if (rd < 0) rd += f.modulus();
      Scalar num = mod_p(rn.convert_to<std::uint64_t>(), f.modulus());
      Scalar den = mod_p(rd.convert_to<std::uint64_t>(), f.modulus());
      return num / den;
    }
    Scalar s;
    s.rat_ = BigRat(n, d);
    return s;
  } catch (const error&) {
    throw;
  } catch (...) {
    throw parse_error("bad scalar literal '" + text + "'");
  }
}

}  // namespace qbx
