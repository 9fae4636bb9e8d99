#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "surfalg/errors.hpp"

namespace surfalg {

// Exact coefficient: a rational number, or an element of a prime field F_p.
// Serialized forms: "3/7", "-2", "4 mod 5". No floating point anywhere.
class Scalar {
public:
  Scalar() : num_(0), den_(1), mod_(0) {}

  static Scalar rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw Error("BadScalar", "zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
  }

  static Scalar mod_p(std::int64_t value, std::int64_t p) {
    if (p < 2 || !is_prime(p))
      throw Error("BadScalar", "modulus " + std::to_string(p) + " is not prime");
    Scalar s;
    s.mod_ = p;
    s.num_ = ((value % p) + p) % p;
    s.den_ = 1;
    return s;
  }

  static Scalar zero() { return rational(0); }
  static Scalar one() { return rational(1); }

  // Accepts "a", "a/b" and "v mod p" (whitespace tolerated around tokens).
  static Scalar parse(const std::string& text);

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_modular() const { return mod_ != 0; }
  std::int64_t modulus() const { return mod_; }

  bool operator==(const Scalar& other) const {
    return num_ == other.num_ && den_ == other.den_ && mod_ == other.mod_;
  }
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  std::string str() const {
    if (mod_ != 0) return std::to_string(num_) + " mod " + std::to_string(mod_);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::int64_t num_;
  std::int64_t den_;
  std::int64_t mod_;  // 0 for rationals, the prime p for F_p elements
};

inline Scalar Scalar::parse(const std::string& text) {
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  auto to_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) throw Error("BadScalar", "empty number in '" + text + "'");
    size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw Error("BadScalar", "cannot parse '" + text + "'");
    }
    if (pos != s.size()) throw Error("BadScalar", "cannot parse '" + text + "'");
    return v;
  };

  std::string t = trim(text);
  size_t mod_pos = t.find(" mod ");
  if (mod_pos != std::string::npos) {
    std::int64_t v = to_int(trim(t.substr(0, mod_pos)));
    std::int64_t p = to_int(trim(t.substr(mod_pos + 5)));
    return mod_p(v, p);
  }
  size_t slash = t.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = to_int(trim(t.substr(0, slash)));
    std::int64_t d = to_int(trim(t.substr(slash + 1)));
    return rational(n, d);
  }
  return rational(to_int(t));
}

}  // namespace surfalg
