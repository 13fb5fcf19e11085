#pragma once

// Exact rationals and the n-adic predicates used by every carrier.
//
// A Rat is always stored in lowest terms with a positive denominator, so two
// Rats are equal iff they are structurally equal. Zero is 0/1.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thompson {

class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p" or "p/q" in base 10, optional leading '-', q > 0. Input may
  // be unreduced. Throws std::invalid_argument on anything else.
  static Rat parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error on zero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat reciprocal() const;
  mpz_class floor() const;

  std::string str() const;

 private:
  explicit Rat(mpq_class q);
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Floor of a / b for b > 0, as an integer multiple count: floor(a / b).
mpz_class floor_div(const Rat& a, const Rat& b);

// Residue of q under the ring map Z[1/n] -> Z/(n-1)Z. For n = 2 the target
// ring is trivial and value is always 0.
struct Residue {
  long value = 0;
  long modulus = 1;
  friend bool operator==(const Residue&, const Residue&) = default;
};

// True iff every prime factor of den(q) divides n.
bool is_n_adic(const Rat& q, long n);

// Writes q = a / n^k and returns a mod (n-1). Throws std::domain_error when
// q is not n-adic or n < 2.
Residue delta_residue(const Rat& q, long n);

// If s = n^e for some integer e, returns e.
std::optional<long> log_base(const Rat& s, long n);

Rat pow(const Rat& base, long e);

}  // namespace thompson
