#include "thompson/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace thompson {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits))
    throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text), mpz_class(1));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  mpz_class den(std::string(den_text), 10);
  if (den == 0)
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Rat(parse_integer(text.substr(0, slash), text), den);
}

Rat Rat::operator-() const { return Rat(mpq_class(-q_)); }

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rat(q_.get_den(), q_.get_num());
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rat::str() const {
  std::string s = q_.get_num().get_str(10);
  if (q_.get_den() != 1) s += "/" + q_.get_den().get_str(10);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

mpz_class floor_div(const Rat& a, const Rat& b) { return (a / b).floor(); }

bool is_n_adic(const Rat& q, long n) {
  if (n < 2) throw std::domain_error("n-adic predicate needs n >= 2");
  mpz_class d = q.den();
  const mpz_class base(n);
  for (;;) {
    mpz_class g = gcd(d, base);
    if (g == 1) break;
    d /= g;
  }
  return d == 1;
}

Residue delta_residue(const Rat& q, long n) {
  if (!is_n_adic(q, n))
    throw std::domain_error(q.str() + " is not in Z[1/" + std::to_string(n) + "]");
  // Smallest k with den | n^k; then q = num * (n^k / den) / n^k.
  const mpz_class den = q.den();
  mpz_class nk = 1;
  while (nk % den != 0) nk *= n;
  const mpz_class a = q.num() * (nk / den);
  const long m = n - 1;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
  return Residue{r.get_si(), m};
}

std::optional<long> log_base(const Rat& s, long n) {
  if (s.sign() <= 0 || n < 2) return std::nullopt;
  auto exact_power = [n](mpz_class v) -> std::optional<long> {
    long e = 0;
    while (v > 1) {
      if (v % n != 0) return std::nullopt;
      v /= n;
      ++e;
    }
    return e;
  };
  if (s.den() == 1) return exact_power(s.num());
  if (s.num() == 1) {
    auto e = exact_power(s.den());
    if (e) return -*e;
  }
  return std::nullopt;
}

Rat pow(const Rat& base, long e) {
  Rat b = e < 0 ? base.reciprocal() : base;
  Rat r(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

}  // namespace thompson
