#pragma once

// Twisted conjugacy: automorphisms given by conjugation, the twisted action
// gamma . x = gamma x theta(gamma)^{-1}, fixed subgroups, the finite-order
// telescoping identity, the witness families and separation certificates.
//
// A certificate for x, y in Fix(theta) with theta^n = inner(gamma) rests on
// one fact: x ~_theta y forces x^n gamma and y^n gamma to be conjugate. Any
// conjugation invariant that differs on them therefore separates the twisted
// classes of x and y. Equal invariants prove nothing and are reported as
// inconclusive.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/invariants.hpp"

namespace thompson {

enum class Whitelist { group_element, reflection, affine };

std::string to_string(Whitelist w);

struct Inner {
  Element gamma;
};

struct ConjBy {
  Element h;
  Whitelist tag;
  long n = 2;  // base for the affine slope and group-element checks
};

// Conjugation by x -> 1 - x on the line, by x -> -x on the circle.
struct Rho {};

class Automorphism {
 public:
  using Kind = std::variant<Inner, ConjBy, Rho>;

  Automorphism(Inner k) : kind_(std::move(k)) {}   // NOLINT
  Automorphism(ConjBy k) : kind_(std::move(k)) {}  // NOLINT
  Automorphism(Rho k) : kind_(k) {}                // NOLINT
  static Automorphism identity_on(const Element& like) { return Inner{identity_like(like)}; }
  static Automorphism rho() { return Rho{}; }

  const Kind& kind() const { return kind_; }
  bool is_rho() const { return std::holds_alternative<Rho>(kind_); }
  // Inner automorphism by an identity element.
  bool is_identity_inner() const;

  std::string describe() const;

 private:
  Kind kind_;
};

// Throws std::invalid_argument on carrier mismatch or when a ConjBy
// conjugator fails its whitelist tag.
Element apply_aut(const Automorphism& theta, const Element& x);
Element apply_aut_power(const Automorphism& theta, long n, const Element& x);

// Throws std::invalid_argument unless h satisfies the whitelist tag.
void check_whitelist(const ConjBy& c);
// Classifies a conjugator, or nullopt if it is not whitelisted for base n.
std::optional<Whitelist> classify_conjugator(const Element& h, long n);

// gamma x theta(gamma^{-1}).
Element twisted_conjugate(const Element& gamma, const Element& x, const Automorphism& theta);

bool in_fix(const Automorphism& theta, const Element& x);

// Standard generators of the ambient group: A, B on the line; A, B, C on
// the circle of circumference 1.
std::vector<Element> ambient_generators(const Element& like);

// theta^n(g) = gamma g gamma^{-1} on every ambient generator.
bool power_is_inner(const Automorphism& theta, long n, const Element& gamma);

// Images of the ambient generators stay in F_n (line) or T_{n,r} (circle).
bool spot_check_generators(const Automorphism& theta, long n = 2);

enum class Verdict { pass, fail, precondition_unmet };

std::string to_string(Verdict v);

struct TelescopeReport {
  Verdict verdict = Verdict::fail;
  std::string detail;
};

// With theta^n = inner(gamma), x and y = z^{-1} x theta(z) both fixed by
// theta, checks y^n = z^{-1} x^n gamma z gamma^{-1}.
TelescopeReport telescope_check(const Element& x, const Element& z, const Automorphism& theta,
                                long n, const Element& gamma);

// Product of bumps on [2^{-(j+2)}, 2^{-(j+1)}], j < k: an F-element with
// exactly k support components, all inside (0, 1/2).
PLMap witness_f(long k);
// f_k ∘ rho(f_k): fixed by rho with 2k support components.
PLMap witness_h(long k);

enum class InvariantKind { sigma, order };

std::string to_string(InvariantKind k);

// sigma is always a count; order is nullopt when it exceeds the bound.
struct InvariantValue {
  std::optional<long> value;
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
  std::string str() const { return value ? std::to_string(*value) : "exceeds"; }
};

InvariantValue evaluate_invariant(InvariantKind kind, const Element& e,
                                  long torsion_bound = kDefaultTorsionBound);

struct SeparationCertificate {
  Automorphism aut;
  long n;
  Element gamma;
  Element x;
  Element y;
  InvariantKind invariant;
  InvariantValue x_value;
  InvariantValue y_value;
};

enum class SeparationStatus {
  certified,
  inconclusive,
  x_not_fixed,
  y_not_fixed,
  power_not_inner,
};

std::string to_string(SeparationStatus s);

struct SeparationResult {
  SeparationStatus status;
  std::optional<SeparationCertificate> certificate;
};

SeparationResult separate(const Element& x, const Element& y, const Automorphism& theta, long n,
                          const Element& gamma, InvariantKind invariant);

// Recomputes every precondition and both invariant values from the
// certificate's elements; the recorded values are not trusted.
struct ReplayReport {
  bool ok = false;
  std::string detail;
};

ReplayReport replay(const SeparationCertificate& cert);

struct RInfinityWitness {
  std::vector<Element> elements;
  std::vector<SeparationCertificate> certificates;
};

// Rho: h_1..h_N with pairwise sigma certificates (n = 2). Identity: f_1..f_N
// with pairwise ordinary-conjugacy certificates (n = 1). Anything else
// throws std::invalid_argument.
RInfinityWitness rinfinity_witness(const Automorphism& theta, long count);

}  // namespace thompson
