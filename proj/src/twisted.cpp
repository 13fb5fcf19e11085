#include "thompson/twisted.hpp"

#include <stdexcept>

namespace thompson {

std::string to_string(Whitelist w) {
  switch (w) {
    case Whitelist::group_element:
      return "group-element";
    case Whitelist::reflection:
      return "reflection";
    default:
      return "affine";
  }
}

bool Automorphism::is_identity_inner() const {
  const auto* in = std::get_if<Inner>(&kind_);
  return in && is_identity(in->gamma);
}

std::string Automorphism::describe() const {
  if (is_rho()) return "rho";
  if (is_identity_inner()) return "id";
  if (std::holds_alternative<Inner>(kind_)) return "inner";
  return "conj:" + to_string(std::get<ConjBy>(kind_).tag);
}

std::optional<Whitelist> classify_conjugator(const Element& h, long n) {
  if (const auto* line = std::get_if<PLMap>(&h)) {
    if (*line == gen::reflection()) return Whitelist::reflection;
    if (line->is_affine() && log_base(line->left_slope().abs(), n) &&
        is_n_adic(line->nodes().front().y, n))
      return Whitelist::affine;
    if (is_member(*line, GroupFn{n})) return Whitelist::group_element;
    return std::nullopt;
  }
  const auto& circle = std::get<CircleMap>(h);
  if (is_member(circle, GroupTnr{n, circle.circumference()})) return Whitelist::group_element;
  return std::nullopt;
}

void check_whitelist(const ConjBy& c) {
  const auto found = classify_conjugator(c.h, c.n);
  // An affine reflection also classifies as reflection; either tag is fine.
  const bool ok = found && (*found == c.tag || (c.tag == Whitelist::affine &&
                                                *found == Whitelist::reflection));
  if (!ok)
    throw std::invalid_argument("conjugator is not in the whitelist as " + to_string(c.tag));
}

Element apply_aut(const Automorphism& theta, const Element& x) {
  return std::visit(
      [&](const auto& k) -> Element {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Inner>) {
          return product(k.gamma, x, invert(k.gamma));
        } else if constexpr (std::is_same_v<K, ConjBy>) {
          check_whitelist(k);
          return product(k.h, x, invert(k.h));
        } else {
          if (const auto* line = std::get_if<PLMap>(&x)) {
            const PLMap r = gen::reflection();
            return compose(compose(r, *line), r);
          }
          return reflect(std::get<CircleMap>(x));
        }
      },
      theta.kind());
}

Element apply_aut_power(const Automorphism& theta, long n, const Element& x) {
  if (n < 0) throw std::invalid_argument("automorphism power must be >= 0");
  Element out = x;
  for (long i = 0; i < n; ++i) out = apply_aut(theta, out);
  return out;
}

Element twisted_conjugate(const Element& gamma, const Element& x, const Automorphism& theta) {
  return product(gamma, x, apply_aut(theta, invert(gamma)));
}

bool in_fix(const Automorphism& theta, const Element& x) { return apply_aut(theta, x) == x; }

std::vector<Element> ambient_generators(const Element& like) {
  if (is_line(like)) return {gen::A(), gen::B()};
  if (std::get<CircleMap>(like).circumference() != 1)
    throw std::invalid_argument("no standard generating set on circumference " +
                                std::to_string(std::get<CircleMap>(like).circumference()));
  return {gen::embed_F(gen::A()), gen::embed_F(gen::B()), gen::C()};
}

bool power_is_inner(const Automorphism& theta, long n, const Element& gamma) {
  for (const auto& g : ambient_generators(gamma))
    if (apply_aut_power(theta, n, g) != product(gamma, g, invert(gamma))) return false;
  return true;
}

bool spot_check_generators(const Automorphism& theta, long n) {
  const Element like = std::visit(
      [](const auto& k) -> Element {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Inner>)
          return k.gamma;
        else if constexpr (std::is_same_v<K, ConjBy>)
          return k.h;
        else
          return PLMap::identity();
      },
      theta.kind());
  for (const auto& g : ambient_generators(like)) {
    const Element image = apply_aut(theta, g);
    if (const auto* line = std::get_if<PLMap>(&image)) {
      if (!is_member(*line, GroupFn{n})) return false;
    } else {
      const auto& c = std::get<CircleMap>(image);
      if (!is_member(c, GroupTnr{n, c.circumference()})) return false;
    }
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "precondition-unmet";
  }
}

TelescopeReport telescope_check(const Element& x, const Element& z, const Automorphism& theta,
                                long n, const Element& gamma) {
  if (n < 1) return {Verdict::precondition_unmet, "n must be >= 1"};
  if (!power_is_inner(theta, n, gamma))
    return {Verdict::precondition_unmet, "theta^n is not inner(gamma) on generators"};
  if (!in_fix(theta, x)) return {Verdict::precondition_unmet, "x is not in Fix(theta)"};
  const Element z_inv = invert(z);
  const Element y = product(z_inv, x, apply_aut(theta, z));
  if (!in_fix(theta, y)) return {Verdict::precondition_unmet, "y is not in Fix(theta)"};
  const Element lhs = power(y, n);
  const Element rhs = product(z_inv, power(x, n), gamma, z, invert(gamma));
  if (lhs == rhs) return {Verdict::pass, {}};
  return {Verdict::fail, "y^n differs from z^-1 x^n gamma z gamma^-1"};
}

PLMap witness_f(long k) {
  if (k < 1) throw std::invalid_argument("witness index must be >= 1");
  PLMap f;
  for (long j = 0; j < k; ++j) f = compose(f, gen::rescaled_bump(pow(Rat(2), -(j + 2)), j + 2));
  return f;
}

PLMap witness_h(long k) {
  const PLMap f = witness_f(k);
  const PLMap r = gen::reflection();
  return compose(f, compose(compose(r, f), r));
}

std::string to_string(InvariantKind k) { return k == InvariantKind::sigma ? "sigma" : "order"; }

InvariantValue evaluate_invariant(InvariantKind kind, const Element& e, long torsion_bound) {
  if (kind == InvariantKind::sigma) return {static_cast<long>(sigma(e))};
  return {order(e, torsion_bound)};
}

std::string to_string(SeparationStatus s) {
  switch (s) {
    case SeparationStatus::certified:
      return "certified";
    case SeparationStatus::inconclusive:
      return "inconclusive";
    case SeparationStatus::x_not_fixed:
      return "x-not-in-fix";
    case SeparationStatus::y_not_fixed:
      return "y-not-in-fix";
    default:
      return "power-not-inner";
  }
}

SeparationResult separate(const Element& x, const Element& y, const Automorphism& theta, long n,
                          const Element& gamma, InvariantKind invariant) {
  if (!in_fix(theta, x)) return {SeparationStatus::x_not_fixed, std::nullopt};
  if (!in_fix(theta, y)) return {SeparationStatus::y_not_fixed, std::nullopt};
  if (n < 1 || !power_is_inner(theta, n, gamma))
    return {SeparationStatus::power_not_inner, std::nullopt};
  const InvariantValue xv = evaluate_invariant(invariant, compose(power(x, n), gamma));
  const InvariantValue yv = evaluate_invariant(invariant, compose(power(y, n), gamma));
  if (xv == yv) return {SeparationStatus::inconclusive, std::nullopt};
  return {SeparationStatus::certified,
          SeparationCertificate{theta, n, gamma, x, y, invariant, xv, yv}};
}

ReplayReport replay(const SeparationCertificate& cert) {
  const auto& theta = cert.aut;
  if (cert.n < 1) return {false, "n must be >= 1"};
  if (!in_fix(theta, cert.x)) return {false, "x is not fixed by the automorphism"};
  if (!in_fix(theta, cert.y)) return {false, "y is not fixed by the automorphism"};
  if (!power_is_inner(theta, cert.n, cert.gamma))
    return {false, "automorphism power is not inner(gamma)"};
  auto nth_times_gamma = [&](const Element& e) {
    Element acc = cert.gamma;
    for (long i = 0; i < cert.n; ++i) acc = compose(e, acc);
    return acc;
  };
  const InvariantValue xv = evaluate_invariant(cert.invariant, nth_times_gamma(cert.x));
  const InvariantValue yv = evaluate_invariant(cert.invariant, nth_times_gamma(cert.y));
  if (xv != cert.x_value) return {false, "x value recomputes to " + xv.str()};
  if (yv != cert.y_value) return {false, "y value recomputes to " + yv.str()};
  if (xv == yv) return {false, "invariant values coincide"};
  return {true, {}};
}

RInfinityWitness rinfinity_witness(const Automorphism& theta, long count) {
  if (count < 2) throw std::invalid_argument("witness count must be >= 2");
  long n = 0;
  RInfinityWitness w;
  if (theta.is_rho()) {
    n = 2;
    for (long k = 1; k <= count; ++k) w.elements.emplace_back(witness_h(k));
  } else if (theta.is_identity_inner() && is_line(std::get<Inner>(theta.kind()).gamma)) {
    n = 1;
    for (long k = 1; k <= count; ++k) w.elements.emplace_back(witness_f(k));
  } else {
    throw std::invalid_argument("rinfinity_witness supports rho and id only, got " +
                                theta.describe());
  }
  const Element id = PLMap::identity();
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    for (std::size_t j = i + 1; j < w.elements.size(); ++j) {
      auto res = separate(w.elements[i], w.elements[j], theta, n, id, InvariantKind::sigma);
      if (!res.certificate)
        throw std::logic_error("witness pair " + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + " not separated: " +
                               to_string(res.status));
      w.certificates.push_back(std::move(*res.certificate));
    }
  return w;
}

}  // namespace thompson
