#pragma once

// Conjugation invariants: support and its component count sigma, slope and
// translation at +infinity, torsion order.

#include <optional>
#include <string>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/rat.hpp"

namespace thompson {

// A rational or one of +-infinity.
class ExtRat {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  ExtRat(Rat v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT
  static ExtRat neg_inf() { return ExtRat(Kind::neg_inf); }
  static ExtRat pos_inf() { return ExtRat(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::finite; }
  // Only meaningful when finite().
  const Rat& value() const { return value_; }

  std::string str() const;

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  explicit ExtRat(Kind k) : kind_(k) {}
  Kind kind_;
  Rat value_;
};

// Open interval (lo, hi) on the line, or on the circle the arc running
// forward from lo to hi with 0 <= lo < r and lo < hi <= lo + r.
struct Interval {
  ExtRat lo;
  ExtRat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SupportSet {
  bool on_circle = false;
  long circumference = 0;
  // Circle maps without fixed points; components is then empty.
  bool entire_circle = false;
  std::vector<Interval> components;

  std::size_t sigma() const { return entire_circle ? 1 : components.size(); }
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

SupportSet support(const PLMap& f);
SupportSet support(const CircleMap& f);
SupportSet support(const Element& f);

std::size_t sigma(const Element& f);

// Image of a line support set under theta, components re-sorted.
SupportSet transport(const SupportSet& s, const PLMap& theta);

struct SlopeTranslation {
  Rat lambda;  // slope at +infinity
  Rat tau;     // b in the eventual form a t + b
};

SlopeTranslation lambda_tau(const PLMap& f);

inline constexpr long kDefaultTorsionBound = 64;

struct InvariantProfile {
  std::size_t sigma = 0;
  SupportSet support;
  std::optional<Rat> lambda;  // line maps only
  std::optional<Rat> tau;
  std::optional<long> order;  // nullopt: exceeds bound
};

InvariantProfile profile(const Element& f, long torsion_bound = kDefaultTorsionBound);

}  // namespace thompson
