#pragma once

// Degree-one PL homeomorphisms of the circle R/rZ, stored as canonical lifts.
//
// The lift L is given on the fundamental domain [0, r] by nodes
// (0, y_0), ..., (r, y_0 + r) and extended by L(x + r) = L(x) + r. Lifts are
// unique up to adding multiples of r; the canonical one has 0 <= y_0 < r.
// The node at x = 0 is always kept, collinear interior nodes never are.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/rat.hpp"

namespace thompson {

class CircleMap {
 public:
  // Identity on R/Z.
  CircleMap() : CircleMap(1) {}
  // Identity on R/rZ. Throws std::invalid_argument for r < 1.
  explicit CircleMap(long circumference);

  // Validates x_0 = 0, x_m = r, y_m = y_0 + r and strict increase in both
  // coordinates, then canonicalizes. Throws std::invalid_argument.
  static CircleMap from_lift(long circumference, std::vector<Node> nodes);

  // Samples `lift` at 0, r and the given points of [0, r]; the lift must be
  // affine between consecutive sample points.
  static CircleMap from_lift_function(long circumference, std::vector<Rat> breakpoints,
                                      const std::function<Rat(const Rat&)>& lift);

  long circumference() const { return r_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  // The lift at any real x (not reduced).
  Rat lift(const Rat& x) const;
  // Inverse of the lift at any real y.
  Rat lift_inverse(const Rat& y) const;
  // Image of x mod r, in [0, r).
  Rat operator()(const Rat& x) const;

  std::vector<Rat> segment_slopes() const;
  bool is_identity() const;

  friend bool operator==(const CircleMap&, const CircleMap&) = default;

 private:
  long r_ = 1;
  std::vector<Node> nodes_;
};

// Reduces x into [0, r).
Rat mod_circle(const Rat& x, long r);

// f ∘ g. Throws std::invalid_argument when circumferences differ.
CircleMap compose(const CircleMap& f, const CircleMap& g);
CircleMap invert(const CircleMap& f);
CircleMap power(const CircleMap& f, long k);
// Conjugate by the orientation-reversing involution x -> -x of R/rZ.
CircleMap reflect(const CircleMap& f);

inline CircleMap operator*(const CircleMap& f, const CircleMap& g) { return compose(f, g); }

namespace gen {

// Thompson's C, canonical lift L(0) = 3/4.
CircleMap C();
// x -> x + a mod r. Throws std::invalid_argument unless 0 <= a < r.
CircleMap rotation(const Rat& a, long circumference = 1);
// Reads an F-element (identity outside [0,1]) as a circle map fixing 0.
// Throws std::invalid_argument for any other line map.
CircleMap embed_F(const PLMap& f);

}  // namespace gen

struct GroupT {};
struct GroupTnr {
  long n;
  long r;
};
using CircleGroupSpec = std::variant<GroupT, GroupTnr>;

std::string to_string(const CircleGroupSpec& g);

Membership is_member(const CircleMap& f, const CircleGroupSpec& g);

// Least k in [1, bound] with f^k = id, or nullopt if there is none.
template <typename Map>
std::optional<long> order(const Map& f, long bound) {
  Map acc = f;
  for (long k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return k;
    if (k < bound) acc = compose(acc, f);
  }
  return std::nullopt;
}

}  // namespace thompson
