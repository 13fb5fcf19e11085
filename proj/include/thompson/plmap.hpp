#pragma once

// Piecewise-linear self-maps of the real line with affine tails.
//
// A PLMap is a finite list of nodes (x_i, y_i) with strictly increasing x,
// joined by line segments, plus a left tail through (x_0, y_0) and a right
// tail through (x_m, y_m). Instances are always canonical: no node is
// collinear with its neighbours or redundant with a tail, and an affine map
// is stored as the single node (0, f(0)). Equality of functions is therefore
// equality of the stored data.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thompson/rat.hpp"

namespace thompson {

struct Node {
  Rat x;
  Rat y;
  friend bool operator==(const Node&, const Node&) = default;
};

// One affine piece y = slope * x + intercept on [lo, hi]; nullopt is an
// unbounded end.
struct Piece {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  Rat slope;
  Rat intercept;
};

class PLMap {
 public:
  // Identity.
  PLMap();

  // Throws std::invalid_argument on an empty node list, unsorted or
  // duplicate x values, a zero slope anywhere, or mixed orientation.
  static PLMap canonical(std::vector<Node> nodes, Rat left_slope, Rat right_slope);

  static PLMap identity() { return PLMap(); }
  static PLMap affine(const Rat& a, const Rat& b);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Rat& left_slope() const { return left_slope_; }
  const Rat& right_slope() const { return right_slope_; }

  bool increasing() const { return left_slope_.sign() > 0; }
  bool is_identity() const;
  bool is_affine() const { return nodes_.size() == 1 && left_slope_ == right_slope_; }

  Rat operator()(const Rat& x) const;

  // Points of non-differentiability. Empty for affine maps.
  std::vector<Rat> breakpoints() const;
  // Slopes of the bounded segments, left to right.
  std::vector<Rat> segment_slopes() const;
  // All affine pieces including both tails, left to right.
  std::vector<Piece> pieces() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<Node> nodes_;
  Rat left_slope_;
  Rat right_slope_;
};

// f ∘ g.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
// f^k for any integer k.
PLMap power(const PLMap& f, long k);

inline PLMap operator*(const PLMap& f, const PLMap& g) { return compose(f, g); }

namespace gen {

// Generators of F, extended by the identity outside [0,1].
PLMap A();
PLMap B();
// x -> 1 - x.
PLMap reflection();
PLMap translation(const Rat& b);
// alpha ∘ A ∘ alpha^{-1} with alpha(x) = p + 2^{-m} x; supported exactly on
// (p, p + 2^{-m}). Throws std::invalid_argument if p is not dyadic or m < 0.
PLMap rescaled_bump(const Rat& p, long m);

}  // namespace gen

// Carrier groups for line maps.
struct GroupF {};
struct GroupFn {
  long n;
};
struct GroupFnInf {
  long n;
};
using GroupSpec = std::variant<GroupF, GroupFn, GroupFnInf>;

std::string to_string(const GroupSpec& g);

struct Membership {
  bool member = false;
  // Names the first violated condition; empty for members.
  std::string reason;
  explicit operator bool() const { return member; }
};

Membership is_member(const PLMap& f, const GroupSpec& g);

}  // namespace thompson
