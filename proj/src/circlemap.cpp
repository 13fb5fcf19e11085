#include "thompson/circlemap.hpp"

#include <algorithm>
#include <stdexcept>

namespace thompson {

namespace {

Rat slope_between(const Node& a, const Node& b) { return (b.y - a.y) / (b.x - a.x); }

Rat interpolate(const std::vector<Node>& nodes, const Rat& x) {
  auto hi = std::upper_bound(nodes.begin(), nodes.end(), x,
                             [](const Rat& v, const Node& n) { return v < n.x; });
  if (hi == nodes.end()) return nodes.back().y;
  if (hi == nodes.begin()) return nodes.front().y;
  auto lo = hi - 1;
  return lo->y + slope_between(*lo, *hi) * (x - lo->x);
}

Rat interpolate_inverse(const std::vector<Node>& nodes, const Rat& y) {
  auto hi = std::upper_bound(nodes.begin(), nodes.end(), y,
                             [](const Rat& v, const Node& n) { return v < n.y; });
  if (hi == nodes.end()) return nodes.back().x;
  if (hi == nodes.begin()) return nodes.front().x;
  auto lo = hi - 1;
  return lo->x + (y - lo->y) / slope_between(*lo, *hi);
}

}  // namespace

Rat mod_circle(const Rat& x, long r) {
  const Rat period(r);
  return x - Rat(floor_div(x, period), mpz_class(1)) * period;
}

CircleMap::CircleMap(long circumference) : r_(circumference) {
  if (r_ < 1) throw std::invalid_argument("circumference must be a positive integer");
  nodes_ = {Node{Rat(0), Rat(0)}, Node{Rat(r_), Rat(r_)}};
}

CircleMap CircleMap::from_lift(long circumference, std::vector<Node> nodes) {
  CircleMap f(circumference);
  const Rat period(circumference);
  if (nodes.size() < 2) throw std::invalid_argument("circle lift needs at least two nodes");
  if (nodes.front().x != 0 || nodes.back().x != period)
    throw std::invalid_argument("circle lift must span [0, " + period.str() + "]");
  if (nodes.back().y != nodes.front().y + period)
    throw std::invalid_argument("circle lift is not degree one: L(r) != L(0) + r");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i].x < nodes[i + 1].x) || !(nodes[i].y < nodes[i + 1].y))
      throw std::invalid_argument("circle lift not strictly increasing at " +
                                  nodes[i + 1].x.str());
  }

  const Rat shift = Rat(floor_div(nodes.front().y, period), mpz_class(1)) * period;
  std::vector<Node> kept;
  kept.reserve(nodes.size());
  for (auto& n : nodes) {
    n.y -= shift;
    while (kept.size() >= 2 &&
           slope_between(kept[kept.size() - 2], kept.back()) == slope_between(kept.back(), n))
      kept.pop_back();
    kept.push_back(std::move(n));
  }
  f.nodes_ = std::move(kept);
  return f;
}

CircleMap CircleMap::from_lift_function(long circumference, std::vector<Rat> breakpoints,
                                        const std::function<Rat(const Rat&)>& lift) {
  const Rat period(circumference);
  std::vector<Rat> xs{Rat(0), period};
  for (auto& b : breakpoints)
    if (b >= 0 && b <= period) xs.push_back(std::move(b));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (auto& x : xs) {
    Rat y = lift(x);
    nodes.push_back(Node{std::move(x), std::move(y)});
  }
  return from_lift(circumference, std::move(nodes));
}

Rat CircleMap::lift(const Rat& x) const {
  const Rat period(r_);
  const Rat turns(floor_div(x, period), mpz_class(1));
  return interpolate(nodes_, x - turns * period) + turns * period;
}

Rat CircleMap::lift_inverse(const Rat& y) const {
  const Rat period(r_);
  const Rat turns(floor_div(y - nodes_.front().y, period), mpz_class(1));
  return interpolate_inverse(nodes_, y - turns * period) + turns * period;
}

Rat CircleMap::operator()(const Rat& x) const { return mod_circle(lift(x), r_); }

std::vector<Rat> CircleMap::segment_slopes() const {
  std::vector<Rat> out;
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    out.push_back(slope_between(nodes_[i], nodes_[i + 1]));
  return out;
}

bool CircleMap::is_identity() const { return *this == CircleMap(r_); }

CircleMap compose(const CircleMap& f, const CircleMap& g) {
  if (f.circumference() != g.circumference())
    throw std::invalid_argument("circumference mismatch: " + std::to_string(f.circumference()) +
                                " vs " + std::to_string(g.circumference()));
  const long r = g.circumference();
  const Rat period(r);
  const Rat lo = g.nodes().front().y;
  const Rat hi = lo + period;
  std::vector<Rat> xs;
  for (const auto& n : g.nodes()) xs.push_back(n.x);
  for (const auto& n : f.nodes()) {
    // Every translate n.x + q r landing in L_g([0, r]) pulls back to a
    // breakpoint candidate.
    const mpz_class q0 = floor_div(lo - n.x, period);
    for (int dq = 0; dq <= 2; ++dq) {
      const Rat v = n.x + Rat(q0 + dq, mpz_class(1)) * period;
      if (v >= lo && v <= hi) xs.push_back(g.lift_inverse(v));
    }
  }
  return CircleMap::from_lift_function(r, std::move(xs),
                                       [&](const Rat& x) { return f.lift(g.lift(x)); });
}

CircleMap invert(const CircleMap& f) {
  std::vector<Rat> xs;
  for (const auto& n : f.nodes()) xs.push_back(mod_circle(n.y, f.circumference()));
  return CircleMap::from_lift_function(f.circumference(), std::move(xs),
                                       [&](const Rat& y) { return f.lift_inverse(y); });
}

CircleMap power(const CircleMap& f, long k) {
  CircleMap base = k < 0 ? invert(f) : f;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  CircleMap result(f.circumference());
  while (e) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

CircleMap reflect(const CircleMap& f) {
  std::vector<Rat> xs;
  for (const auto& n : f.nodes()) xs.push_back(mod_circle(-n.x, f.circumference()));
  return CircleMap::from_lift_function(f.circumference(), std::move(xs),
                                       [&](const Rat& x) { return -f.lift(-x); });
}

namespace gen {

CircleMap C() {
  return CircleMap::from_lift(1, {{Rat(0), Rat(3, 4)},
                                  {Rat(1, 2), Rat(1)},
                                  {Rat(3, 4), Rat(3, 2)},
                                  {Rat(1), Rat(7, 4)}});
}

CircleMap rotation(const Rat& a, long circumference) {
  if (a < 0 || a >= Rat(circumference))
    throw std::invalid_argument("rotation amount " + a.str() + " outside [0, " +
                                std::to_string(circumference) + ")");
  return CircleMap::from_lift(circumference,
                              {{Rat(0), a}, {Rat(circumference), a + Rat(circumference)}});
}

CircleMap embed_F(const PLMap& f) {
  bool ok = f.increasing() && f.left_slope() == 1 && f.right_slope() == 1 && f(Rat(0)) == 0 &&
            f(Rat(1)) == 1;
  for (const auto& n : f.nodes())
    if ((n.x <= 0 || n.x >= 1) && n.x != n.y) ok = false;
  if (!ok) throw std::invalid_argument("embed_F: map is not the identity outside [0,1]");
  std::vector<Node> nodes{{Rat(0), Rat(0)}};
  for (const auto& n : f.nodes())
    if (n.x > 0 && n.x < 1) nodes.push_back(n);
  nodes.push_back({Rat(1), Rat(1)});
  return CircleMap::from_lift(1, std::move(nodes));
}

}  // namespace gen

std::string to_string(const CircleGroupSpec& g) {
  if (std::holds_alternative<GroupT>(g)) return "T";
  const auto& t = std::get<GroupTnr>(g);
  return "T_{" + std::to_string(t.n) + "," + std::to_string(t.r) + "}";
}

Membership is_member(const CircleMap& f, const CircleGroupSpec& g) {
  const GroupTnr spec =
      std::holds_alternative<GroupT>(g) ? GroupTnr{2, 1} : std::get<GroupTnr>(g);
  auto reject = [](std::string why) { return Membership{false, std::move(why)}; };
  const std::string ring = "Z[1/" + std::to_string(spec.n) + "]";
  if (spec.n < 2) return reject("n must be >= 2");
  if (f.circumference() != spec.r)
    return reject("circumference " + std::to_string(f.circumference()) + " does not match " +
                  std::to_string(spec.r));
  for (const auto& n : f.nodes())
    if (!is_n_adic(n.x, spec.n))
      return reject("condition (i): breakpoint " + n.x.str() + " is not in " + ring);
  for (const auto& s : f.segment_slopes())
    if (!log_base(s, spec.n))
      return reject("condition (ii): slope " + s.str() + " is not a power of " +
                    std::to_string(spec.n));
  for (const auto& n : f.nodes())
    if (!is_n_adic(n.y, spec.n))
      return reject("condition (iii): value " + n.y.str() + " at " + n.x.str() +
                    " is not in " + ring);
  return Membership{true, {}};
}

}  // namespace thompson
