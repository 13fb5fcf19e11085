#include "thompson/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace thompson {

namespace {

Rat slope_between(const Node& a, const Node& b) { return (b.y - a.y) / (b.x - a.x); }

std::vector<Rat> sorted_unique(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PLMap::PLMap() : nodes_{Node{Rat(0), Rat(0)}}, left_slope_(1), right_slope_(1) {}

PLMap PLMap::canonical(std::vector<Node> nodes, Rat left_slope, Rat right_slope) {
  if (nodes.empty()) throw std::invalid_argument("PL map needs at least one node");
  if (left_slope.is_zero() || right_slope.is_zero())
    throw std::invalid_argument("PL map tail slope is zero");
  const int orientation = left_slope.sign();
  if (right_slope.sign() != orientation)
    throw std::invalid_argument("PL map is not monotone: tail slopes differ in sign");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i].x < nodes[i + 1].x))
      throw std::invalid_argument("PL map nodes not strictly increasing in x at " +
                                  nodes[i + 1].x.str());
    if (slope_between(nodes[i], nodes[i + 1]).sign() != orientation)
      throw std::invalid_argument("PL map is not monotone on [" + nodes[i].x.str() + ", " +
                                  nodes[i + 1].x.str() + "]");
  }

  std::vector<Node> kept;
  kept.reserve(nodes.size());
  for (auto& n : nodes) {
    while (kept.size() >= 2 &&
           slope_between(kept[kept.size() - 2], kept.back()) == slope_between(kept.back(), n))
      kept.pop_back();
    kept.push_back(std::move(n));
  }
  std::size_t first = 0;
  while (kept.size() - first >= 2 && slope_between(kept[first], kept[first + 1]) == left_slope)
    ++first;
  while (kept.size() - first >= 2 &&
         slope_between(kept[kept.size() - 2], kept.back()) == right_slope)
    kept.pop_back();
  kept.erase(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(first));

  if (kept.size() == 1 && left_slope == right_slope) {
    const Node& n = kept.front();
    kept.front() = Node{Rat(0), n.y - left_slope * n.x};
  }

  PLMap f;
  f.nodes_ = std::move(kept);
  f.left_slope_ = std::move(left_slope);
  f.right_slope_ = std::move(right_slope);
  return f;
}

PLMap PLMap::affine(const Rat& a, const Rat& b) { return canonical({Node{Rat(0), b}}, a, a); }

bool PLMap::is_identity() const { return *this == PLMap(); }

Rat PLMap::operator()(const Rat& x) const {
  const Node& first = nodes_.front();
  const Node& last = nodes_.back();
  if (x <= first.x) return first.y + left_slope_ * (x - first.x);
  if (x >= last.x) return last.y + right_slope_ * (x - last.x);
  auto hi = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                             [](const Rat& v, const Node& n) { return v < n.x; });
  auto lo = hi - 1;
  return lo->y + slope_between(*lo, *hi) * (x - lo->x);
}

std::vector<Rat> PLMap::breakpoints() const {
  std::vector<Rat> out;
  if (is_affine()) return out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.x);
  return out;
}

std::vector<Rat> PLMap::segment_slopes() const {
  std::vector<Rat> out;
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    out.push_back(slope_between(nodes_[i], nodes_[i + 1]));
  return out;
}

std::vector<Piece> PLMap::pieces() const {
  std::vector<Piece> out;
  if (is_affine()) {
    out.push_back(Piece{std::nullopt, std::nullopt, left_slope_, nodes_.front().y});
    return out;
  }
  const Node& first = nodes_.front();
  const Node& last = nodes_.back();
  out.push_back(Piece{std::nullopt, first.x, left_slope_, first.y - left_slope_ * first.x});
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    Rat s = slope_between(nodes_[i], nodes_[i + 1]);
    Rat c = nodes_[i].y - s * nodes_[i].x;
    out.push_back(Piece{nodes_[i].x, nodes_[i + 1].x, std::move(s), std::move(c)});
  }
  out.push_back(Piece{last.x, std::nullopt, right_slope_, last.y - right_slope_ * last.x});
  return out;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Breakpoints of f ∘ g lie in breakpoints(g) ∪ g^{-1}(breakpoints(f)).
  const PLMap g_inv = invert(g);
  std::vector<Rat> xs;
  xs.reserve(f.nodes().size() + g.nodes().size());
  for (const auto& n : g.nodes()) xs.push_back(n.x);
  for (const auto& n : f.nodes()) xs.push_back(g_inv(n.x));
  xs = sorted_unique(std::move(xs));

  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (auto& x : xs) {
    Rat y = f(g(x));
    nodes.push_back(Node{std::move(x), std::move(y)});
  }
  const bool up = g.increasing();
  Rat left = g.left_slope() * (up ? f.left_slope() : f.right_slope());
  Rat right = g.right_slope() * (up ? f.right_slope() : f.left_slope());
  return PLMap::canonical(std::move(nodes), std::move(left), std::move(right));
}

PLMap invert(const PLMap& f) {
  std::vector<Node> nodes;
  nodes.reserve(f.nodes().size());
  for (const auto& n : f.nodes()) nodes.push_back(Node{n.y, n.x});
  if (!f.increasing()) {
    std::reverse(nodes.begin(), nodes.end());
    return PLMap::canonical(std::move(nodes), f.right_slope().reciprocal(),
                            f.left_slope().reciprocal());
  }
  return PLMap::canonical(std::move(nodes), f.left_slope().reciprocal(),
                          f.right_slope().reciprocal());
}

PLMap power(const PLMap& f, long k) {
  PLMap base = k < 0 ? invert(f) : f;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  PLMap result;
  while (e) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

namespace gen {

PLMap A() {
  return PLMap::canonical({{Rat(0), Rat(0)},
                           {Rat(1, 2), Rat(1, 4)},
                           {Rat(3, 4), Rat(1, 2)},
                           {Rat(1), Rat(1)}},
                          Rat(1), Rat(1));
}

PLMap B() {
  return PLMap::canonical({{Rat(1, 2), Rat(1, 2)},
                           {Rat(3, 4), Rat(5, 8)},
                           {Rat(7, 8), Rat(3, 4)},
                           {Rat(1), Rat(1)}},
                          Rat(1), Rat(1));
}

PLMap reflection() { return PLMap::affine(Rat(-1), Rat(1)); }

PLMap translation(const Rat& b) { return PLMap::affine(Rat(1), b); }

PLMap rescaled_bump(const Rat& p, long m) {
  if (m < 0) throw std::invalid_argument("bump interval exponent must be >= 0");
  if (!is_n_adic(p, 2))
    throw std::invalid_argument("bump interval endpoint " + p.str() + " is not dyadic");
  const PLMap alpha = PLMap::affine(pow(Rat(2), -m), p);
  return compose(compose(alpha, A()), invert(alpha));
}

}  // namespace gen

std::string to_string(const GroupSpec& g) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupF>)
          return "F";
        else if constexpr (std::is_same_v<T, GroupFn>)
          return "F_" + std::to_string(v.n);
        else
          return "F_{" + std::to_string(v.n) + ",inf}";
      },
      g);
}

namespace {

Membership reject(std::string reason) { return Membership{false, std::move(reason)}; }

std::string z_of(long n) { return "Z[1/" + std::to_string(n) + "]"; }

// Conditions (i)-(iii) shared by F and F_n: n-adic breakpoints, slopes in
// <n> on bounded segments, n-adic node values.
std::optional<Membership> check_pieces(const PLMap& f, long n) {
  for (const auto& b : f.breakpoints())
    if (!is_n_adic(b, n))
      return reject("condition (i): breakpoint " + b.str() + " is not in " + z_of(n));
  for (const auto& s : f.segment_slopes())
    if (!log_base(s, n))
      return reject("condition (ii): slope " + s.str() + " is not a power of " +
                    std::to_string(n));
  for (const auto& node : f.nodes())
    if (!is_n_adic(node.y, n))
      return reject("condition (iii): value " + node.y.str() + " at " + node.x.str() +
                    " is not in " + z_of(n));
  return std::nullopt;
}

Membership member_of_F(const PLMap& f) {
  if (!f.increasing()) return reject("orientation-reversing");
  bool outside_ok = f.left_slope() == 1 && f.right_slope() == 1 && f(Rat(0)) == 0 &&
                    f(Rat(1)) == 1;
  for (const auto& node : f.nodes())
    if ((node.x <= 0 || node.x >= 1) && node.x != node.y) outside_ok = false;
  if (!outside_ok) return reject("not the identity outside [0,1]");
  if (auto r = check_pieces(f, 2)) return *r;
  return Membership{true, {}};
}

Membership member_of_Fn(const PLMap& f, long n) {
  if (n < 2) return reject("n must be >= 2");
  if (!f.increasing()) return reject("orientation-reversing");
  if (auto r = check_pieces(f, n)) return *r;
  if (f.left_slope() != 1 || f.right_slope() != 1)
    return reject("condition (iv): tail slope is not 1");
  const Node& first = f.nodes().front();
  const Node& last = f.nodes().back();
  if (!(first.y - first.x).is_integer() || !(last.y - last.x).is_integer())
    return reject("condition (iv): translation at infinity is not an integer");
  return Membership{true, {}};
}

}  // namespace

Membership is_member(const PLMap& f, const GroupSpec& g) {
  if (std::holds_alternative<GroupF>(g)) return member_of_F(f);
  if (const auto* fn = std::get_if<GroupFn>(&g)) return member_of_Fn(f, fn->n);
  const long n = std::get<GroupFnInf>(g).n;
  Membership base = member_of_Fn(f, n);
  if (!base) return base;
  // Each piece is x -> n^e x + c and n^e x ≡ x on residues, so the piece
  // preserves Delta_n exactly when c does.
  for (const auto& p : f.pieces()) {
    const Residue r = delta_residue(p.intercept, n);
    if (r.value != 0)
      return reject("maps Delta_" + std::to_string(n) + " outside itself: intercept " +
                    p.intercept.str() + " has residue " + std::to_string(r.value) + " mod " +
                    std::to_string(r.modulus));
  }
  return Membership{true, {}};
}

}  // namespace thompson
