#include "thompson/invariants.hpp"

#include <algorithm>

namespace thompson {

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::neg_inf:
      return "-inf";
    case Kind::pos_inf:
      return "inf";
    default:
      return value_.str();
  }
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_ || !a.finite()) {
    auto rank = [](ExtRat::Kind k) { return static_cast<int>(k); };
    return rank(a.kind_) <=> rank(b.kind_);
  }
  return a.value_ <=> b.value_;
}

namespace {

// Closed fixed blocks [lo, hi] (lo == hi for an isolated fixed point).
using Block = Interval;

std::vector<Block> merge_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.lo < b.lo; });
  std::vector<Block> out;
  for (auto& b : blocks) {
    if (!out.empty() && b.lo <= out.back().hi) {
      if (out.back().hi < b.hi) out.back().hi = b.hi;
    } else {
      out.push_back(std::move(b));
    }
  }
  return out;
}

ExtRat bound_or(const std::optional<Rat>& v, ExtRat fallback) {
  return v ? ExtRat(*v) : fallback;
}

bool inside(const Rat& x, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  return (!lo || *lo <= x) && (!hi || x <= *hi);
}

}  // namespace

SupportSet support(const PLMap& f) {
  std::vector<Block> fixed;
  for (const auto& p : f.pieces()) {
    if (p.slope == 1) {
      if (p.intercept.is_zero())
        fixed.push_back(
            {bound_or(p.lo, ExtRat::neg_inf()), bound_or(p.hi, ExtRat::pos_inf())});
      continue;
    }
    // s x + c = x at x* = c / (1 - s).
    const Rat crossing = p.intercept / (Rat(1) - p.slope);
    if (inside(crossing, p.lo, p.hi)) fixed.push_back({crossing, crossing});
  }
  fixed = merge_blocks(std::move(fixed));

  SupportSet s;
  if (fixed.empty()) {
    s.components.push_back({ExtRat::neg_inf(), ExtRat::pos_inf()});
    return s;
  }
  if (fixed.front().lo.kind() != ExtRat::Kind::neg_inf)
    s.components.push_back({ExtRat::neg_inf(), fixed.front().lo});
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i)
    s.components.push_back({fixed[i].hi, fixed[i + 1].lo});
  if (fixed.back().hi.kind() != ExtRat::Kind::pos_inf)
    s.components.push_back({fixed.back().hi, ExtRat::pos_inf()});
  return s;
}

SupportSet support(const CircleMap& f) {
  const long r = f.circumference();
  const Rat period(r);
  const auto& nodes = f.nodes();
  // x is fixed on the circle iff L(x) - x is a multiple of r.
  std::vector<Block> fixed;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& a = nodes[i];
    const Node& b = nodes[i + 1];
    const Rat ga = a.y - a.x;
    const Rat gb = b.y - b.x;
    const Rat& gmin = std::min(ga, gb);
    const Rat& gmax = std::max(ga, gb);
    const mpz_class kmin = floor_div(gmin, period) - 1;
    const mpz_class kmax = floor_div(gmax, period) + 1;
    for (mpz_class k = kmin; k <= kmax; ++k) {
      const Rat target = Rat(k, mpz_class(1)) * period;
      if (target < gmin || target > gmax) continue;
      if (ga == gb) {
        fixed.push_back({a.x, b.x});
      } else {
        // Linear interpolation of g between the two nodes.
        const Rat t = a.x + (target - ga) * (b.x - a.x) / (gb - ga);
        fixed.push_back({t, t});
      }
    }
  }
  fixed = merge_blocks(std::move(fixed));

  SupportSet s;
  s.on_circle = true;
  s.circumference = r;
  if (fixed.empty()) {
    s.entire_circle = true;
    return s;
  }
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i)
    s.components.push_back({fixed[i].hi, fixed[i + 1].lo});
  // The point r is the point 0, so a block ending at r already wraps.
  if (fixed.back().hi < ExtRat(period))
    s.components.push_back({fixed.back().hi, ExtRat(fixed.front().lo.value() + period)});
  std::sort(s.components.begin(), s.components.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return s;
}

SupportSet support(const Element& f) {
  return std::visit([](const auto& m) { return support(m); }, f);
}

std::size_t sigma(const Element& f) { return support(f).sigma(); }

SupportSet transport(const SupportSet& s, const PLMap& theta) {
  const bool up = theta.increasing();
  auto image = [&](const ExtRat& e) -> ExtRat {
    if (e.finite()) return theta(e.value());
    const bool plus = e.kind() == ExtRat::Kind::pos_inf;
    return plus == up ? ExtRat::pos_inf() : ExtRat::neg_inf();
  };
  SupportSet out = s;
  for (auto& c : out.components) {
    ExtRat lo = image(c.lo);
    ExtRat hi = image(c.hi);
    if (!up) std::swap(lo, hi);
    c = {std::move(lo), std::move(hi)};
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

SlopeTranslation lambda_tau(const PLMap& f) {
  const Node& last = f.nodes().back();
  return {f.right_slope(), last.y - f.right_slope() * last.x};
}

InvariantProfile profile(const Element& f, long torsion_bound) {
  InvariantProfile p;
  p.support = support(f);
  p.sigma = p.support.sigma();
  if (const auto* line = std::get_if<PLMap>(&f)) {
    auto lt = lambda_tau(*line);
    p.lambda = lt.lambda;
    p.tau = lt.tau;
  }
  p.order = order(f, torsion_bound);
  return p;
}

}  // namespace thompson
