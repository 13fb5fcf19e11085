#include "thompson/element.hpp"

#include <stdexcept>

namespace thompson {

bool is_line(const Element& e) { return std::holds_alternative<PLMap>(e); }

std::string carrier_name(const Element& e) {
  if (is_line(e)) return "line";
  return "circle(" + std::to_string(std::get<CircleMap>(e).circumference()) + ")";
}

Element compose(const Element& f, const Element& g) {
  if (f.index() != g.index())
    throw std::invalid_argument("carrier mismatch: " + carrier_name(f) + " vs " +
                                carrier_name(g));
  if (is_line(f)) return compose(std::get<PLMap>(f), std::get<PLMap>(g));
  return compose(std::get<CircleMap>(f), std::get<CircleMap>(g));
}

Element invert(const Element& f) {
  return std::visit([](const auto& m) -> Element { return invert(m); }, f);
}

Element power(const Element& f, long k) {
  return std::visit([k](const auto& m) -> Element { return power(m, k); }, f);
}

bool is_identity(const Element& e) {
  return std::visit([](const auto& m) { return m.is_identity(); }, e);
}

Element identity_like(const Element& e) {
  if (is_line(e)) return PLMap::identity();
  return CircleMap(std::get<CircleMap>(e).circumference());
}

std::optional<long> order(const Element& e, long bound) {
  return std::visit([bound](const auto& m) { return order(m, bound); }, e);
}

}  // namespace thompson
