#pragma once

// A group element on either carrier: a line map (F, F_n, F_{n,inf} and
// conjugators) or a circle map (T, T_{n,r}). Products are composition,
// x * y = x ∘ y.

#include <optional>
#include <string>
#include <variant>

#include "thompson/circlemap.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

using Element = std::variant<PLMap, CircleMap>;

bool is_line(const Element& e);
std::string carrier_name(const Element& e);

// Throws std::invalid_argument on carrier mismatch.
Element compose(const Element& f, const Element& g);
Element invert(const Element& f);
Element power(const Element& f, long k);
bool is_identity(const Element& e);
// Identity on the same carrier (and circumference) as e.
Element identity_like(const Element& e);
std::optional<long> order(const Element& e, long bound);

// Left-to-right product f_1 ∘ f_2 ∘ ... ∘ f_k.
template <typename... Rest>
Element product(const Element& first, const Rest&... rest) {
  Element acc = first;
  ((acc = compose(acc, Element(rest))), ...);
  return acc;
}

}  // namespace thompson
