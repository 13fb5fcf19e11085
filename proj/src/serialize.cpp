#include "thompson/serialize.hpp"

namespace thompson {

namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) {
  return where + "/" + std::to_string(i);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? "/" : where, "missing \"" + key + "\"");
  return *it;
}

Rat rat_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a rational string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where, e.what());
  }
}

long positive_integer(const json& j, const std::string& where) {
  const Rat r = j.is_number_integer() ? Rat(j.get<long>()) : rat_from_json(j, where);
  if (!r.is_integer() || r.sign() <= 0 || !r.num().fits_slong_p())
    throw ParseError(where, "expected a positive integer");
  return r.num().get_si();
}

std::vector<Node> nodes_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of [x, y] pairs");
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(where, i);
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError(at, "expected an [x, y] pair");
    nodes.push_back(Node{rat_from_json(j[i][0], child(at, 0)), rat_from_json(j[i][1], child(at, 1))});
  }
  return nodes;
}

json nodes_to_json(const std::vector<Node>& nodes) {
  json arr = json::array();
  for (const auto& n : nodes) arr.push_back(json::array({n.x.str(), n.y.str()}));
  return arr;
}

json invariant_value_json(const InvariantValue& v) {
  if (v.value) return *v.value;
  return "exceeds";
}

InvariantValue invariant_value_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return {j.get<long>()};
  if (j == "exceeds") return {std::nullopt};
  throw ParseError(where, "expected an integer or \"exceeds\"");
}

}  // namespace

json to_json(const Element& e) {
  if (const auto* f = std::get_if<PLMap>(&e)) {
    return json{{"kind", "line"},
                {"nodes", nodes_to_json(f->nodes())},
                {"left_slope", f->left_slope().str()},
                {"right_slope", f->right_slope().str()}};
  }
  const auto& c = std::get<CircleMap>(e);
  return json{{"kind", "circle"},
              {"circumference", std::to_string(c.circumference())},
              {"nodes", nodes_to_json(c.nodes())}};
}

Element element_from_json(const json& j, const std::string& where) {
  const json& kind = field(j, "kind", where);
  const std::string kind_at = child(where, "kind");
  if (!kind.is_string()) throw ParseError(kind_at, "expected \"line\" or \"circle\"");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "line") {
      auto nodes = nodes_from_json(field(j, "nodes", where), child(where, "nodes"));
      Rat left = rat_from_json(field(j, "left_slope", where), child(where, "left_slope"));
      Rat right = rat_from_json(field(j, "right_slope", where), child(where, "right_slope"));
      return PLMap::canonical(std::move(nodes), std::move(left), std::move(right));
    }
    if (k == "circle") {
      const long r = positive_integer(field(j, "circumference", where),
                                      child(where, "circumference"));
      auto nodes = nodes_from_json(field(j, "nodes", where), child(where, "nodes"));
      return CircleMap::from_lift(r, std::move(nodes));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(where.empty() ? "/" : where, e.what());
  }
  throw ParseError(kind_at, "unknown kind \"" + k + "\"");
}

Element parse_element(std::string_view text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": byte " + std::to_string(e.byte), "invalid JSON");
  }
  try {
    return element_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(source, e.what());
  }
}

std::string serialize(const Element& e) { return to_json(e).dump(); }

std::optional<Element> named_element(std::string_view name) {
  if (name == "@A") return gen::A();
  if (name == "@B") return gen::B();
  if (name == "@C") return gen::C();
  if (name == "@r") return gen::reflection();
  if (name == "@id") return PLMap::identity();
  return std::nullopt;
}

json to_json(const SupportSet& s) {
  if (s.entire_circle) return "circle";
  json arr = json::array();
  for (const auto& c : s.components) arr.push_back(json::array({c.lo.str(), c.hi.str()}));
  return arr;
}

json to_json(const InvariantProfile& p) {
  json j{{"sigma", p.sigma}, {"support", to_json(p.support)}};
  if (p.lambda) j["lambda"] = p.lambda->str();
  if (p.tau) j["tau"] = p.tau->str();
  j["order"] = p.order ? json(*p.order) : json("exceeds");
  return j;
}

json to_json(const Automorphism& a) {
  if (a.is_rho()) return "rho";
  if (a.is_identity_inner()) return "id";
  if (const auto* in = std::get_if<Inner>(&a.kind()))
    return json{{"kind", "inner"}, {"element", to_json(in->gamma)}};
  const auto& c = std::get<ConjBy>(a.kind());
  return json{{"kind", "conj"},
              {"element", to_json(c.h)},
              {"whitelist", to_string(c.tag)},
              {"n", c.n}};
}

Automorphism automorphism_from_json(const json& j, const Element& like,
                                    const std::string& where) {
  if (j == "rho") return Automorphism::rho();
  if (j == "id") return Automorphism::identity_on(like);
  const json& kind = field(j, "kind", where);
  if (kind == "inner")
    return Inner{element_from_json(field(j, "element", where), child(where, "element"))};
  if (kind == "conj") {
    Element h = element_from_json(field(j, "element", where), child(where, "element"));
    const json& w = field(j, "whitelist", where);
    Whitelist tag;
    if (w == "group-element")
      tag = Whitelist::group_element;
    else if (w == "reflection")
      tag = Whitelist::reflection;
    else if (w == "affine")
      tag = Whitelist::affine;
    else
      throw ParseError(child(where, "whitelist"), "unknown whitelist tag");
    const long n = j.contains("n") ? positive_integer(j["n"], child(where, "n")) : 2;
    return ConjBy{std::move(h), tag, n};
  }
  throw ParseError(child(where, "kind"), "expected \"inner\" or \"conj\"");
}

json to_json(const SeparationCertificate& c) {
  return json{{"claim", "distinct-twisted-classes"},
              {"aut", to_json(c.aut)},
              {"n", c.n},
              {"gamma", is_identity(c.gamma) ? json("id") : to_json(c.gamma)},
              {"invariant", to_string(c.invariant)},
              {"x", to_json(c.x)},
              {"y", to_json(c.y)},
              {"x_value", invariant_value_json(c.x_value)},
              {"y_value", invariant_value_json(c.y_value)}};
}

SeparationCertificate certificate_from_json(const json& j) {
  if (field(j, "claim", "") != "distinct-twisted-classes")
    throw ParseError("/claim", "expected \"distinct-twisted-classes\"");
  Element x = element_from_json(field(j, "x", ""), "/x");
  Element y = element_from_json(field(j, "y", ""), "/y");
  Automorphism aut = automorphism_from_json(field(j, "aut", ""), x);
  const json& n = field(j, "n", "");
  if (!n.is_number_integer() || n.get<long>() < 1) throw ParseError("/n", "expected n >= 1");
  const json& g = field(j, "gamma", "");
  Element gamma = g == "id" ? identity_like(x) : element_from_json(g, "/gamma");
  const json& inv = field(j, "invariant", "");
  InvariantKind kind;
  if (inv == "sigma")
    kind = InvariantKind::sigma;
  else if (inv == "order")
    kind = InvariantKind::order;
  else
    throw ParseError("/invariant", "expected \"sigma\" or \"order\"");
  return SeparationCertificate{std::move(aut),
                               n.get<long>(),
                               std::move(gamma),
                               std::move(x),
                               std::move(y),
                               kind,
                               invariant_value_from_json(field(j, "x_value", ""), "/x_value"),
                               invariant_value_from_json(field(j, "y_value", ""), "/y_value")};
}

}  // namespace thompson
