// Command-line front end. Exit codes: 0 success / pass / member / equal,
// 1 fail / non-member / unequal / inconclusive, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thompson/invariants.hpp"
#include "thompson/serialize.hpp"
#include "thompson/suites.hpp"
#include "thompson/twisted.hpp"

using namespace thompson;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

// Input errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Element load(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    if (auto e = named_element(arg)) return *e;
    throw UsageError("unknown built-in element " + arg + " (expected @A @B @C @r @id)");
  }
  return parse_element(read_file(arg), arg);
}

Rat parse_rat(const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void print(const Element& e) { std::cout << to_json(e).dump() << "\n"; }

Automorphism parse_aut(const std::string& spec, const Element& like) {
  if (spec == "rho") return Automorphism::rho();
  if (spec == "id") return Automorphism::identity_on(like);
  if (spec.rfind("inner:", 0) == 0) return Inner{load(spec.substr(6))};
  if (spec.rfind("conj:", 0) == 0) {
    Element h = load(spec.substr(5));
    const auto tag = classify_conjugator(h, 2);
    if (!tag) throw UsageError("conjugator " + spec.substr(5) + " is not in the whitelist");
    return ConjBy{std::move(h), *tag, 2};
  }
  throw UsageError("bad --aut \"" + spec + "\" (expected rho, id, inner:<file>, conj:<file>)");
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + " \"" + s + "\"");
}

int member(const std::string& group, const Element& e) {
  Membership m;
  auto value_of = [&](const std::string& prefix) { return group.substr(prefix.size()); };
  if (group == "F" || group.rfind("Fn=", 0) == 0 || group.rfind("FnInf=", 0) == 0) {
    const auto* line = std::get_if<PLMap>(&e);
    GroupSpec spec = GroupF{};
    if (group.rfind("Fn=", 0) == 0) spec = GroupFn{parse_long(value_of("Fn="), "n")};
    if (group.rfind("FnInf=", 0) == 0) spec = GroupFnInf{parse_long(value_of("FnInf="), "n")};
    m = line ? is_member(*line, spec) : Membership{false, "circle map in a line group"};
  } else if (group == "T" || group.rfind("Tnr=", 0) == 0) {
    const auto* circle = std::get_if<CircleMap>(&e);
    CircleGroupSpec spec = GroupT{};
    if (group != "T") {
      const std::string v = value_of("Tnr=");
      const auto comma = v.find(',');
      if (comma == std::string::npos) throw UsageError("expected Tnr=<n>,<r>");
      spec = GroupTnr{parse_long(v.substr(0, comma), "n"), parse_long(v.substr(comma + 1), "r")};
    }
    m = circle ? is_member(*circle, spec) : Membership{false, "line map in a circle group"};
  } else {
    throw UsageError("bad --group \"" + group + "\"");
  }
  if (m) {
    std::cout << "member\n";
    return kOk;
  }
  std::cout << "non-member: " << m.reason << "\n";
  return kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for Thompson's groups F, T and twisted conjugacy"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string f1, f2, text, group, aut_spec, gamma_file, family, invariant, suite_name, out_dir;
  long bound = kDefaultTorsionBound, k = 1, n = 1, trials = 200, maxlen = 12;
  std::uint64_t seed = 42;
  bool as_json = false;

  auto* canon = app.add_subcommand("canon", "Print the canonical form of an element");
  canon->add_option("element", f1)->required();
  canon->callback([&] { action = [&] { print(load(f1)); return kOk; }; });

  auto* eval = app.add_subcommand("eval", "Evaluate an element at a rational point");
  eval->add_option("element", f1)->required();
  eval->add_option("x", text)->required();
  eval->callback([&] {
    action = [&] {
      const Element e = load(f1);
      const Rat x = parse_rat(text);
      std::cout << std::visit([&](const auto& m) { return m(x); }, e) << "\n";
      return kOk;
    };
  });

  auto* comp = app.add_subcommand("compose", "Print f ∘ g");
  comp->add_option("f", f1)->required();
  comp->add_option("g", f2)->required();
  comp->callback([&] { action = [&] { print(compose(load(f1), load(f2))); return kOk; }; });

  auto* inv = app.add_subcommand("inv", "Print the inverse");
  inv->add_option("element", f1)->required();
  inv->callback([&] { action = [&] { print(invert(load(f1))); return kOk; }; });

  auto* eq = app.add_subcommand("eq", "Exit 0 iff two elements are equal");
  eq->add_option("f", f1)->required();
  eq->add_option("g", f2)->required();
  eq->callback([&] {
    action = [&] {
      const bool same = load(f1) == load(f2);
      std::cout << (same ? "equal" : "unequal") << "\n";
      return same ? kOk : kNo;
    };
  });

  auto* mem = app.add_subcommand("member", "Membership in F, T, F_n, F_{n,inf}, T_{n,r}");
  mem->add_option("--group", group, "F | T | Fn=<n> | FnInf=<n> | Tnr=<n>,<r>")->required();
  mem->add_option("element", f1)->required();
  mem->callback([&] { action = [&] { return member(group, load(f1)); }; });

  auto* invs = app.add_subcommand("invariants", "Print the invariant profile");
  invs->add_option("element", f1)->required();
  invs->add_option("--bound", bound, "torsion search bound");
  invs->callback([&] {
    action = [&] {
      std::cout << to_json(profile(load(f1), bound)).dump() << "\n";
      return kOk;
    };
  });

  auto* aut = app.add_subcommand("aut", "Automorphisms");
  aut->require_subcommand(1);
  auto* apply = aut->add_subcommand("apply", "Apply an automorphism to an element");
  apply->add_option("--aut", aut_spec, "rho | id | inner:<file> | conj:<file>")->required();
  apply->add_option("element", f1)->required();
  apply->callback([&] {
    action = [&] {
      const Element x = load(f1);
      print(apply_aut(parse_aut(aut_spec, x), x));
      return kOk;
    };
  });

  auto* twist = app.add_subcommand("twist", "Print gamma x theta(gamma^-1)");
  twist->add_option("--gamma", gamma_file)->required();
  twist->add_option("--aut", aut_spec)->required();
  twist->add_option("element", f1)->required();
  twist->callback([&] {
    action = [&] {
      const Element x = load(f1);
      print(twisted_conjugate(load(gamma_file), x, parse_aut(aut_spec, x)));
      return kOk;
    };
  });

  auto* wit = app.add_subcommand("witness", "Print f_k or h_k");
  wit->add_option("--family", family)->required()->check(CLI::IsMember({"f", "h"}));
  wit->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  wit->callback([&] {
    action = [&] {
      print(family == "f" ? witness_f(k) : witness_h(k));
      return kOk;
    };
  });

  auto* sep = app.add_subcommand("separate", "Certify distinct twisted conjugacy classes");
  sep->add_option("--aut", aut_spec)->required();
  sep->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sep->add_option("--gamma", gamma_file, "defaults to the identity");
  sep->add_option("--invariant", invariant)->required()->check(CLI::IsMember({"sigma", "order"}));
  sep->add_option("x", f1)->required();
  sep->add_option("y", f2)->required();
  sep->callback([&] {
    action = [&] {
      const Element x = load(f1);
      const Element y = load(f2);
      const Element gamma = gamma_file.empty() ? identity_like(x) : load(gamma_file);
      const auto res = separate(x, y, parse_aut(aut_spec, x), n, gamma,
                                invariant == "sigma" ? InvariantKind::sigma : InvariantKind::order);
      if (!res.certificate) {
        std::cout << to_string(res.status) << "\n";
        return kNo;
      }
      std::cout << to_json(*res.certificate).dump() << "\n";
      return kOk;
    };
  });

  auto* rep = app.add_subcommand("replay", "Independently re-check a certificate file");
  rep->add_option("certificate", f1)->required();
  rep->callback([&] {
    action = [&] {
      json j;
      try {
        j = json::parse(read_file(f1));
      } catch (const json::parse_error& e) {
        throw ParseError(f1 + ": byte " + std::to_string(e.byte), "invalid JSON");
      }
      const ReplayReport r = replay(certificate_from_json(j));
      std::cout << (r.ok ? "valid" : "invalid: " + r.detail) << "\n";
      return r.ok ? kOk : kNo;
    };
  });

  auto* ver = app.add_subcommand("verify", "Run a seeded verification suite");
  ver->add_option("suite", suite_name)->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", seed);
  ver->add_option("--maxlen", maxlen)->check(CLI::PositiveNumber);
  ver->add_flag("--json", as_json, "machine-readable report");
  ver->add_option("--out", out_dir, "directory for counterexample element files");
  ver->callback([&] {
    action = [&] {
      const SuiteReport r = run_suite(VerifySuite{suite_name, trials, seed, maxlen});
      std::cout << (as_json ? r.to_json().dump(2) + "\n" : r.text());
      if (!out_dir.empty() && !r.counterexamples.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
          for (const auto& [name, el] : r.counterexamples[i].elements.items()) {
            std::ofstream out(std::filesystem::path(out_dir) /
                              (suite_name + "-" + std::to_string(i + 1) + "-" + name + ".json"));
            out << el.dump() << "\n";
          }
      }
      return r.ok() ? kOk : kNo;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
