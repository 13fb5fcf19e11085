#pragma once

// Seeded verification suites. Every suite is a pure function of
// (name, trials, seed, max_word_len), so reports are byte-reproducible.

#include <cstdint>
#include <string>
#include <vector>

#include "thompson/serialize.hpp"
#include "thompson/words.hpp"

namespace thompson {

struct VerifySuite {
  std::string name;
  long trials = 200;
  std::uint64_t seed = 42;
  long max_word_len = 12;
};

struct CaseResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct Counterexample {
  std::string label;
  json elements;  // name -> element file
};

struct SuiteReport {
  VerifySuite suite;
  std::vector<CaseResult> cases;
  std::vector<Counterexample> counterexamples;
  // Elements checked for parse(serialize(e)) == e while running.
  std::size_t round_trips = 0;

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0 && !cases.empty(); }

  std::string text() const;
  json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const VerifySuite& suite);

// The six relation words of T's presentation, as (label, lhs, rhs) over
// {A, B, C} with lowercase letters for inverses.
struct RelationWord {
  std::string label;
  std::string lhs;
  std::string rhs;
};

const std::vector<RelationWord>& t_relations();
// Relation (1) of F and both textual variants of relation (2).
const std::vector<RelationWord>& f_relation_variants();

bool relation_holds(const Alphabet& alphabet, const RelationWord& rel);

// Independent check that f maps Delta_n into itself: evaluates f at
// Delta_n points inside every affine piece.
bool preserves_delta_by_sampling(const PLMap& f, long n);

}  // namespace thompson
