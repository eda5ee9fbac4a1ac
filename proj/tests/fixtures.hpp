#pragma once

/*
 * Shared concrete instances. PLT is the running example: the three affine
 * lines x=0 (a), x=1 (b), y=0 (c) in the plane. a and b are parallel, so
 * {a,b} and {a,b,c} have no common point; every other subset does.
 * Central family: {}, {a}, {b}, {c}, {a,c}, {b,c} with ranks 0,1,1,1,2,2.
 */

#include <string>
#include <vector>

#include "oracle.hpp"
#include "semimatroid.hpp"

namespace fixtures {

using semitutte::GroundSet;
using semitutte::RawSemimatroid;
using semitutte::Semimatroid;
using semitutte::Subset;

inline RawSemimatroid plt_raw() {
  RawSemimatroid raw;
  raw.labels = {"a", "b", "c"};
  raw.members = {Subset{0}, Subset{1}, Subset{2}, Subset{4}, Subset{5}, Subset{6}};
  raw.ranks = {0, 1, 1, 1, 2, 2};
  return raw;
}

inline Semimatroid plt() { return Semimatroid::validated(plt_raw()); }

// Uniform matroid U(k,n) as a semimatroid: full family, rank min(|A|,k).
inline Semimatroid uniform(int k, int n) {
  RawSemimatroid raw;
  for (int i = 0; i < n; ++i) raw.labels.push_back("e" + std::to_string(i));
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    raw.members.push_back(Subset{mask});
    int sz = Subset{mask}.size();
    raw.ranks.push_back(sz < k ? sz : k);
  }
  return Semimatroid::validated(raw);
}

// U(1,2) with labels a,b, for the multivariate goldens.
inline Semimatroid u12_ab() {
  RawSemimatroid raw;
  raw.labels = {"a", "b"};
  raw.members = {Subset{0}, Subset{1}, Subset{2}, Subset{3}};
  raw.ranks = {0, 1, 1, 1};
  return Semimatroid::validated(raw);
}

inline Semimatroid single_loop() {
  RawSemimatroid raw;
  raw.labels = {"e"};
  raw.members = {Subset{0}, Subset{1}};
  raw.ranks = {0, 0};
  return Semimatroid::validated(raw);
}

inline Semimatroid single_isthmus() {
  RawSemimatroid raw;
  raw.labels = {"e"};
  raw.members = {Subset{0}, Subset{1}};
  raw.ranks = {0, 1};
  return Semimatroid::validated(raw);
}

inline Semimatroid free3() { return uniform(3, 3); }

inline Semimatroid empty_sm() {
  RawSemimatroid raw;
  raw.members = {Subset{0}};
  raw.ranks = {0};
  return Semimatroid::validated(raw);
}

inline oracle::Instance oracle_of(const Semimatroid& sm) {
  oracle::Instance inst;
  inst.labels = sm.ground().labels();
  for (int i = 0; i < sm.central_count(); ++i)
    inst.central.emplace_back(sm.central_sets()[static_cast<std::size_t>(i)].bits,
                              sm.rank_at(i));
  return inst;
}

// The PLT lines as an arrangement document.
inline const char* plt_arrangement_json() {
  return R"({
  "dimension": 2,
  "hyperplanes": [
    {"label": "a", "normal": [{"num":1,"den":1},{"num":0,"den":1}], "offset": {"num":0,"den":1}},
    {"label": "b", "normal": [{"num":1,"den":1},{"num":0,"den":1}], "offset": {"num":1,"den":1}},
    {"label": "c", "normal": [{"num":0,"den":1},{"num":1,"den":1}], "offset": {"num":0,"den":1}}
  ]
})";
}

inline const char* plt_explicit_json() {
  return R"({
  "ground": ["a","b","c"],
  "central": [[],["a"],["b"],["c"],["a","c"],["b","c"]],
  "rank": [[[],0],[["a"],1],[["b"],1],[["c"],1],[["a","c"],2],[["b","c"],2]]
})";
}

// Rank of the union exceeds the submodular bound: r{a}+r{b} = 0 but
// r{a,b}+r{} = 1. The other axioms hold.
inline const char* sr3_mutant_json() {
  return R"({
  "ground": ["a","b"],
  "central": [[],["a"],["b"],["a","b"]],
  "rank": [[[],0],[["a"],0],[["b"],0],[["a","b"],1]]
})";
}

}  // namespace fixtures
