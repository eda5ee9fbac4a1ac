#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "semimatroid.hpp"

using namespace semitutte;
using fixtures::plt;
using fixtures::plt_raw;

namespace {

Subset by_labels(const Semimatroid& sm, const std::vector<std::string>& ls) {
  return sm.ground().parse_subset(ls);
}

bool has_violation(const CheckResult& res, Axiom a) {
  return std::any_of(res.violations.begin(), res.violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == a; });
}

}  // namespace

TEST_CASE("the three-line fixture validates") {
  Semimatroid sm = plt();
  CHECK(sm.size() == 3);
  CHECK(sm.rank() == 2);
  CHECK(sm.central_count() == 6);
  CHECK(sm.ground().labels() == std::vector<std::string>{"a", "b", "c"});

  // Canonical storage order: cardinality, then lexicographic by position.
  std::vector<std::uint64_t> masks;
  for (Subset s : sm.central_sets()) masks.push_back(s.bits);
  CHECK(masks == std::vector<std::uint64_t>{0, 1, 2, 4, 5, 6});
  CHECK(sm.rank_at(0) == 0);
  CHECK(sm.rank_at(4) == 2);
}

TEST_CASE("rank lookups and centrality") {
  Semimatroid sm = plt();
  CHECK(sm.is_central(by_labels(sm, {"a", "c"})));
  CHECK_FALSE(sm.is_central(by_labels(sm, {"a", "b"})));
  CHECK(sm.rank_of(by_labels(sm, {"b", "c"})) == 2);
  CHECK(sm.rank_of(Subset{}) == 0);
  CHECK_THROWS_AS((void)sm.rank_of(by_labels(sm, {"a", "b"})), DomainError);
  CHECK_THROWS_AS((void)sm.rank_of(Subset(1u << 5)), InputError);
}

TEST_CASE("closure and flats") {
  Semimatroid sm = plt();
  // No element is in the closure of a different singleton here.
  CHECK(sm.closure(by_labels(sm, {"a"})) == by_labels(sm, {"a"}));
  CHECK(sm.closure(Subset{}) == Subset{});
  CHECK(sm.closure(by_labels(sm, {"a", "c"})) == by_labels(sm, {"a", "c"}));

  auto fl = sm.flats();
  CHECK(fl.size() == 6);  // every central set is its own closure
  for (Subset f : fl) CHECK(sm.closure(f) == f);
}

TEST_CASE("cyclic flats of the fixture reduce to the empty set") {
  Semimatroid sm = plt();
  int cyclic = 0;
  for (Subset f : sm.flats())
    if (sm.is_cyclic_flat(f)) {
      ++cyclic;
      CHECK(f == Subset{});
    }
  CHECK(cyclic == 1);
}

TEST_CASE("bases and circuits") {
  Semimatroid sm = plt();
  auto bs = sm.bases();
  REQUIRE(bs.size() == 2);
  CHECK(bs[0] == by_labels(sm, {"a", "c"}));
  CHECK(bs[1] == by_labels(sm, {"b", "c"}));
  CHECK(sm.circuits().empty());  // every central set is independent here

  Semimatroid loop = fixtures::single_loop();
  auto cl = loop.circuits();
  REQUIRE(cl.size() == 1);
  CHECK(cl[0] == Subset(1));

  Semimatroid u12 = fixtures::u12_ab();
  auto cu = u12.circuits();
  REQUIRE(cu.size() == 1);
  CHECK(cu[0] == by_labels(u12, {"a", "b"}));
}

TEST_CASE("element classification") {
  Semimatroid sm = plt();
  CHECK(sm.classify(sm.ground().position("a")) == ElementClass::Ordinary);
  CHECK(sm.classify(sm.ground().position("b")) == ElementClass::Ordinary);
  CHECK(sm.classify(sm.ground().position("c")) == ElementClass::Isthmus);
  CHECK_THROWS_AS((void)sm.classify(3), InputError);

  CHECK(fixtures::single_loop().classify(0) == ElementClass::Loop);
  CHECK(fixtures::single_isthmus().classify(0) == ElementClass::Isthmus);

  // An element in no central set at all.
  RawSemimatroid raw;
  raw.labels = {"a", "b"};
  raw.members = {Subset{}, Subset(1)};
  raw.ranks = {0, 1};
  Semimatroid part = Semimatroid::validated(raw);
  CHECK(part.classify(0) == ElementClass::Isthmus);
  CHECK(part.classify(1) == ElementClass::NonCentral);
}

TEST_CASE("submodularity violation is caught with a witness") {
  RawSemimatroid raw;
  raw.labels = {"a", "b"};
  raw.members = {Subset{0}, Subset{1}, Subset{2}, Subset{3}};
  raw.ranks = {0, 0, 0, 1};
  CheckResult res = Semimatroid::check_axioms(raw);
  REQUIRE_FALSE(res.ok());
  CHECK_FALSE(res.semimatroid.has_value());
  for (const auto& v : res.violations) CHECK(v.axiom == Axiom::SR3);
  CHECK(has_violation(res, Axiom::SR3));
  CHECK_THROWS_AS((void)Semimatroid::validated(raw), AxiomError);
  try {
    (void)Semimatroid::validated(raw);
  } catch (const AxiomError& e) {
    CHECK(std::string(e.what()).find("SR3") != std::string::npos);
  }
}

TEST_CASE("missing union triggers the exchange axioms") {
  RawSemimatroid raw;
  raw.labels = {"a", "b"};
  raw.members = {Subset{0}, Subset{1}, Subset{2}};
  raw.ranks = {0, 0, 1};
  CheckResult res = Semimatroid::check_axioms(raw);
  REQUIRE_FALSE(res.ok());
  CHECK(has_violation(res, Axiom::SR4));
  CHECK(has_violation(res, Axiom::SR5));
  CHECK_FALSE(has_violation(res, Axiom::SR1));
  CHECK_FALSE(has_violation(res, Axiom::SR2));
  CHECK_FALSE(has_violation(res, Axiom::SR3));
}

TEST_CASE("rank above cardinality and non-monotone ranks") {
  RawSemimatroid raw;
  raw.labels = {"a"};
  raw.members = {Subset{0}, Subset{1}};
  raw.ranks = {0, 2};
  CHECK(has_violation(Semimatroid::check_axioms(raw), Axiom::SR1));

  raw.ranks = {1, 1};  // r({}) = 1 > 0 fails SR1 too
  CHECK(has_violation(Semimatroid::check_axioms(raw), Axiom::SR1));

  RawSemimatroid mono;
  mono.labels = {"a", "b"};
  mono.members = {Subset{0}, Subset{1}, Subset{2}, Subset{3}};
  mono.ranks = {0, 1, 1, 0};
  CHECK(has_violation(Semimatroid::check_axioms(mono), Axiom::SR2));
}

TEST_CASE("family must be nonempty and downward closed") {
  RawSemimatroid raw;
  raw.labels = {"a"};
  CHECK(has_violation(Semimatroid::check_axioms(raw), Axiom::Nonempty));

  RawSemimatroid gap;
  gap.labels = {"a", "b"};
  gap.members = {Subset{0}, Subset{3}};
  gap.ranks = {0, 2};
  CHECK(has_violation(Semimatroid::check_axioms(gap), Axiom::Simplicial));

  RawSemimatroid no_empty;
  no_empty.labels = {"a"};
  no_empty.members = {Subset{1}};
  no_empty.ranks = {1};
  CheckResult res = Semimatroid::check_axioms(no_empty);
  CHECK_FALSE(res.ok());  // the empty set is a missing subset
}

TEST_CASE("shape problems are input errors, not axiom reports") {
  RawSemimatroid raw = plt_raw();
  raw.ranks.pop_back();
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(raw), InputError);

  raw = plt_raw();
  raw.members.push_back(raw.members[2]);
  raw.ranks.push_back(1);
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(raw), InputError);

  raw = plt_raw();
  raw.members.push_back(Subset(1u << 3));
  raw.ranks.push_back(1);
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(raw), InputError);

  raw = plt_raw();
  raw.ranks[1] = -1;
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(raw), InputError);

  RawSemimatroid dup;
  dup.labels = {"a", "a"};
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(dup), InputError);

  RawSemimatroid bad_label;
  bad_label.labels = {"a b"};
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(bad_label), InputError);

  RawSemimatroid big;
  for (int i = 0; i < 65; ++i) big.labels.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS((void)Semimatroid::check_axioms(big), InputError);
}

TEST_CASE("axiom violations do not mask each other") {
  // SR1 break at {a} and a simplicial gap at {b,c} in one document.
  RawSemimatroid raw;
  raw.labels = {"a", "b", "c"};
  raw.members = {Subset{0}, Subset{1}, Subset{6}};
  raw.ranks = {0, 2, 1};
  CheckResult res = Semimatroid::check_axioms(raw);
  CHECK(has_violation(res, Axiom::SR1));
  CHECK(has_violation(res, Axiom::Simplicial));
}

TEST_CASE("reordering permutes positions but not structure size") {
  Semimatroid sm = plt();
  Semimatroid rev = sm.reordered({"c", "b", "a"});
  CHECK(rev.ground().labels() == std::vector<std::string>{"c", "b", "a"});
  CHECK(rev.size() == 3);
  CHECK(rev.rank() == 2);
  CHECK(rev.central_count() == 6);
  CHECK(rev.rank_of(by_labels(rev, {"a", "c"})) == 2);
  CHECK_FALSE(rev.is_central(by_labels(rev, {"a", "b"})));
  CHECK(rev.classify(rev.ground().position("c")) == ElementClass::Isthmus);

  CHECK_THROWS_AS((void)sm.reordered({"a", "b"}), InputError);
  CHECK_THROWS_AS((void)sm.reordered({"a", "b", "b"}), InputError);
  CHECK_THROWS_AS((void)sm.reordered({"a", "b", "d"}), InputError);
}

TEST_CASE("structure keys compare relabeled structures exactly") {
  Semimatroid sm = plt();
  CHECK(sm.structure_key() == plt().structure_key());
  // a and b play symmetric roles, so swapping them preserves the key.
  CHECK(sm.reordered({"b", "a", "c"}).structure_key() == sm.structure_key());
  // Moving the isthmus to position 0 changes the relabeled family.
  CHECK_FALSE(sm.reordered({"c", "b", "a"}).structure_key() == sm.structure_key());
  CHECK_FALSE(fixtures::single_loop().structure_key() ==
              fixtures::single_isthmus().structure_key());
}

TEST_CASE("raw round-trips through validated") {
  Semimatroid sm = plt();
  RawSemimatroid raw = sm.raw();
  Semimatroid again = Semimatroid::validated(raw);
  CHECK(again.structure_key() == sm.structure_key());
  CHECK(again.ground().labels() == sm.ground().labels());
}
