#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "invariants.hpp"
#include "oracle.hpp"

using namespace semitutte;
using fixtures::oracle_of;
using fixtures::plt;

namespace {

const Invariant kAll[] = {
    Invariant::MultivariateTutte, Invariant::Dichromatic,  Invariant::Tutte,
    Invariant::Characteristic,    Invariant::SubsetCorank, Invariant::SizeCorank,
    Invariant::RankGenerating,
};

std::string via(const Semimatroid& sm, Invariant w, Route r) {
  return serialize(evaluate(sm, w, r));
}

void routes_agree(const Semimatroid& sm) {
  for (Invariant w : kAll) {
    auto routes = routes_for(w);
    REQUIRE_FALSE(routes.empty());
    std::string base = via(sm, w, routes[0]);
    for (Route r : routes) CHECK(via(sm, w, r) == base);
  }
}

std::string oracle_value(const Semimatroid& sm, Invariant w) {
  oracle::Instance inst = oracle_of(sm);
  switch (w) {
    case Invariant::MultivariateTutte: return oracle::render(oracle::z_poly(inst));
    case Invariant::Dichromatic: return oracle::render(oracle::dichromatic_poly(inst));
    case Invariant::Tutte: return oracle::render(oracle::tutte_poly(inst));
    case Invariant::Characteristic: return oracle::render(oracle::characteristic_poly(inst));
    case Invariant::SubsetCorank: return oracle::render(oracle::subset_corank_poly(inst));
    case Invariant::SizeCorank: return oracle::render(oracle::size_corank_poly(inst));
    case Invariant::RankGenerating: return oracle::render(oracle::rank_gen_poly(inst));
  }
  return "?";
}

Subset by_labels(const Semimatroid& sm, const std::vector<std::string>& ls) {
  return sm.ground().parse_subset(ls);
}

}  // namespace

TEST_CASE("route tables") {
  CHECK(routes_for(Invariant::Tutte).size() == 4);
  CHECK(routes_for(Invariant::SubsetCorank).size() == 4);
  CHECK(routes_for(Invariant::SizeCorank).size() == 4);
  CHECK(routes_for(Invariant::Characteristic).size() == 1);
  CHECK(routes_for(Invariant::MultivariateTutte).size() == 3);
  CHECK(routes_for(Invariant::Dichromatic).size() == 3);
  CHECK(routes_for(Invariant::RankGenerating).size() == 3);

  CHECK(route_from_name("dc") == Route::DeletionContraction);
  CHECK(invariant_from_name("z") == Invariant::MultivariateTutte);
  CHECK_THROWS_AS((void)route_from_name("fast"), InputError);
  CHECK_THROWS_AS((void)invariant_from_name("chromatic"), InputError);
}

TEST_CASE("frozen values for the three-line fixture") {
  Semimatroid sm = plt();
  CHECK(serialize(multivariate_tutte(sm)) ==
        "l^-2*x_a*x_c + l^-2*x_b*x_c + l^-1*x_a + l^-1*x_b + l^-1*x_c + 1");
  CHECK(serialize(dichromatic(sm)) == "2*l^-2*x^2 + 3*l^-1*x + 1");
  CHECK(serialize(tutte(sm)) == "l^2 + l");
  CHECK(serialize(characteristic(sm)) == "l^2 - 3*l + 2");
  CHECK(serialize(subset_corank(sm)) ==
        "l^2 + l*x_a + l*x_b + l*x_c + x_a*x_c + x_b*x_c");
  CHECK(serialize(size_corank(sm)) == "l^2 + 3*l*x + 2*x^2");
  CHECK(serialize(rank_generating(sm)) == "l^2 + 3*l + 2");
}

TEST_CASE("frozen values for tiny instances") {
  Semimatroid loop = fixtures::single_loop();
  CHECK(serialize(characteristic(loop)) == "0");
  CHECK(serialize(tutte(loop)) == "x");
  CHECK(serialize(multivariate_tutte(loop)) == "x_e + 1");

  Semimatroid isth = fixtures::single_isthmus();
  CHECK(serialize(tutte(isth)) == "l");
  CHECK(serialize(subset_corank(isth)) == "l + x_e");
  CHECK(serialize(characteristic(isth)) == "l - 1");

  CHECK(serialize(tutte(fixtures::free3())) == "l^3");

  Semimatroid u23 = fixtures::uniform(2, 3);
  CHECK(serialize(tutte(u23)) == "l^2 + l + x");
  CHECK(serialize(characteristic(u23)) == "l^2 - 3*l + 2");
  CHECK(serialize(rank_generating(u23)) == "l^2 + 3*l + x + 3");
  CHECK(serialize(size_corank(u23)) == "l^2 + 3*l*x + x^3 + 3*x^2");

  Semimatroid u12 = fixtures::u12_ab();
  CHECK(serialize(characteristic(u12)) == "l - 1");
  CHECK(serialize(multivariate_tutte(u12)) ==
        "l^-1*x_a*x_b + l^-1*x_a + l^-1*x_b + 1");
  CHECK(serialize(tutte(u12)) == "l + x");
}

TEST_CASE("everything is 1 on the empty ground set") {
  Semimatroid e = fixtures::empty_sm();
  for (Invariant w : kAll)
    for (Route r : routes_for(w)) CHECK(via(e, w, r) == "1");
}

TEST_CASE("all routes agree on the fixture zoo") {
  routes_agree(plt());
  routes_agree(fixtures::u12_ab());
  routes_agree(fixtures::single_loop());
  routes_agree(fixtures::single_isthmus());
  routes_agree(fixtures::free3());
  routes_agree(fixtures::uniform(2, 4));
  routes_agree(fixtures::uniform(3, 5));
}

TEST_CASE("library matches the oracle on the fixture zoo") {
  for (const Semimatroid& sm :
       {plt(), fixtures::u12_ab(), fixtures::single_loop(), fixtures::single_isthmus(),
        fixtures::uniform(2, 4), fixtures::empty_sm()}) {
    for (Invariant w : kAll) {
      CAPTURE(invariant_name(w));
      CHECK(serialize(evaluate(sm, w, routes_for(w)[0])) == oracle_value(sm, w));
    }
  }
}

TEST_CASE("memoized and memo-free deletion-contraction coincide") {
  for (Invariant w : {Invariant::Tutte, Invariant::MultivariateTutte, Invariant::SizeCorank}) {
    CHECK(serialize(dc_without_memo(plt(), w)) ==
          via(plt(), w, Route::DeletionContraction));
    CHECK(serialize(dc_without_memo(fixtures::uniform(2, 4), w)) ==
          via(fixtures::uniform(2, 4), w, Route::DeletionContraction));
  }
}

TEST_CASE("reordering never changes an invariant") {
  Semimatroid sm = plt();
  std::vector<std::string> order = {"a", "b", "c"};
  std::sort(order.begin(), order.end());
  do {
    Semimatroid re = sm.reordered(order);
    for (Invariant w : kAll)
      CHECK(serialize(evaluate(re, w, routes_for(w)[0])) ==
            serialize(evaluate(sm, w, routes_for(w)[0])));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("fundamental circuits and cocircuits") {
  Semimatroid u12 = fixtures::u12_ab();
  Subset ba = by_labels(u12, {"a"});
  CHECK(fundamental_circuit(u12, ba, 1) == by_labels(u12, {"a", "b"}));
  CHECK(fundamental_cocircuit(u12, ba, 0) == by_labels(u12, {"a", "b"}));
  CHECK_THROWS_AS((void)fundamental_circuit(u12, ba, 0), DomainError);     // e inside B
  CHECK_THROWS_AS((void)fundamental_cocircuit(u12, ba, 1), DomainError);   // e outside B
  CHECK_THROWS_AS((void)fundamental_circuit(u12, by_labels(u12, {"a", "b"}), 0),
                  DomainError);  // not a basis

  Semimatroid sm = plt();
  Subset bac = by_labels(sm, {"a", "c"});
  CHECK(fundamental_cocircuit(sm, bac, sm.ground().position("a")) ==
        by_labels(sm, {"a", "b"}));
  CHECK(fundamental_cocircuit(sm, bac, sm.ground().position("c")) == by_labels(sm, {"c"}));
  // B u {b} is not central, so there is no fundamental circuit for b.
  CHECK_THROWS_AS((void)fundamental_circuit(sm, bac, sm.ground().position("b")),
                  DomainError);
}

TEST_CASE("activities on the fixture") {
  Semimatroid sm = plt();
  ActivityRecord r1 = activities(sm, by_labels(sm, {"a", "c"}));
  CHECK(r1.internally_active == by_labels(sm, {"a", "c"}));
  CHECK(r1.externally_active == Subset{});
  CHECK(r1.fundamental_circuits.empty());
  REQUIRE(r1.fundamental_cocircuits.size() == 2);

  ActivityRecord r2 = activities(sm, by_labels(sm, {"b", "c"}));
  CHECK(r2.internally_active == by_labels(sm, {"c"}));
  CHECK(r2.externally_active == Subset{});

  CHECK_THROWS_AS((void)activities(sm, by_labels(sm, {"a"})), DomainError);
  CHECK_THROWS_AS((void)activities(sm, by_labels(sm, {"a", "b"})), DomainError);
}

TEST_CASE("external activity shows up for parallel elements") {
  Semimatroid u12 = fixtures::u12_ab();
  ActivityRecord ra = activities(u12, by_labels(u12, {"a"}));
  CHECK(ra.internally_active == by_labels(u12, {"a"}));
  CHECK(ra.externally_active == Subset{});
  ActivityRecord rb = activities(u12, by_labels(u12, {"b"}));
  CHECK(rb.internally_active == Subset{});
  CHECK(rb.externally_active == by_labels(u12, {"a"}));
  REQUIRE(rb.fundamental_circuits.size() == 1);
  CHECK(rb.fundamental_circuits[0].second == by_labels(u12, {"a", "b"}));
}

TEST_CASE("interval decomposition partitions the central family") {
  Semimatroid sm = plt();
  auto ivs = interval_decomposition(sm);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].basis == by_labels(sm, {"a", "c"}));
  CHECK(ivs[0].lower == Subset{});
  CHECK(ivs[0].upper == by_labels(sm, {"a", "c"}));
  CHECK(ivs[1].basis == by_labels(sm, {"b", "c"}));
  CHECK(ivs[1].lower == by_labels(sm, {"b"}));
  CHECK(ivs[1].upper == by_labels(sm, {"b", "c"}));

  // Interval sizes 4 and 2 cover the six central sets.
  int covered = 0;
  for (const auto& iv : ivs) covered += 1 << (iv.upper - iv.lower).size();
  CHECK(covered == sm.central_count());

  auto empty_ivs = interval_decomposition(fixtures::empty_sm());
  REQUIRE(empty_ivs.size() == 1);
  CHECK(empty_ivs[0].lower == Subset{});
  CHECK(empty_ivs[0].upper == Subset{});
}

TEST_CASE("activities route reproduces the basis expansion") {
  // T = sum over bases of l^{|IA|} * x^{|EA|}, straight from the records.
  for (const Semimatroid& sm : {plt(), fixtures::u12_ab(), fixtures::uniform(2, 4)}) {
    SparsePoly expect;
    for (Subset b : sm.bases()) {
      ActivityRecord rec = activities(sm, b);
      Monomial m = Monomial::var(VarId::lambda(), rec.internally_active.size())
                       .times(Monomial::var(VarId::plain("x"), rec.externally_active.size()));
      expect.add_term(1, m);
    }
    CHECK(serialize(tutte(sm, Route::Activities)) == serialize(expect));
  }
}
