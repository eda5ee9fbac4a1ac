#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "builders.hpp"
#include "fixtures.hpp"
#include "identities.hpp"

using namespace semitutte;
using fixtures::plt;

namespace {

const std::vector<std::string> kIds = {
    "conv-mv",         "conv-mv-special",  "conv-scalar",      "char-conv",
    "weighted-mv",     "weighted-flats",   "sc-conv",          "sc-conv-special",
    "sc-weighted",     "sc-weighted-flats", "rg-conv",         "rg-conv-special",
    "rg-rgpcf",        "rg-rgpcf-flats",   "rg-rgpcf-cyclic",  "lat-dichromatic",
    "lat-sc-mv",       "lat-size-corank",  "lat-size-corank-rg", "lat-tutte-rg",
    "lat-tutte-z",     "lat-char-sc",      "lat-char-tutte",   "lat-char-rg",
};

void expect_all_pass(const Semimatroid& sm) {
  for (const IdentityReport& rep : check_all(sm)) {
    CAPTURE(rep.id);
    CAPTURE(serialize(rep.diff));
    CHECK(rep.pass);
    CHECK(rep.diff.is_zero());
    CHECK(rep.lhs == rep.rhs);
  }
}

}  // namespace

TEST_CASE("the id registry is stable") {
  CHECK(identity_ids() == kIds);
  auto scalar = identity_ids(true);
  CHECK(scalar.size() == 13);
  for (const std::string& id : scalar) {
    CHECK_FALSE(identity_is_multivariate(id));
    CHECK(std::find(kIds.begin(), kIds.end(), id) != kIds.end());
  }
  CHECK(identity_is_multivariate("conv-mv"));
  CHECK(identity_is_multivariate("weighted-flats"));
  CHECK(identity_is_multivariate("lat-sc-mv"));
  CHECK_FALSE(identity_is_multivariate("conv-scalar"));
  CHECK_FALSE(identity_is_multivariate("lat-char-rg"));
}

TEST_CASE("unknown ids are input errors") {
  CHECK_THROWS_AS((void)run_identity(plt(), "conv"), InputError);
  CHECK_THROWS_AS((void)run_identity(plt(), ""), InputError);
  CHECK_THROWS_AS((void)identity_is_multivariate("convolution"), InputError);
}

TEST_CASE("every identity holds on the three-line fixture") {
  auto reports = check_all(plt());
  REQUIRE(reports.size() == kIds.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].id);
    CHECK(reports[i].id == kIds[i]);
    CHECK(reports[i].pass);
  }
}

TEST_CASE("sides are computed, not copied") {
  // A passing report still carries a nontrivial pair of equal polynomials.
  auto reports = run_identity(plt(), "conv-mv");
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].pass);
  CHECK_FALSE(reports[0].lhs.is_zero());
  CHECK(reports[0].lhs.term_count() > 4);

  auto scalar = run_identity(plt(), "conv-scalar");
  REQUIRE(scalar.size() == 1);
  CHECK_FALSE(scalar[0].lhs.is_zero());
}

TEST_CASE("named entry points agree with the registry ids") {
  Semimatroid sm = plt();
  CHECK(check_convolution_multivariate(sm).id == "conv-mv");
  CHECK(check_convolution_multivariate_special(sm).id == "conv-mv-special");
  CHECK(check_convolution_scalar(sm).id == "conv-scalar");
  CHECK(check_characteristic_convolution(sm).id == "char-conv");
  CHECK(check_weighted_sum(sm).id == "weighted-mv");
  CHECK(check_weighted_flats(sm).id == "weighted-flats");

  auto sc = check_sc_identities(sm);
  REQUIRE(sc.size() == 4);
  CHECK(sc[0].id == "sc-conv");
  CHECK(sc[3].id == "sc-weighted-flats");

  auto rg = check_rank_gen_identities(sm);
  REQUIRE(rg.size() == 5);
  CHECK(rg[0].id == "rg-conv");
  CHECK(rg[4].id == "rg-rgpcf-cyclic");

  for (const std::string& id : kIds) {
    auto reports = run_identity(sm, id);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].id == id);
    CHECK(reports[0].pass);
  }
}

TEST_CASE("the scalar convolution on a single loop, by hand") {
  // Both sides reduce to 1 + x*y on a one-element rank-zero instance.
  auto reports = run_identity(fixtures::single_loop(), "conv-scalar");
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].pass);
  CHECK(serialize(reports[0].lhs) == "x*y + 1");
  CHECK(serialize(reports[0].rhs) == "x*y + 1");
}

TEST_CASE("identities hold across the fixture zoo") {
  expect_all_pass(fixtures::single_loop());
  expect_all_pass(fixtures::single_isthmus());
  expect_all_pass(fixtures::u12_ab());
  expect_all_pass(fixtures::free3());
  expect_all_pass(fixtures::uniform(2, 4));
  expect_all_pass(fixtures::empty_sm());
}

TEST_CASE("identities hold on a matroid obtained by raising a rank") {
  RawSemimatroid raw = fixtures::uniform(2, 3).raw();
  for (std::size_t i = 0; i < raw.members.size(); ++i)
    if (raw.members[i].size() == 3) raw.ranks[i] = 3;
  expect_all_pass(Semimatroid::validated(raw));
}

TEST_CASE("identities hold on random arrangement instances") {
  for (std::uint64_t seed : {11u, 23u, 47u}) {
    RandomSpec spec;
    spec.seed = seed;
    spec.n = 5;
    spec.d = 2;
    spec.bound = 2;
    expect_all_pass(random_instance(spec));
  }
}

TEST_CASE("scalar-only runs cover exactly the scalar ids") {
  auto reports = check_all(plt(), true);
  auto ids = identity_ids(true);
  REQUIRE(reports.size() == ids.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == ids[i]);
    CHECK(reports[i].pass);
  }
}
