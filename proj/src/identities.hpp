#pragma once

/*
 * Symbolic verification of the convolution and weighted-sum identities on a
 * concrete instance. Every check compares two exactly computed polynomials;
 * by design the left side is built by the direct subset-sum route and the
 * right side's minor factors by deletion-contraction, so the two sides
 * exercise independent code paths.
 */

#include <string>
#include <vector>

#include "invariants.hpp"

namespace semitutte {

struct IdentityReport {
  std::string id;
  SparsePoly lhs;
  SparsePoly rhs;
  SparsePoly diff;  // lhs - rhs
  bool pass = false;
};

// Single identities, in the grouping the interfaces promise.
IdentityReport check_convolution_multivariate(const Semimatroid& sm);
IdentityReport check_convolution_multivariate_special(const Semimatroid& sm);
IdentityReport check_convolution_scalar(const Semimatroid& sm);
IdentityReport check_characteristic_convolution(const Semimatroid& sm);
IdentityReport check_weighted_sum(const Semimatroid& sm);
IdentityReport check_weighted_flats(const Semimatroid& sm);
std::vector<IdentityReport> check_sc_identities(const Semimatroid& sm);
std::vector<IdentityReport> check_rank_gen_identities(const Semimatroid& sm);

// Registry used by the CLI and the acceptance sweep. Multivariate ids use
// per-element variables and scale with 2^n; scalar ids stay cheap.
std::vector<std::string> identity_ids(bool scalar_only = false);
bool identity_is_multivariate(const std::string& id);

// Run one identity by id (InputError for unknown ids), or the whole family
// plus the specialization-lattice cross-checks.
std::vector<IdentityReport> run_identity(const Semimatroid& sm, const std::string& id);
std::vector<IdentityReport> check_all(const Semimatroid& sm, bool scalar_only = false);

}  // namespace semitutte
