#pragma once

/*
 * The polynomial invariants and the basis-activity machinery.
 *
 * Every invariant is computable by independent routes (direct sum over the
 * central family, deletion-contraction, basis activities, and for some a
 * derivation from another invariant); exact agreement between routes is the
 * library's main self-check and is what the tests pin down.
 */

#include <functional>
#include <string>
#include <vector>

#include "minors.hpp"
#include "poly.hpp"

namespace semitutte {

enum class Route { SubsetSum, DeletionContraction, Activities, ViaZ };
enum class Invariant {
  MultivariateTutte,  // "z": sum over central A of l^{-r(A)} * prod x_e
  Dichromatic,        // scalar x
  Tutte,
  Characteristic,
  SubsetCorank,       // l^{r} * z, polynomial in l and the x_e
  SizeCorank,
  RankGenerating,
};

Route route_from_name(const std::string& name);        // sum | dc | activities | viaz
Invariant invariant_from_name(const std::string& n);   // z | dichromatic | tutte | ...
const char* invariant_name(Invariant w);
const char* route_name(Route r);
std::vector<Route> routes_for(Invariant w);

SparsePoly multivariate_tutte(const Semimatroid& sm, Route route = Route::SubsetSum);
SparsePoly dichromatic(const Semimatroid& sm, Route route = Route::SubsetSum);
SparsePoly tutte(const Semimatroid& sm, Route route = Route::SubsetSum);
// Direct alternating sum, cross-checked internally against both tutte and
// dichromatic specializations on every call.
SparsePoly characteristic(const Semimatroid& sm);
SparsePoly subset_corank(const Semimatroid& sm, Route route = Route::SubsetSum);
SparsePoly size_corank(const Semimatroid& sm, Route route = Route::SubsetSum);
SparsePoly rank_generating(const Semimatroid& sm, Route route = Route::SubsetSum);

SparsePoly evaluate(const Semimatroid& sm, Invariant w, Route route);

// Test hook: the deletion-contraction route with memoization disabled.
SparsePoly dc_without_memo(const Semimatroid& sm, Invariant w);

// Unique circuit inside B u {e}; requires B a basis, e outside B and
// B u {e} central (DomainError otherwise).
Subset fundamental_circuit(const Semimatroid& sm, Subset basis, int e);

// {e} together with every f outside B for which (B - e) u {f} is again a
// basis; requires B a basis and e in B.
Subset fundamental_cocircuit(const Semimatroid& sm, Subset basis, int e);

struct ActivityRecord {
  Subset basis;
  Subset internally_active;
  Subset externally_active;
  std::vector<std::pair<int, Subset>> fundamental_circuits;    // e with B u e central
  std::vector<std::pair<int, Subset>> fundamental_cocircuits;  // every e in B
};

ActivityRecord activities(const Semimatroid& sm, Subset basis);

struct DecompositionInterval {
  Subset basis;
  Subset lower;  // B - IA(B)
  Subset upper;  // B u EA(B)
};

// [B - IA, B u EA] over all bases; verifies that the intervals partition the
// central family and that corank inside each interval counts the dropped
// internally active elements. StructuralError with a witness otherwise.
std::vector<DecompositionInterval> interval_decomposition(const Semimatroid& sm);

}  // namespace semitutte
