#pragma once

/*
 * Deletion and contraction. Both keep the surviving elements' labels and
 * their relative order, re-indexed densely; both return structures whose
 * axiom validity is a theorem (asserted across the test corpus rather than
 * re-validated here, since these sit inside recursions).
 */

#include "semimatroid.hpp"

namespace semitutte {

// C \ S for arbitrary S: central sets avoiding S, ranks inherited.
Semimatroid deletion(const Semimatroid& sm, Subset s);

// C restricted to X: deletion of everything else.
Semimatroid restriction(const Semimatroid& sm, Subset x);

// C / X for central X: sets Y disjoint from X with X u Y central,
// ranked r(X u Y) - r(X). DomainError when X is not central.
Semimatroid contraction(const Semimatroid& sm, Subset x);

// Memo key for deletion-contraction recursions. ground_subset/contracted
// record how the minor was reached (relative to the instance it came from);
// equality and hashing use only the relabeled structure, so independently
// built isomorphic-with-matching-labels minors compare equal.
struct MinorKey {
  Subset ground_subset;
  Subset contracted;
  StructureKey structure;

  friend bool operator==(const MinorKey& a, const MinorKey& b) {
    return a.structure == b.structure;
  }
};

struct MinorKeyHash {
  std::size_t operator()(const MinorKey& k) const { return StructureKeyHash{}(k.structure); }
};

MinorKey canonical_key(const Semimatroid& sm);

}  // namespace semitutte
