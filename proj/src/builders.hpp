#pragma once

/*
 * Construction of semimatroids from explicit JSON documents, affine
 * hyperplane arrangements with rational coefficients, matroid rank tables,
 * and a seeded random generator. All arithmetic is exact.
 */

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "semimatroid.hpp"

namespace semitutte {

// den > 0 and gcd(num, den) = 1 after normalization.
struct Rational {
  mpz_class num;
  mpz_class den{1};

  void normalize();
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Hyperplane {
  std::string label;
  std::vector<Rational> normal;  // length = ambient dimension, not all zero
  Rational offset;
};

struct ArrangementDoc {
  int dimension = 0;
  std::vector<Hyperplane> hyperplanes;
};

struct ExplicitDoc {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> central;
  std::vector<std::pair<std::vector<std::string>, int>> rank;
};

struct RandomSpec {
  std::uint64_t seed = 0;
  int n = 0;
  int d = 2;
  long bound = 3;
};

enum class DocKind { Explicit, Arrangement };

// Parsers throw InputError on malformed JSON or field shapes.
ExplicitDoc parse_explicit_doc(const std::string& text);
ArrangementDoc parse_arrangement_doc(const std::string& text);
DocKind sniff_doc_kind(const std::string& text);

// Canonical JSON for an instance: central sets in canonical subset order,
// labels inside each set in ground order. from_explicit(emit) round-trips.
std::string emit_explicit(const Semimatroid& sm);

Semimatroid from_explicit(const ExplicitDoc& doc);

// `rank` is consulted on every subset of the ground set; the axioms are
// checked, so a non-matroid table is rejected. Capped at 20 elements.
Semimatroid from_matroid_rank(const std::vector<std::string>& ground,
                              const std::function<int(Subset)>& rank);

// Central sets are the consistent subsystems; ranks come from the normal
// matrix. The result is validated, not assumed. Capped at 20 hyperplanes.
Semimatroid from_arrangement(const ArrangementDoc& doc);

// Sniffs the document kind, then builds and validates.
Semimatroid load_document(const std::string& text);

// Deterministic per spec: splitmix64 stream, coefficients uniform in
// [-bound, bound], whole-normal zero rejection, labels h0..h{n-1}.
ArrangementDoc random_arrangement(const RandomSpec& spec);
Semimatroid random_instance(const RandomSpec& spec);

}  // namespace semitutte
