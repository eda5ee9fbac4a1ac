#pragma once

/*
 * Finite semimatroids: a ground set E with a linear order, a nonempty
 * simplicial complex of central sets, and a rank function on central sets
 * subject to the axioms SR1 (bounded by cardinality), SR2 (monotone),
 * SR3 (submodular where the union is central), SR4 (union of rank-matched
 * sets is central) and SR5 (central-set exchange). Ranks are stored
 * explicitly; asking for the rank of a non-central set is a domain error,
 * never zero or a guess.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "subset.hpp"

namespace semitutte {

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_label(const std::string& l) const { return index_.count(l) != 0; }
  int position(const std::string& l) const;
  Subset full() const { return Subset::first_n(size()); }

  Subset parse_subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

enum class Axiom { Nonempty, Simplicial, SR1, SR2, SR3, SR4, SR5 };

const char* axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<Subset> witness;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

// Unvalidated description: a candidate central family with candidate ranks.
struct RawSemimatroid {
  std::vector<std::string> labels;
  std::vector<Subset> members;
  std::vector<int> ranks;  // aligned with members
};

// Exact structural fingerprint after relabeling elements to 0..n-1 in ground
// order: the full (family, rank) data, so equal keys mean identical
// relabeled structures, never a hash coincidence.
struct StructureKey {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint64_t, std::int32_t>> entries;

  friend bool operator==(const StructureKey&, const StructureKey&) = default;
};

struct StructureKeyHash {
  std::size_t operator()(const StructureKey& k) const {
    std::uint64_t h = 1469598103934665603ull ^ k.n;
    for (const auto& [m, r] : k.entries) {
      h = (h ^ m) * 1099511628211ull;
      h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(r))) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

enum class ElementClass { Loop, Isthmus, Ordinary, NonCentral };

const char* element_class_name(ElementClass c);

struct CheckResult;

class Semimatroid {
 public:
  // Validates input shape (throws InputError) and the axioms; on success the
  // result carries the semimatroid, otherwise every violation found.
  static CheckResult check_axioms(const RawSemimatroid& raw);

  // check_axioms, but violations become an InputError.
  static Semimatroid validated(const RawSemimatroid& raw);

  // Construction without axiom checking, for operations whose output
  // validity is a theorem (minors, relabelings). `members` must be sorted in
  // canonical subset order with `ranks` aligned unless presorted is false.
  static Semimatroid trusted(GroundSet g, std::vector<Subset> members,
                             std::vector<int> ranks, bool presorted = false);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }

  const std::vector<Subset>& central_sets() const { return members_; }
  int central_count() const { return static_cast<int>(members_.size()); }
  // `rank_at(i)` pairs with central_sets()[i].
  int rank_at(int i) const { return ranks_[static_cast<std::size_t>(i)]; }

  bool is_central(Subset s) const;
  int rank_of(Subset s) const;   // DomainError when s is not central
  Subset closure(Subset s) const;
  std::vector<Subset> flats() const;
  std::vector<Subset> bases() const;
  std::vector<Subset> circuits() const;
  ElementClass classify(int e) const;
  bool is_cyclic_flat(Subset t) const;

  RawSemimatroid raw() const;
  Semimatroid reordered(const std::vector<std::string>& new_order) const;
  StructureKey structure_key() const;

 private:
  Semimatroid() = default;

  void check_subset(Subset s) const;

  GroundSet ground_;
  std::vector<Subset> members_;  // canonical order
  std::vector<int> ranks_;       // aligned with members_
  std::unordered_map<std::uint64_t, int> index_;
  int rank_ = 0;
};

struct CheckResult {
  std::optional<Semimatroid> semimatroid;  // engaged iff violations is empty
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

}  // namespace semitutte
