#include "minors.hpp"

namespace semitutte {

namespace {

GroundSet surviving_ground(const Semimatroid& sm, Subset keep) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(keep.size()));
  for (int e : keep.elements()) labels.push_back(sm.ground().label(e));
  return GroundSet(std::move(labels));
}

}  // namespace

Semimatroid deletion(const Semimatroid& sm, Subset s) {
  if (!s.subset_of(sm.ground().full()))
    throw InputError("deletion set outside the ground set");
  Subset keep = sm.ground().full() - s;
  std::vector<Subset> members;
  std::vector<int> ranks;
  const auto& all = sm.central_sets();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].intersects(s)) {
      members.push_back(compress_into(all[i], keep));
      ranks.push_back(sm.rank_at(static_cast<int>(i)));
    }
  }
  // compress_into preserves both cardinality and the lex comparison, so the
  // canonical order carries over.
  return Semimatroid::trusted(surviving_ground(sm, keep), std::move(members),
                              std::move(ranks), /*presorted=*/true);
}

Semimatroid restriction(const Semimatroid& sm, Subset x) {
  return deletion(sm, sm.ground().full() - x);
}

Semimatroid contraction(const Semimatroid& sm, Subset x) {
  int rx = sm.rank_of(x);  // DomainError for non-central x
  Subset keep = sm.ground().full() - x;
  std::vector<Subset> members;
  std::vector<int> ranks;
  const auto& all = sm.central_sets();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (x.subset_of(all[i])) {
      members.push_back(compress_into(all[i] - x, keep));
      ranks.push_back(sm.rank_at(static_cast<int>(i)) - rx);
    }
  }
  Semimatroid out = Semimatroid::trusted(surviving_ground(sm, keep), std::move(members),
                                         std::move(ranks), /*presorted=*/true);
  if (out.rank() != sm.rank() - rx)
    throw StructuralError("contraction rank law failed");
  return out;
}

MinorKey canonical_key(const Semimatroid& sm) {
  return {sm.ground().full(), Subset{}, sm.structure_key()};
}

}  // namespace semitutte
