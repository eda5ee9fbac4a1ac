#include "semimatroid.hpp"

#include <algorithm>
#include <numeric>

namespace semitutte {

namespace {

bool valid_label(const std::string& l) {
  if (l.empty()) return false;
  for (char c : l) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 64)
    throw InputError("ground set exceeds the 64-element cap");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i]))
      throw InputError("invalid label '" + labels_[i] +
                       "' (labels use [A-Za-z0-9_], nonempty)");
    auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
    (void)it;
    if (!fresh) throw InputError("duplicate label '" + labels_[i] + "'");
  }
}

int GroundSet::position(const std::string& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw InputError("unknown label '" + l + "'");
  return it->second;
}

Subset GroundSet::parse_subset(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) {
    int p = position(l);
    if (s.contains(p)) throw InputError("duplicate label '" + l + "' in subset");
    s = s.with(p);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int e : s.elements()) out.push_back(labels_[static_cast<std::size_t>(e)]);
  return out;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Nonempty: return "NONEMPTY";
    case Axiom::Simplicial: return "NOT_SIMPLICIAL";
    case Axiom::SR1: return "SR1";
    case Axiom::SR2: return "SR2";
    case Axiom::SR3: return "SR3";
    case Axiom::SR4: return "SR4";
    case Axiom::SR5: return "SR5";
  }
  return "?";
}

const char* element_class_name(ElementClass c) {
  switch (c) {
    case ElementClass::Loop: return "loop";
    case ElementClass::Isthmus: return "isthmus";
    case ElementClass::Ordinary: return "ordinary";
    case ElementClass::NonCentral: return "non-central";
  }
  return "?";
}

CheckResult Semimatroid::check_axioms(const RawSemimatroid& raw) {
  GroundSet ground(raw.labels);
  if (raw.members.size() != raw.ranks.size())
    throw InputError("rank list does not cover the central family exactly");
  Subset full = ground.full();

  std::unordered_map<std::uint64_t, int> index;
  index.reserve(raw.members.size() * 2);
  for (std::size_t i = 0; i < raw.members.size(); ++i) {
    Subset m = raw.members[i];
    if (!m.subset_of(full))
      throw InputError("central set outside the ground set");
    if (raw.ranks[i] < 0) throw InputError("negative rank value");
    auto [it, fresh] = index.emplace(m.bits, static_cast<int>(i));
    (void)it;
    if (!fresh) throw InputError("duplicate central set in family");
  }

  CheckResult res;
  auto violate = [&](Axiom a, std::vector<Subset> w) {
    res.violations.push_back({a, std::move(w)});
  };

  if (raw.members.empty()) {
    violate(Axiom::Nonempty, {});
    return res;
  }

  auto rank_of = [&](Subset s) { return raw.ranks[static_cast<std::size_t>(index.at(s.bits))]; };
  auto central = [&](Subset s) { return index.count(s.bits) != 0; };

  const int n = ground.size();
  for (Subset x : raw.members) {
    for (int e : x.elements())
      if (!central(x.without(e))) violate(Axiom::Simplicial, {x, x.without(e)});
    if (rank_of(x) > x.size()) violate(Axiom::SR1, {x});
  }

  const std::size_t count = raw.members.size();
  for (std::size_t i = 0; i < count; ++i) {
    Subset x = raw.members[i];
    int rx = raw.ranks[i];
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      Subset y = raw.members[j];
      int ry = raw.ranks[j];

      if (i < j) {
        if (x.subset_of(y) && rx > ry) violate(Axiom::SR2, {x, y});
        if (y.subset_of(x) && ry > rx) violate(Axiom::SR2, {y, x});
        Subset u = x | y, m = x & y;
        if (central(u) && central(m) && rank_of(m) + rank_of(u) > rx + ry)
          violate(Axiom::SR3, {x, y});
      }

      Subset m = x & y;
      if (central(m) && rx == rank_of(m) && !central(x | y)) violate(Axiom::SR4, {x, y});

      if (rx < ry) {
        bool found = false;
        for (int e : (y - x).elements()) {
          if (e >= n) break;
          if (central(x.with(e))) {
            found = true;
            break;
          }
        }
        if (!found) violate(Axiom::SR5, {x, y});
      }
    }
  }

  if (!res.violations.empty()) return res;

  // All maximal central sets share one rank once SR1..SR5 hold; computing
  // the global rank also double-checks that.
  int top = 0;
  for (int r : raw.ranks) top = std::max(top, r);
  for (std::size_t i = 0; i < count; ++i) {
    Subset x = raw.members[i];
    bool maximal = true;
    for (int e = 0; e < n && maximal; ++e)
      if (!x.contains(e) && central(x.with(e))) maximal = false;
    if (maximal && raw.ranks[i] != top)
      throw StructuralError("maximal central sets disagree on rank");
  }

  Semimatroid sm;
  sm.ground_ = std::move(ground);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(raw.members[a], raw.members[b]);
  });
  sm.members_.reserve(count);
  sm.ranks_.reserve(count);
  for (std::size_t k : order) {
    sm.members_.push_back(raw.members[k]);
    sm.ranks_.push_back(raw.ranks[k]);
  }
  sm.index_.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i) sm.index_.emplace(sm.members_[i].bits, static_cast<int>(i));
  sm.rank_ = top;
  res.semimatroid = std::move(sm);
  return res;
}

Semimatroid Semimatroid::validated(const RawSemimatroid& raw) {
  CheckResult res = check_axioms(raw);
  if (!res.ok()) {
    GroundSet g(raw.labels);
    std::string msg = "axiom violations:";
    for (const auto& v : res.violations) {
      msg += "\n  ";
      msg += axiom_name(v.axiom);
      for (Subset w : v.witness) {
        msg += " {";
        bool first = true;
        for (const auto& l : g.labels_of(w)) {
          if (!first) msg += ",";
          msg += l;
          first = false;
        }
        msg += "}";
      }
    }
    throw AxiomError(msg);
  }
  return std::move(*res.semimatroid);
}

Semimatroid Semimatroid::trusted(GroundSet g, std::vector<Subset> members,
                                 std::vector<int> ranks, bool presorted) {
  Semimatroid sm;
  sm.ground_ = std::move(g);
  sm.members_ = std::move(members);
  sm.ranks_ = std::move(ranks);
  if (!presorted) {
    std::vector<std::size_t> order(sm.members_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return canonical_less(sm.members_[a], sm.members_[b]);
    });
    std::vector<Subset> ms;
    std::vector<int> rs;
    ms.reserve(order.size());
    rs.reserve(order.size());
    for (std::size_t k : order) {
      ms.push_back(sm.members_[k]);
      rs.push_back(sm.ranks_[k]);
    }
    sm.members_ = std::move(ms);
    sm.ranks_ = std::move(rs);
  }
  sm.index_.reserve(sm.members_.size() * 2);
  int top = 0;
  for (std::size_t i = 0; i < sm.members_.size(); ++i) {
    sm.index_.emplace(sm.members_[i].bits, static_cast<int>(i));
    top = std::max(top, sm.ranks_[i]);
  }
  sm.rank_ = top;
  return sm;
}

void Semimatroid::check_subset(Subset s) const {
  if (!s.subset_of(ground_.full()))
    throw InputError("subset outside the ground set");
}

bool Semimatroid::is_central(Subset s) const {
  check_subset(s);
  return index_.count(s.bits) != 0;
}

int Semimatroid::rank_of(Subset s) const {
  check_subset(s);
  auto it = index_.find(s.bits);
  if (it == index_.end())
    throw DomainError("rank of non-central set {" + [&] {
      std::string acc;
      for (const auto& l : ground_.labels_of(s)) {
        if (!acc.empty()) acc += ",";
        acc += l;
      }
      return acc;
    }() + "}");
  return ranks_[static_cast<std::size_t>(it->second)];
}

Subset Semimatroid::closure(Subset s) const {
  int rs = rank_of(s);
  Subset out = s;
  for (int e = 0; e < size(); ++e) {
    if (s.contains(e)) continue;
    auto it = index_.find(s.with(e).bits);
    if (it != index_.end() && ranks_[static_cast<std::size_t>(it->second)] == rs)
      out = out.with(e);
  }
  return out;
}

std::vector<Subset> Semimatroid::flats() const {
  std::vector<Subset> out;
  for (Subset m : members_)
    if (closure(m) == m) out.push_back(m);
  return out;
}

std::vector<Subset> Semimatroid::bases() const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    Subset x = members_[i];
    if (ranks_[i] != x.size()) continue;
    bool maximal = true;
    for (int e = 0; e < size() && maximal; ++e) {
      if (x.contains(e)) continue;
      auto it = index_.find(x.with(e).bits);
      if (it != index_.end() && ranks_[static_cast<std::size_t>(it->second)] == x.size() + 1)
        maximal = false;
    }
    if (maximal) {
      if (x.size() != rank_)
        throw StructuralError("maximal independent set smaller than the rank");
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Subset> Semimatroid::circuits() const {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    Subset x = members_[i];
    if (ranks_[i] >= x.size()) continue;
    bool minimal = true;
    for (int e : x.elements()) {
      Subset y = x.without(e);
      if (rank_of(y) < y.size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

ElementClass Semimatroid::classify(int e) const {
  if (e < 0 || e >= size()) throw InputError("element position out of range");
  auto it = index_.find(Subset::single(e).bits);
  if (it == index_.end()) return ElementClass::NonCentral;
  if (ranks_[static_cast<std::size_t>(it->second)] == 0) return ElementClass::Loop;
  // e is an isthmus iff no full-rank central set avoids it.
  int best = -1;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!members_[i].contains(e)) best = std::max(best, ranks_[i]);
  return best < rank_ ? ElementClass::Isthmus : ElementClass::Ordinary;
}

bool Semimatroid::is_cyclic_flat(Subset t) const {
  int rt = rank_of(t);
  if (closure(t) != t) return false;
  for (int e : t.elements())
    if (rank_of(t.without(e)) < rt) return false;  // isthmus of the restriction
  return true;
}

RawSemimatroid Semimatroid::raw() const {
  return {ground_.labels(), members_, ranks_};
}

Semimatroid Semimatroid::reordered(const std::vector<std::string>& new_order) const {
  GroundSet next(new_order);
  if (next.size() != size())
    throw InputError("reorder must use exactly the existing labels");
  std::vector<int> map_old_to_new(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i)
    map_old_to_new[static_cast<std::size_t>(i)] = next.position(ground_.label(i));

  std::vector<Subset> members;
  members.reserve(members_.size());
  for (Subset m : members_) {
    Subset moved;
    for (int e : m.elements()) moved = moved.with(map_old_to_new[static_cast<std::size_t>(e)]);
    members.push_back(moved);
  }
  return trusted(std::move(next), std::move(members), ranks_, /*presorted=*/false);
}

StructureKey Semimatroid::structure_key() const {
  StructureKey k;
  k.n = static_cast<std::uint32_t>(size());
  k.entries.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i)
    k.entries.emplace_back(members_[i].bits, ranks_[i]);
  return k;
}

}  // namespace semitutte
