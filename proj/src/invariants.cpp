#include "invariants.hpp"

#include <algorithm>
#include <unordered_map>

namespace semitutte {

namespace {

const VarId kLambda = VarId::lambda();
const VarId kX = VarId::plain("x");

SparsePoly lam(int exp) { return SparsePoly::var(kLambda, exp); }

Monomial xvars_monomial(const Semimatroid& sm, Subset a) {
  Monomial m;
  for (int e : a.elements()) m = m.times(Monomial::var(VarId::x(sm.ground().label(e)), 1));
  return m;
}

// Cached small powers of a fixed base polynomial.
struct PowerTable {
  SparsePoly base;
  std::vector<SparsePoly> cache;

  explicit PowerTable(SparsePoly b) : base(std::move(b)) { cache.push_back(SparsePoly::one()); }
  const SparsePoly& operator[](int k) {
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(k)];
  }
};

SparsePoly binom(const VarId& v, int shift) {  // v + shift
  SparsePoly p = SparsePoly::var(v);
  p += SparsePoly::constant(shift);
  return p;
}

// ---- subset-sum routes ------------------------------------------------

SparsePoly sum_multivariate(const Semimatroid& sm) {
  SparsePoly out;
  for (int i = 0; i < sm.central_count(); ++i) {
    Monomial m = Monomial::var(kLambda, -sm.rank_at(i)).times(xvars_monomial(sm, sm.central_sets()[i]));
    out.add_term(1, m);
  }
  return out;
}

SparsePoly sum_subset_corank(const Semimatroid& sm) {
  SparsePoly out;
  int r = sm.rank();
  for (int i = 0; i < sm.central_count(); ++i) {
    Monomial m = Monomial::var(kLambda, r - sm.rank_at(i)).times(xvars_monomial(sm, sm.central_sets()[i]));
    out.add_term(1, m);
  }
  return out;
}

SparsePoly sum_dichromatic(const Semimatroid& sm) {
  SparsePoly out;
  for (int i = 0; i < sm.central_count(); ++i) {
    Monomial m = Monomial::var(kLambda, -sm.rank_at(i))
                     .times(Monomial::var(kX, sm.central_sets()[i].size()));
    out.add_term(1, m);
  }
  return out;
}

SparsePoly sum_size_corank(const Semimatroid& sm) {
  SparsePoly out;
  int r = sm.rank();
  for (int i = 0; i < sm.central_count(); ++i) {
    Monomial m = Monomial::var(kLambda, r - sm.rank_at(i))
                     .times(Monomial::var(kX, sm.central_sets()[i].size()));
    out.add_term(1, m);
  }
  return out;
}

SparsePoly sum_rank_generating(const Semimatroid& sm) {
  SparsePoly out;
  int r = sm.rank();
  for (int i = 0; i < sm.central_count(); ++i) {
    Monomial m = Monomial::var(kLambda, r - sm.rank_at(i))
                     .times(Monomial::var(kX, sm.central_sets()[i].size() - sm.rank_at(i)));
    out.add_term(1, m);
  }
  return out;
}

SparsePoly sum_tutte(const Semimatroid& sm) {
  PowerTable lm1(binom(kLambda, -1)), xm1(binom(kX, -1));
  SparsePoly out;
  int r = sm.rank();
  for (int i = 0; i < sm.central_count(); ++i)
    out += lm1[r - sm.rank_at(i)] * xm1[sm.central_sets()[i].size() - sm.rank_at(i)];
  return out;
}

SparsePoly sum_characteristic(const Semimatroid& sm) {
  SparsePoly out;
  int r = sm.rank();
  for (int i = 0; i < sm.central_count(); ++i) {
    int sign = sm.central_sets()[i].size() % 2 == 0 ? 1 : -1;
    out.add_term(sign, Monomial::var(kLambda, r - sm.rank_at(i)));
  }
  return out;
}

// ---- deletion-contraction ---------------------------------------------

struct DcRules {
  std::function<SparsePoly(const std::string&)> loop_factor;
  std::function<SparsePoly(const std::string&)> isthmus_factor;
  std::function<SparsePoly(const std::string&)> contract_weight;
};

DcRules dc_rules(Invariant w) {
  auto konst = [](SparsePoly p) {
    return [p](const std::string&) { return p; };
  };
  switch (w) {
    case Invariant::MultivariateTutte:
      return {[](const std::string& l) { return binom(VarId::x(l), 1); },
              [](const std::string& l) {
                SparsePoly p = SparsePoly::term(1, Monomial::var(kLambda, -1).times(Monomial::var(VarId::x(l), 1)));
                return p + SparsePoly::one();
              },
              [](const std::string& l) {
                return SparsePoly::term(1, Monomial::var(kLambda, -1).times(Monomial::var(VarId::x(l), 1)));
              }};
    case Invariant::SubsetCorank:
      return {[](const std::string& l) { return binom(VarId::x(l), 1); },
              [](const std::string& l) { return SparsePoly::var(VarId::x(l)) + SparsePoly::var(kLambda); },
              [](const std::string& l) { return SparsePoly::var(VarId::x(l)); }};
    case Invariant::Dichromatic:
      return {konst(binom(kX, 1)),
              konst(SparsePoly::term(1, Monomial::var(kLambda, -1).times(Monomial::var(kX, 1))) + SparsePoly::one()),
              konst(SparsePoly::term(1, Monomial::var(kLambda, -1).times(Monomial::var(kX, 1))))};
    case Invariant::SizeCorank:
      return {konst(binom(kX, 1)), konst(SparsePoly::var(kX) + SparsePoly::var(kLambda)),
              konst(SparsePoly::var(kX))};
    case Invariant::Tutte:
      return {konst(SparsePoly::var(kX)), konst(SparsePoly::var(kLambda)), konst(SparsePoly::one())};
    case Invariant::RankGenerating:
      return {konst(binom(kX, 1)), konst(binom(kLambda, 1)), konst(SparsePoly::one())};
    case Invariant::Characteristic:
      break;
  }
  throw InputError("no deletion-contraction rules for this invariant");
}

using DcMemo = std::unordered_map<StructureKey, SparsePoly, StructureKeyHash>;

SparsePoly dc_rec(const Semimatroid& m, const DcRules& rules, DcMemo* memo) {
  if (m.size() == 0) return SparsePoly::one();
  StructureKey key;
  if (memo) {
    key = m.structure_key();
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  // Pivot: the order-smallest surviving element, always position 0.
  Subset se = Subset::single(0);
  const std::string& label = m.ground().label(0);
  SparsePoly res;
  if (!m.is_central(se)) {
    res = dc_rec(deletion(m, se), rules, memo);
  } else if (m.rank_of(se) == 0) {
    res = rules.loop_factor(label) * dc_rec(deletion(m, se), rules, memo);
  } else {
    Semimatroid del = deletion(m, se);
    if (del.rank() < m.rank()) {
      res = rules.isthmus_factor(label) * dc_rec(del, rules, memo);
    } else {
      res = dc_rec(del, rules, memo) +
            rules.contract_weight(label) * dc_rec(contraction(m, se), rules, memo);
    }
  }
  if (memo) memo->emplace(std::move(key), res);
  return res;
}

SparsePoly dc_eval(const Semimatroid& sm, Invariant w, bool memoize) {
  DcRules rules = dc_rules(w);
  DcMemo memo;
  return dc_rec(sm, rules, memoize ? &memo : nullptr);
}

// ---- activities route -------------------------------------------------

SparsePoly activities_eval(const Semimatroid& sm, Invariant w) {
  SparsePoly out;
  int r = sm.rank();
  PowerTable lp1(binom(kLambda, 1)), xp1(binom(kX, 1));
  PowerTable lpx(SparsePoly::var(kLambda) + SparsePoly::var(kX));
  for (Subset b : sm.bases()) {
    ActivityRecord rec = activities(sm, b);
    int ni = rec.internally_active.size(), ne = rec.externally_active.size();
    SparsePoly term;
    switch (w) {
      case Invariant::MultivariateTutte:
      case Invariant::SubsetCorank: {
        term = SparsePoly::term(1, xvars_monomial(sm, b - rec.internally_active));
        for (int e : rec.externally_active.elements())
          term = term * binom(VarId::x(sm.ground().label(e)), 1);
        for (int e : rec.internally_active.elements())
          term = term * (SparsePoly::var(kLambda) + SparsePoly::var(VarId::x(sm.ground().label(e))));
        break;
      }
      case Invariant::Dichromatic:
      case Invariant::SizeCorank:
        term = SparsePoly::term(1, Monomial::var(kX, r - ni)) * lpx[ni] * xp1[ne];
        break;
      case Invariant::Tutte:
        term = SparsePoly::term(1, Monomial::var(kLambda, ni).times(Monomial::var(kX, ne)));
        break;
      case Invariant::RankGenerating:
        term = lp1[ni] * xp1[ne];
        break;
      case Invariant::Characteristic:
        throw InputError("no activities route for the characteristic polynomial");
    }
    out += term;
  }
  if (w == Invariant::MultivariateTutte || w == Invariant::Dichromatic)
    out.scale(1, Monomial::var(kLambda, -r));
  return out;
}

// ---- via-relation routes ----------------------------------------------

SparsePoly tutte_via_corank(const Semimatroid& sm) {
  // T = (l-1)^r Z((l-1)(x-1), x-1); realized on the corank polynomial so the
  // Laurent part clears exactly: substitute l -> (l-1)*xi, x -> xi into
  // l^r Z, shift by xi^{-r}, then xi -> x-1.
  SparsePoly sc = sum_size_corank(sm);
  std::map<VarId, SparsePoly> sigma;
  sigma[kLambda] = binom(kLambda, -1) * SparsePoly::var(VarId::xi());
  sigma[kX] = SparsePoly::var(VarId::xi());
  SparsePoly shifted = substitute(sc, sigma);
  shifted.scale(1, Monomial::var(VarId::xi(), -sm.rank()));
  std::map<VarId, SparsePoly> back;
  back[VarId::xi()] = binom(kX, -1);
  return substitute(shifted, back);
}

}  // namespace

Route route_from_name(const std::string& name) {
  if (name == "sum") return Route::SubsetSum;
  if (name == "dc") return Route::DeletionContraction;
  if (name == "activities") return Route::Activities;
  if (name == "viaz") return Route::ViaZ;
  throw InputError("unknown route '" + name + "'");
}

Invariant invariant_from_name(const std::string& n) {
  if (n == "z") return Invariant::MultivariateTutte;
  if (n == "dichromatic") return Invariant::Dichromatic;
  if (n == "tutte") return Invariant::Tutte;
  if (n == "characteristic") return Invariant::Characteristic;
  if (n == "subset-corank") return Invariant::SubsetCorank;
  if (n == "size-corank") return Invariant::SizeCorank;
  if (n == "rank-gen") return Invariant::RankGenerating;
  throw InputError("unknown polynomial '" + n + "'");
}

const char* invariant_name(Invariant w) {
  switch (w) {
    case Invariant::MultivariateTutte: return "z";
    case Invariant::Dichromatic: return "dichromatic";
    case Invariant::Tutte: return "tutte";
    case Invariant::Characteristic: return "characteristic";
    case Invariant::SubsetCorank: return "subset-corank";
    case Invariant::SizeCorank: return "size-corank";
    case Invariant::RankGenerating: return "rank-gen";
  }
  return "?";
}

const char* route_name(Route r) {
  switch (r) {
    case Route::SubsetSum: return "sum";
    case Route::DeletionContraction: return "dc";
    case Route::Activities: return "activities";
    case Route::ViaZ: return "viaz";
  }
  return "?";
}

std::vector<Route> routes_for(Invariant w) {
  switch (w) {
    case Invariant::Tutte:
    case Invariant::SubsetCorank:
    case Invariant::SizeCorank:
      return {Route::SubsetSum, Route::DeletionContraction, Route::Activities, Route::ViaZ};
    case Invariant::Characteristic:
      return {Route::SubsetSum};
    default:
      return {Route::SubsetSum, Route::DeletionContraction, Route::Activities};
  }
}

SparsePoly multivariate_tutte(const Semimatroid& sm, Route route) {
  switch (route) {
    case Route::SubsetSum: return sum_multivariate(sm);
    case Route::DeletionContraction: return dc_eval(sm, Invariant::MultivariateTutte, true);
    case Route::Activities: return activities_eval(sm, Invariant::MultivariateTutte);
    case Route::ViaZ: break;
  }
  throw InputError("route not available for z");
}

SparsePoly dichromatic(const Semimatroid& sm, Route route) {
  switch (route) {
    case Route::SubsetSum: return sum_dichromatic(sm);
    case Route::DeletionContraction: return dc_eval(sm, Invariant::Dichromatic, true);
    case Route::Activities: return activities_eval(sm, Invariant::Dichromatic);
    case Route::ViaZ: break;
  }
  throw InputError("route not available for dichromatic");
}

SparsePoly tutte(const Semimatroid& sm, Route route) {
  switch (route) {
    case Route::SubsetSum: return sum_tutte(sm);
    case Route::DeletionContraction: return dc_eval(sm, Invariant::Tutte, true);
    case Route::Activities: return activities_eval(sm, Invariant::Tutte);
    case Route::ViaZ: return tutte_via_corank(sm);
  }
  throw InputError("route not available for tutte");
}

SparsePoly characteristic(const Semimatroid& sm) {
  SparsePoly direct = sum_characteristic(sm);

  // (-1)^r T(1-l, 0)
  std::map<VarId, SparsePoly> sigma;
  sigma[kLambda] = SparsePoly::one() - SparsePoly::var(kLambda);
  sigma[kX] = SparsePoly::zero();
  SparsePoly via_tutte = substitute(sum_tutte(sm), sigma);
  if (sm.rank() % 2 == 1) via_tutte = -via_tutte;
  if (!(via_tutte == direct))
    throw StructuralError("characteristic cross-check against tutte failed");

  // l^r Z(l, -1)
  std::map<VarId, SparsePoly> at_minus_one;
  at_minus_one[kX] = SparsePoly::constant(-1);
  SparsePoly via_z = substitute(sum_dichromatic(sm), at_minus_one);
  via_z.scale(1, Monomial::var(kLambda, sm.rank()));
  if (!(via_z == direct))
    throw StructuralError("characteristic cross-check against the dichromatic polynomial failed");

  return direct;
}

SparsePoly subset_corank(const Semimatroid& sm, Route route) {
  switch (route) {
    case Route::SubsetSum: return sum_subset_corank(sm);
    case Route::DeletionContraction: return dc_eval(sm, Invariant::SubsetCorank, true);
    case Route::Activities: return activities_eval(sm, Invariant::SubsetCorank);
    case Route::ViaZ: {
      SparsePoly z = sum_multivariate(sm);
      z.scale(1, Monomial::var(kLambda, sm.rank()));
      return z;
    }
  }
  throw InputError("route not available for subset-corank");
}

SparsePoly size_corank(const Semimatroid& sm, Route route) {
  switch (route) {
    case Route::SubsetSum: return sum_size_corank(sm);
    case Route::DeletionContraction: return dc_eval(sm, Invariant::SizeCorank, true);
    case Route::Activities: return activities_eval(sm, Invariant::SizeCorank);
    case Route::ViaZ: {
      SparsePoly z = sum_dichromatic(sm);
      z.scale(1, Monomial::var(kLambda, sm.rank()));
      return z;
    }
  }
  throw InputError("route not available for size-corank");
}

SparsePoly rank_generating(const Semimatroid& sm, Route route) {
  switch (route) {
    case Route::SubsetSum: return sum_rank_generating(sm);
    case Route::DeletionContraction: return dc_eval(sm, Invariant::RankGenerating, true);
    case Route::Activities: return activities_eval(sm, Invariant::RankGenerating);
    case Route::ViaZ: break;
  }
  throw InputError("route not available for rank-gen");
}

SparsePoly evaluate(const Semimatroid& sm, Invariant w, Route route) {
  switch (w) {
    case Invariant::MultivariateTutte: return multivariate_tutte(sm, route);
    case Invariant::Dichromatic: return dichromatic(sm, route);
    case Invariant::Tutte: return tutte(sm, route);
    case Invariant::Characteristic: return characteristic(sm);
    case Invariant::SubsetCorank: return subset_corank(sm, route);
    case Invariant::SizeCorank: return size_corank(sm, route);
    case Invariant::RankGenerating: return rank_generating(sm, route);
  }
  throw InputError("unknown invariant");
}

SparsePoly dc_without_memo(const Semimatroid& sm, Invariant w) { return dc_eval(sm, w, false); }

// ---- activities -------------------------------------------------------

namespace {

void require_basis(const Semimatroid& sm, Subset b) {
  if (!sm.is_central(b) || sm.rank_of(b) != b.size() || b.size() != sm.rank())
    throw DomainError("not a basis");
  // maximality follows from |B| = r
}

}  // namespace

Subset fundamental_circuit(const Semimatroid& sm, Subset basis, int e) {
  require_basis(sm, basis);
  if (basis.contains(e)) throw DomainError("element lies in the basis");
  Subset be = basis.with(e);
  if (!sm.is_central(be))
    throw DomainError("basis plus element is not central; no fundamental circuit");
  int r = sm.rank_of(be);
  Subset circuit;
  for (int x : be.elements())
    if (sm.rank_of(be.without(x)) == r) circuit = circuit.with(x);
  return circuit;
}

Subset fundamental_cocircuit(const Semimatroid& sm, Subset basis, int e) {
  require_basis(sm, basis);
  if (!basis.contains(e)) throw DomainError("element must lie in the basis");
  Subset reduced = basis.without(e);
  Subset out = Subset::single(e);
  for (int f = 0; f < sm.size(); ++f) {
    if (basis.contains(f)) continue;
    Subset cand = reduced.with(f);
    if (sm.is_central(cand) && sm.rank_of(cand) == sm.rank()) out = out.with(f);
  }
  return out;
}

ActivityRecord activities(const Semimatroid& sm, Subset basis) {
  require_basis(sm, basis);
  ActivityRecord rec;
  rec.basis = basis;
  for (int e = 0; e < sm.size(); ++e) {
    if (basis.contains(e)) {
      Subset cc = fundamental_cocircuit(sm, basis, e);
      rec.fundamental_cocircuits.emplace_back(e, cc);
      if (cc.elements().front() == e) rec.internally_active = rec.internally_active.with(e);
    } else if (sm.is_central(basis.with(e))) {
      Subset c = fundamental_circuit(sm, basis, e);
      rec.fundamental_circuits.emplace_back(e, c);
      if (c.elements().front() == e) rec.externally_active = rec.externally_active.with(e);
    }
  }
  return rec;
}

std::vector<DecompositionInterval> interval_decomposition(const Semimatroid& sm) {
  std::vector<DecompositionInterval> intervals;
  std::unordered_map<std::uint64_t, std::size_t> owner;
  std::size_t covered = 0;
  for (Subset b : sm.bases()) {
    ActivityRecord rec = activities(sm, b);
    DecompositionInterval iv{b, b - rec.internally_active, b | rec.externally_active};
    Subset span = iv.upper - iv.lower;
    // Walk every member lower u S, S a subset of upper-lower.
    std::uint64_t d = span.bits, s = 0;
    while (true) {
      Subset member(iv.lower.bits | s);
      if (!sm.is_central(member))
        throw StructuralError("interval member is not central");
      auto [it, fresh] = owner.emplace(member.bits, intervals.size());
      (void)it;
      if (!fresh) throw StructuralError("central set covered by two basis intervals");
      int dropped = (b - member).size();
      if (sm.rank() - sm.rank_of(member) != dropped)
        throw StructuralError("interval corank law failed");
      ++covered;
      if (s == d) break;
      s = (s - d) & d;  // next submask of d in increasing binary order
    }
    intervals.push_back(iv);
  }
  if (covered != static_cast<std::size_t>(sm.central_count()))
    throw StructuralError("basis intervals miss part of the central family");
  return intervals;
}

}  // namespace semitutte
