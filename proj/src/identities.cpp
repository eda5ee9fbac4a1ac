#include "identities.hpp"

#include <functional>
#include <map>
#include <utility>

#include "errors.hpp"
#include "minors.hpp"

namespace semitutte {

namespace {

const VarId kLambda = VarId::lambda();
const VarId kXi = VarId::xi();
const VarId kX = VarId::plain("x");
const VarId kY = VarId::plain("y");

using Sub = std::map<VarId, SparsePoly>;

SparsePoly vp(const VarId& v) { return SparsePoly::var(v, 1); }

SparsePoly lambda_pow(int e) {
  return SparsePoly::term(1, Monomial::var(kLambda, e));
}

// Shared per-instance state: the central list, flat index sets, and lazily
// computed minor invariants. Restriction/contraction polynomials are reused
// across the checks that need the same factor, but each underlying
// deletion-contraction evaluation still owns its private memo table.
struct Lab {
  const Semimatroid& sm;
  std::vector<Subset> centrals;
  std::vector<int> flat_idx;
  std::vector<int> cyclic_flat_idx;
  int rank;

  std::map<std::pair<int, int>, SparsePoly> restr_cache;
  std::map<std::pair<int, int>, SparsePoly> contr_cache;

  explicit Lab(const Semimatroid& s) : sm(s), rank(s.rank()) {
    centrals = s.central_sets();
    for (int i = 0; i < static_cast<int>(centrals.size()); ++i) {
      Subset t = centrals[static_cast<std::size_t>(i)];
      if (s.closure(t) == t) {
        flat_idx.push_back(i);
        if (s.is_cyclic_flat(t)) cyclic_flat_idx.push_back(i);
      }
    }
  }

  static Route minor_route(Invariant w) {
    return w == Invariant::Characteristic ? Route::SubsetSum
                                          : Route::DeletionContraction;
  }

  const SparsePoly& restr(Invariant w, int i) {
    auto key = std::make_pair(static_cast<int>(w), i);
    auto it = restr_cache.find(key);
    if (it != restr_cache.end()) return it->second;
    Semimatroid m = restriction(sm, centrals[static_cast<std::size_t>(i)]);
    return restr_cache.emplace(key, evaluate(m, w, minor_route(w))).first->second;
  }

  const SparsePoly& contr(Invariant w, int i) {
    auto key = std::make_pair(static_cast<int>(w), i);
    auto it = contr_cache.find(key);
    if (it != contr_cache.end()) return it->second;
    Semimatroid m = contraction(sm, centrals[static_cast<std::size_t>(i)]);
    return contr_cache.emplace(key, evaluate(m, w, minor_route(w))).first->second;
  }
};

IdentityReport make_report(std::string id, SparsePoly lhs, SparsePoly rhs) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.diff = lhs - rhs;
  rep.pass = rep.diff.is_zero();
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  return rep;
}

// Substitution maps over the instance's own labels.
Sub map_each_x(const Semimatroid& sm,
               const std::function<SparsePoly(const std::string&)>& image) {
  Sub s;
  for (const auto& l : sm.ground().labels()) s[VarId::x(l)] = image(l);
  return s;
}

Monomial y_monomial(const Semimatroid& sm, Subset t) {
  Monomial m = Monomial::one();
  for (int i : t.elements())
    m = m.times(Monomial::var(VarId::y(sm.ground().label(i)), 1));
  return m;
}

SparsePoly x_plus_one_product(const Semimatroid& sm, Subset t) {
  SparsePoly p = SparsePoly::one();
  for (int i : t.elements())
    p = p * (vp(VarId::x(sm.ground().label(i))) + SparsePoly::one());
  return p;
}

int sign_pm(int e) { return (e % 2 == 0) ? 1 : -1; }

// --- multivariate Tutte convolutions -------------------------------------

IdentityReport id_conv_mv(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly z = multivariate_tutte(sm, Route::SubsetSum);

  Sub lhs_map = map_each_x(sm, [](const std::string& l) {
    return SparsePoly::term(1, Monomial::var(VarId::x(l), 1)
                                   .times(Monomial::var(VarId::y(l), 1)));
  });
  lhs_map[kLambda] = SparsePoly::term(1, Monomial::var(kLambda, 1).times(Monomial::var(kXi, 1)));
  SparsePoly lhs = substitute(z, lhs_map);

  Sub neg_x = map_each_x(sm, [](const std::string& l) { return -vp(VarId::x(l)); });
  Sub xi_y = map_each_x(sm, [](const std::string& l) { return vp(VarId::y(l)); });
  xi_y[kLambda] = vp(kXi);

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    SparsePoly term =
        substitute(lab.restr(Invariant::MultivariateTutte, i), neg_x) *
        substitute(lab.contr(Invariant::MultivariateTutte, i), xi_y);
    term.scale(sign_pm(t.size()),
               Monomial::var(kXi, -rt).times(y_monomial(sm, t)));
    rhs += term;
  }
  return make_report("conv-mv", std::move(lhs), std::move(rhs));
}

IdentityReport id_conv_mv_special(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly z = multivariate_tutte(sm, Route::SubsetSum);

  Sub lhs_map = map_each_x(sm, [](const std::string& l) { return vp(VarId::y(l)); });
  SparsePoly lhs = substitute(z, lhs_map);

  Sub x_m1 = map_each_x(sm, [](const std::string&) { return -SparsePoly::one(); });
  Sub one_y = map_each_x(sm, [](const std::string& l) { return vp(VarId::y(l)); });
  one_y[kLambda] = SparsePoly::one();

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    SparsePoly term =
        substitute(lab.restr(Invariant::MultivariateTutte, i), x_m1) *
        substitute(lab.contr(Invariant::MultivariateTutte, i), one_y);
    term.scale(sign_pm(t.size()), y_monomial(sm, t));
    rhs += term;
  }
  return make_report("conv-mv-special", std::move(lhs), std::move(rhs));
}

void scalar_conv_pair(Lab& lab, bool special, SparsePoly& lhs, SparsePoly& rhs) {
  const Semimatroid& sm = lab.sm;
  SparsePoly z = dichromatic(sm, Route::SubsetSum);

  Sub lhs_map;
  if (special) {
    lhs_map[kX] = vp(kY);
  } else {
    lhs_map[kLambda] = SparsePoly::term(1, Monomial::var(kLambda, 1).times(Monomial::var(kXi, 1)));
    lhs_map[kX] = SparsePoly::term(1, Monomial::var(kX, 1).times(Monomial::var(kY, 1)));
  }
  lhs = substitute(z, lhs_map);

  Sub left_map;
  left_map[kX] = special ? -SparsePoly::one() : -vp(kX);
  Sub right_map;
  right_map[kLambda] = special ? SparsePoly::one() : vp(kXi);
  right_map[kX] = vp(kY);

  rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    SparsePoly term = substitute(lab.restr(Invariant::Dichromatic, i), left_map) *
                      substitute(lab.contr(Invariant::Dichromatic, i), right_map);
    Monomial pre = Monomial::var(kY, t.size());
    if (!special) pre = pre.times(Monomial::var(kXi, -rt));
    term.scale(sign_pm(t.size()), pre);
    rhs += term;
  }
}

IdentityReport id_conv_scalar(Lab& lab) {
  SparsePoly lhs1, rhs1, lhs2, rhs2;
  scalar_conv_pair(lab, false, lhs1, rhs1);
  scalar_conv_pair(lab, true, lhs2, rhs2);
  if (lhs1 - rhs1 == SparsePoly::zero() && !(lhs2 - rhs2 == SparsePoly::zero()))
    return make_report("conv-scalar", std::move(lhs2), std::move(rhs2));
  return make_report("conv-scalar", std::move(lhs1), std::move(rhs1));
}

// --- characteristic convolution ------------------------------------------

IdentityReport id_char_conv(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly chi = characteristic(sm);

  Sub lhs_map;
  lhs_map[kLambda] = SparsePoly::term(1, Monomial::var(kLambda, 1).times(Monomial::var(kXi, 1)));
  SparsePoly lhs = substitute(chi, lhs_map);

  Sub to_xi;
  to_xi[kLambda] = vp(kXi);

  auto partial = [&](const std::vector<int>* only) {
    SparsePoly acc = SparsePoly::zero();
    auto add = [&](int i) {
      int rt = sm.rank_at(i);
      SparsePoly term = lab.restr(Invariant::Characteristic, i) *
                        substitute(lab.contr(Invariant::Characteristic, i), to_xi);
      term.scale(1, Monomial::var(kLambda, lab.rank - rt));
      acc += term;
    };
    if (only) {
      for (int i : *only) add(i);
    } else {
      for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) add(i);
    }
    return acc;
  };

  SparsePoly rhs_full = partial(nullptr);
  SparsePoly rhs_flats = partial(&lab.flat_idx);
  if ((lhs - rhs_full).is_zero() && !(lhs - rhs_flats).is_zero())
    return make_report("char-conv", std::move(lhs), std::move(rhs_flats));
  return make_report("char-conv", std::move(lhs), std::move(rhs_full));
}

// --- weighted sums over central sets and flats ----------------------------

IdentityReport id_weighted_mv(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly z = multivariate_tutte(sm, Route::SubsetSum);

  Sub lhs_map = map_each_x(sm, [](const std::string& l) {
    return SparsePoly::term(1, Monomial::var(VarId::x(l), 1)
                                   .times(Monomial::var(VarId::y(l), 1)));
  });
  lhs_map[kLambda] = vp(kXi);
  SparsePoly lhs = substitute(z, lhs_map);

  Sub xi_neg_y = map_each_x(sm, [](const std::string& l) { return -vp(VarId::y(l)); });
  xi_neg_y[kLambda] = vp(kXi);

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    SparsePoly term = x_plus_one_product(sm, t) *
                      substitute(lab.contr(Invariant::MultivariateTutte, i), xi_neg_y);
    term.scale(1, Monomial::var(kXi, -rt).times(y_monomial(sm, t)));
    rhs += term;
  }
  return make_report("weighted-mv", std::move(lhs), std::move(rhs));
}

IdentityReport id_weighted_flats(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  Sub to_xi;
  to_xi[kLambda] = vp(kXi);

  // Multivariate form.
  SparsePoly lhs_mv = substitute(multivariate_tutte(sm, Route::SubsetSum), to_xi);
  SparsePoly rhs_mv = SparsePoly::zero();
  for (int i : lab.flat_idx) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    SparsePoly term = x_plus_one_product(sm, t) *
                      substitute(lab.contr(Invariant::Characteristic, i), to_xi);
    rhs_mv += term;
  }
  rhs_mv.scale(1, Monomial::var(kXi, -lab.rank));

  // Scalar form.
  SparsePoly lhs_sc = substitute(dichromatic(sm, Route::SubsetSum), to_xi);
  SparsePoly rhs_sc = SparsePoly::zero();
  for (int i : lab.flat_idx) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    SparsePoly term = substitute(lab.contr(Invariant::Characteristic, i), to_xi);
    term = term * pow(vp(kX) + SparsePoly::one(), t.size());
    rhs_sc += term;
  }
  rhs_sc.scale(1, Monomial::var(kXi, -lab.rank));

  if ((lhs_mv - rhs_mv).is_zero() && !(lhs_sc - rhs_sc).is_zero())
    return make_report("weighted-flats", std::move(lhs_sc), std::move(rhs_sc));
  return make_report("weighted-flats", std::move(lhs_mv), std::move(rhs_mv));
}

// --- subset-corank family -------------------------------------------------

IdentityReport id_sc_conv(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly sc = subset_corank(sm, Route::SubsetSum);

  Sub lhs_map = map_each_x(sm, [](const std::string& l) {
    return SparsePoly::term(1, Monomial::var(VarId::x(l), 1)
                                   .times(Monomial::var(VarId::y(l), 1)));
  });
  lhs_map[kLambda] = SparsePoly::term(1, Monomial::var(kLambda, 1).times(Monomial::var(kXi, 1)));
  SparsePoly lhs = substitute(sc, lhs_map);

  Sub neg_x = map_each_x(sm, [](const std::string& l) { return -vp(VarId::x(l)); });
  Sub xi_y = map_each_x(sm, [](const std::string& l) { return vp(VarId::y(l)); });
  xi_y[kLambda] = vp(kXi);

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    SparsePoly term = substitute(lab.restr(Invariant::SubsetCorank, i), neg_x) *
                      substitute(lab.contr(Invariant::SubsetCorank, i), xi_y);
    term.scale(sign_pm(t.size()),
               Monomial::var(kLambda, lab.rank - rt).times(y_monomial(sm, t)));
    rhs += term;
  }
  return make_report("sc-conv", std::move(lhs), std::move(rhs));
}

IdentityReport id_sc_conv_special(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly sc = subset_corank(sm, Route::SubsetSum);

  Sub lhs_map = map_each_x(sm, [](const std::string& l) { return vp(VarId::y(l)); });
  SparsePoly lhs = substitute(sc, lhs_map);

  Sub x_m1 = map_each_x(sm, [](const std::string&) { return -SparsePoly::one(); });
  Sub one_y = map_each_x(sm, [](const std::string& l) { return vp(VarId::y(l)); });
  one_y[kLambda] = SparsePoly::one();

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    SparsePoly term = substitute(lab.restr(Invariant::SubsetCorank, i), x_m1) *
                      substitute(lab.contr(Invariant::SubsetCorank, i), one_y);
    term.scale(sign_pm(t.size()),
               Monomial::var(kLambda, lab.rank - rt).times(y_monomial(sm, t)));
    rhs += term;
  }
  return make_report("sc-conv-special", std::move(lhs), std::move(rhs));
}

IdentityReport id_sc_weighted(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly sc = subset_corank(sm, Route::SubsetSum);

  Sub lhs_map = map_each_x(sm, [](const std::string& l) {
    return SparsePoly::term(1, Monomial::var(VarId::x(l), 1)
                                   .times(Monomial::var(VarId::y(l), 1)));
  });
  lhs_map[kLambda] = vp(kXi);
  SparsePoly lhs = substitute(sc, lhs_map);

  Sub xi_neg_y = map_each_x(sm, [](const std::string& l) { return -vp(VarId::y(l)); });
  xi_neg_y[kLambda] = vp(kXi);

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    SparsePoly term = x_plus_one_product(sm, t) *
                      substitute(lab.contr(Invariant::SubsetCorank, i), xi_neg_y);
    term.scale(1, y_monomial(sm, t));
    rhs += term;
  }
  return make_report("sc-weighted", std::move(lhs), std::move(rhs));
}

IdentityReport id_sc_weighted_flats(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  Sub to_xi;
  to_xi[kLambda] = vp(kXi);

  SparsePoly lhs = substitute(subset_corank(sm, Route::SubsetSum), to_xi);
  SparsePoly rhs = SparsePoly::zero();
  for (int i : lab.flat_idx) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    rhs += x_plus_one_product(sm, t) *
           substitute(lab.contr(Invariant::Characteristic, i), to_xi);
  }
  return make_report("sc-weighted-flats", std::move(lhs), std::move(rhs));
}

// --- rank-generating family ----------------------------------------------

IdentityReport id_rg_conv(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly rg = rank_generating(sm, Route::SubsetSum);

  Sub lhs_map;
  lhs_map[kLambda] = SparsePoly::term(1, Monomial::var(kLambda, 1).times(Monomial::var(kXi, 1)));
  lhs_map[kX] = SparsePoly::term(1, Monomial::var(kX, 1).times(Monomial::var(kY, 1)));
  SparsePoly lhs = substitute(rg, lhs_map);

  Sub neg_both;
  neg_both[kLambda] = -vp(kLambda);
  neg_both[kX] = -vp(kX);
  Sub xi_y;
  xi_y[kLambda] = vp(kXi);
  xi_y[kX] = vp(kY);

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    int nullity = t.size() - rt;
    SparsePoly term = substitute(lab.restr(Invariant::RankGenerating, i), neg_both) *
                      substitute(lab.contr(Invariant::RankGenerating, i), xi_y);
    term.scale(sign_pm(nullity),
               Monomial::var(kLambda, lab.rank - rt).times(Monomial::var(kY, nullity)));
    rhs += term;
  }
  return make_report("rg-conv", std::move(lhs), std::move(rhs));
}

IdentityReport id_rg_conv_special(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  SparsePoly rg = rank_generating(sm, Route::SubsetSum);

  Sub lhs_map;
  lhs_map[kX] = vp(kY);
  SparsePoly lhs = substitute(rg, lhs_map);

  Sub x_m1;
  x_m1[kX] = -SparsePoly::one();
  Sub m1_y;
  m1_y[kLambda] = -SparsePoly::one();
  m1_y[kX] = vp(kY);

  SparsePoly rhs = SparsePoly::zero();
  for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) {
    Subset t = lab.centrals[static_cast<std::size_t>(i)];
    int rt = sm.rank_at(i);
    int nullity = t.size() - rt;
    SparsePoly term = substitute(lab.restr(Invariant::RankGenerating, i), x_m1) *
                      substitute(lab.contr(Invariant::RankGenerating, i), m1_y);
    term.scale(sign_pm(lab.rank - rt) * sign_pm(nullity),
               Monomial::var(kLambda, lab.rank - rt).times(Monomial::var(kY, nullity)));
    rhs += term;
  }
  return make_report("rg-conv-special", std::move(lhs), std::move(rhs));
}

SparsePoly rgpcf_sum(Lab& lab, const std::vector<int>* only) {
  Sub lam_m1;
  lam_m1[kLambda] = -SparsePoly::one();
  Sub xi_xm1;
  xi_xm1[kLambda] = vp(kXi);
  xi_xm1[kX] = -SparsePoly::one();

  SparsePoly acc = SparsePoly::zero();
  auto add = [&](int i) {
    acc += substitute(lab.restr(Invariant::RankGenerating, i), lam_m1) *
           substitute(lab.contr(Invariant::RankGenerating, i), xi_xm1);
  };
  if (only) {
    for (int i : *only) add(i);
  } else {
    for (int i = 0; i < static_cast<int>(lab.centrals.size()); ++i) add(i);
  }
  return acc;
}

IdentityReport id_rgpcf(Lab& lab, const char* id, const std::vector<int>* only) {
  Sub to_xi;
  to_xi[kLambda] = vp(kXi);
  SparsePoly lhs = substitute(rank_generating(lab.sm, Route::SubsetSum), to_xi);
  SparsePoly rhs = rgpcf_sum(lab, only);
  return make_report(id, std::move(lhs), std::move(rhs));
}

// --- specialization lattice cross-checks ----------------------------------

IdentityReport lat_dichromatic(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  Sub all_x = map_each_x(sm, [](const std::string&) { return vp(kX); });
  SparsePoly lhs = substitute(multivariate_tutte(sm, Route::SubsetSum), all_x);
  SparsePoly rhs = dichromatic(sm, Route::DeletionContraction);
  return make_report("lat-dichromatic", std::move(lhs), std::move(rhs));
}

IdentityReport lat_sc_mv(Lab& lab) {
  SparsePoly lhs = subset_corank(lab.sm, Route::DeletionContraction);
  SparsePoly rhs = subset_corank(lab.sm, Route::ViaZ);
  return make_report("lat-sc-mv", std::move(lhs), std::move(rhs));
}

IdentityReport lat_size_corank(Lab& lab) {
  const Semimatroid& sm = lab.sm;
  Sub all_x = map_each_x(sm, [](const std::string&) { return vp(kX); });
  SparsePoly lhs = substitute(subset_corank(sm, Route::SubsetSum), all_x);
  SparsePoly rhs = size_corank(sm, Route::DeletionContraction);
  return make_report("lat-size-corank", std::move(lhs), std::move(rhs));
}

IdentityReport lat_size_corank_rg(Lab& lab) {
  // x^r R(lambda/x, x), cleared through the auxiliary variable.
  SparsePoly rg = rank_generating(lab.sm, Route::SubsetSum);
  Sub split;
  split[kLambda] = SparsePoly::term(1, Monomial::var(kLambda, 1).times(Monomial::var(kXi, -1)));
  split[kX] = vp(kXi);
  SparsePoly staged = substitute(rg, split);
  staged.scale(1, Monomial::var(kXi, lab.rank));
  Sub back;
  back[kXi] = vp(kX);
  SparsePoly rhs = substitute(staged, back);
  SparsePoly lhs = size_corank(lab.sm, Route::SubsetSum);
  return make_report("lat-size-corank-rg", std::move(lhs), std::move(rhs));
}

IdentityReport lat_tutte_rg(Lab& lab) {
  SparsePoly rg = rank_generating(lab.sm, Route::SubsetSum);
  Sub shift;
  shift[kLambda] = vp(kLambda) - SparsePoly::one();
  shift[kX] = vp(kX) - SparsePoly::one();
  SparsePoly lhs = tutte(lab.sm, Route::SubsetSum);
  SparsePoly rhs = substitute(rg, shift);
  return make_report("lat-tutte-rg", std::move(lhs), std::move(rhs));
}

IdentityReport lat_tutte_z(Lab& lab) {
  SparsePoly lhs = tutte(lab.sm, Route::SubsetSum);
  SparsePoly rhs = tutte(lab.sm, Route::ViaZ);
  return make_report("lat-tutte-z", std::move(lhs), std::move(rhs));
}

IdentityReport lat_char_sc(Lab& lab) {
  Sub x_m1;
  x_m1[kX] = -SparsePoly::one();
  SparsePoly lhs = characteristic(lab.sm);
  SparsePoly rhs = substitute(size_corank(lab.sm, Route::SubsetSum), x_m1);
  return make_report("lat-char-sc", std::move(lhs), std::move(rhs));
}

IdentityReport lat_char_tutte(Lab& lab) {
  Sub sub;
  sub[kLambda] = SparsePoly::one() - vp(kLambda);
  sub[kX] = SparsePoly::zero();
  SparsePoly rhs = substitute(tutte(lab.sm, Route::DeletionContraction), sub);
  rhs.scale(sign_pm(lab.rank), Monomial::one());
  SparsePoly lhs = characteristic(lab.sm);
  return make_report("lat-char-tutte", std::move(lhs), std::move(rhs));
}

IdentityReport lat_char_rg(Lab& lab) {
  Sub sub;
  sub[kLambda] = -vp(kLambda);
  sub[kX] = -SparsePoly::one();
  SparsePoly rhs = substitute(rank_generating(lab.sm, Route::SubsetSum), sub);
  rhs.scale(sign_pm(lab.rank), Monomial::one());
  SparsePoly lhs = characteristic(lab.sm);
  return make_report("lat-char-rg", std::move(lhs), std::move(rhs));
}

struct IdentityEntry {
  const char* id;
  bool multivariate;
  std::function<IdentityReport(Lab&)> run;
};

const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> entries = {
      {"conv-mv", true, id_conv_mv},
      {"conv-mv-special", true, id_conv_mv_special},
      {"conv-scalar", false, id_conv_scalar},
      {"char-conv", false, id_char_conv},
      {"weighted-mv", true, id_weighted_mv},
      {"weighted-flats", true, id_weighted_flats},
      {"sc-conv", true, id_sc_conv},
      {"sc-conv-special", true, id_sc_conv_special},
      {"sc-weighted", true, id_sc_weighted},
      {"sc-weighted-flats", true, id_sc_weighted_flats},
      {"rg-conv", false, id_rg_conv},
      {"rg-conv-special", false, id_rg_conv_special},
      {"rg-rgpcf", false,
       [](Lab& lab) { return id_rgpcf(lab, "rg-rgpcf", nullptr); }},
      {"rg-rgpcf-flats", false,
       [](Lab& lab) { return id_rgpcf(lab, "rg-rgpcf-flats", &lab.flat_idx); }},
      {"rg-rgpcf-cyclic", false,
       [](Lab& lab) { return id_rgpcf(lab, "rg-rgpcf-cyclic", &lab.cyclic_flat_idx); }},
      {"lat-dichromatic", true, lat_dichromatic},
      {"lat-sc-mv", true, lat_sc_mv},
      {"lat-size-corank", true, lat_size_corank},
      {"lat-size-corank-rg", false, lat_size_corank_rg},
      {"lat-tutte-rg", false, lat_tutte_rg},
      {"lat-tutte-z", false, lat_tutte_z},
      {"lat-char-sc", false, lat_char_sc},
      {"lat-char-tutte", false, lat_char_tutte},
      {"lat-char-rg", false, lat_char_rg},
  };
  return entries;
}

const IdentityEntry& entry_for(const std::string& id) {
  for (const auto& e : registry())
    if (id == e.id) return e;
  throw InputError("unknown identity id: " + id);
}

}  // namespace

IdentityReport check_convolution_multivariate(const Semimatroid& sm) {
  Lab lab(sm);
  return id_conv_mv(lab);
}

IdentityReport check_convolution_multivariate_special(const Semimatroid& sm) {
  Lab lab(sm);
  return id_conv_mv_special(lab);
}

IdentityReport check_convolution_scalar(const Semimatroid& sm) {
  Lab lab(sm);
  return id_conv_scalar(lab);
}

IdentityReport check_characteristic_convolution(const Semimatroid& sm) {
  Lab lab(sm);
  return id_char_conv(lab);
}

IdentityReport check_weighted_sum(const Semimatroid& sm) {
  Lab lab(sm);
  return id_weighted_mv(lab);
}

IdentityReport check_weighted_flats(const Semimatroid& sm) {
  Lab lab(sm);
  return id_weighted_flats(lab);
}

std::vector<IdentityReport> check_sc_identities(const Semimatroid& sm) {
  Lab lab(sm);
  return {id_sc_conv(lab), id_sc_conv_special(lab), id_sc_weighted(lab),
          id_sc_weighted_flats(lab)};
}

std::vector<IdentityReport> check_rank_gen_identities(const Semimatroid& sm) {
  Lab lab(sm);
  return {id_rg_conv(lab), id_rg_conv_special(lab),
          id_rgpcf(lab, "rg-rgpcf", nullptr),
          id_rgpcf(lab, "rg-rgpcf-flats", &lab.flat_idx),
          id_rgpcf(lab, "rg-rgpcf-cyclic", &lab.cyclic_flat_idx)};
}

std::vector<std::string> identity_ids(bool scalar_only) {
  std::vector<std::string> ids;
  for (const auto& e : registry())
    if (!scalar_only || !e.multivariate) ids.emplace_back(e.id);
  return ids;
}

bool identity_is_multivariate(const std::string& id) {
  return entry_for(id).multivariate;
}

std::vector<IdentityReport> run_identity(const Semimatroid& sm, const std::string& id) {
  const IdentityEntry& e = entry_for(id);
  Lab lab(sm);
  return {e.run(lab)};
}

std::vector<IdentityReport> check_all(const Semimatroid& sm, bool scalar_only) {
  Lab lab(sm);
  std::vector<IdentityReport> out;
  for (const auto& e : registry()) {
    if (scalar_only && e.multivariate) continue;
    out.push_back(e.run(lab));
  }
  return out;
}

}  // namespace semitutte
