#include "semitutte.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "invariants.hpp"
#include "json.hpp"
#include "poly.hpp"
#include "semimatroid.hpp"

struct stt_semimatroid {
  semitutte::Semimatroid sm;
};

namespace {

using nlohmann::ordered_json;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& msg) {
  if (error != nullptr) *error = dup_string(msg);
}

template <typename F>
stt_status guarded(char** error, F&& f) {
  try {
    return f();
  } catch (const semitutte::AxiomError& e) {
    set_error(error, e.what());
    return STT_ERROR_AXIOM;
  } catch (const semitutte::InputError& e) {
    set_error(error, e.what());
    return STT_ERROR_INPUT;
  } catch (const semitutte::DomainError& e) {
    set_error(error, e.what());
    return STT_ERROR_DOMAIN;
  } catch (const semitutte::StructuralError& e) {
    set_error(error, e.what());
    return STT_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return STT_ERROR_INTERNAL;
  }
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = csv; *p != '\0'; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(*p);
    }
  }
  out.push_back(cur);
  return out;
}

ordered_json subset_labels(const semitutte::Semimatroid& sm, semitutte::Subset s) {
  return ordered_json(sm.ground().labels_of(s));
}

ordered_json report_json(const semitutte::IdentityReport& rep) {
  ordered_json j;
  j["id"] = rep.id;
  j["lhs"] = serialize(rep.lhs);
  j["rhs"] = serialize(rep.rhs);
  j["diff"] = serialize(rep.diff);
  j["pass"] = rep.pass;
  return j;
}

}  // namespace

extern "C" {

const char* stt_status_name(stt_status status) {
  switch (status) {
    case STT_OK: return "ok";
    case STT_ERROR_USAGE: return "usage";
    case STT_ERROR_PARSE: return "parse";
    case STT_ERROR_INPUT: return "input";
    case STT_ERROR_AXIOM: return "axiom";
    case STT_ERROR_DOMAIN: return "domain";
    case STT_ERROR_IDENTITY: return "identity";
    case STT_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* stt_version(void) { return "1.0.0"; }

void stt_string_free(char* s) { std::free(s); }

stt_status stt_semimatroid_load(const char* document_text, const char* order_csv,
                                stt_semimatroid** out, char** error) {
  if (document_text == nullptr || out == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  using namespace semitutte;
  DocKind kind;
  ExplicitDoc edoc;
  ArrangementDoc adoc;
  try {
    kind = sniff_doc_kind(document_text);
    if (kind == DocKind::Explicit) {
      edoc = parse_explicit_doc(document_text);
    } else {
      adoc = parse_arrangement_doc(document_text);
    }
  } catch (const InputError& e) {
    set_error(error, e.what());
    return STT_ERROR_PARSE;
  }
  return guarded(error, [&]() {
    Semimatroid sm = kind == DocKind::Explicit ? from_explicit(edoc)
                                               : from_arrangement(adoc);
    if (order_csv != nullptr && *order_csv != '\0')
      sm = sm.reordered(split_csv(order_csv));
    *out = new stt_semimatroid{std::move(sm)};
    return STT_OK;
  });
}

stt_status stt_semimatroid_random(uint64_t seed, int n, int dimension,
                                  long bound, stt_semimatroid** out,
                                  char** error) {
  if (out == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  return guarded(error, [&]() {
    semitutte::RandomSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.d = dimension;
    spec.bound = bound;
    *out = new stt_semimatroid{semitutte::random_instance(spec)};
    return STT_OK;
  });
}

stt_status stt_semimatroid_reorder(const stt_semimatroid* sm,
                                   const char* order_csv,
                                   stt_semimatroid** out, char** error) {
  if (sm == nullptr || order_csv == nullptr || out == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  return guarded(error, [&]() {
    *out = new stt_semimatroid{sm->sm.reordered(split_csv(order_csv))};
    return STT_OK;
  });
}

void stt_semimatroid_free(stt_semimatroid* sm) { delete sm; }

int stt_semimatroid_size(const stt_semimatroid* sm) {
  return sm == nullptr ? -1 : sm->sm.size();
}

int stt_semimatroid_rank(const stt_semimatroid* sm) {
  return sm == nullptr ? -1 : sm->sm.rank();
}

stt_status stt_semimatroid_emit(const stt_semimatroid* sm, char** out_json,
                                char** error) {
  if (sm == nullptr || out_json == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  return guarded(error, [&]() {
    *out_json = dup_string(semitutte::emit_explicit(sm->sm));
    return STT_OK;
  });
}

stt_status stt_invariant(const stt_semimatroid* sm, const char* poly,
                         const char* route, char** out_text, char** error) {
  if (sm == nullptr || poly == nullptr || route == nullptr || out_text == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  using namespace semitutte;
  Invariant w;
  bool all_routes = std::strcmp(route, "all") == 0;
  Route r = Route::SubsetSum;
  try {
    w = invariant_from_name(poly);
    if (!all_routes) r = route_from_name(route);
  } catch (const InputError& e) {
    set_error(error, e.what());
    return STT_ERROR_USAGE;
  }
  return guarded(error, [&]() {
    if (!all_routes) {
      *out_text = dup_string(serialize(evaluate(sm->sm, w, r)));
      return STT_OK;
    }
    std::vector<Route> rs = routes_for(w);
    SparsePoly first = evaluate(sm->sm, w, rs[0]);
    for (std::size_t i = 1; i < rs.size(); ++i) {
      SparsePoly other = evaluate(sm->sm, w, rs[i]);
      if (!(other == first))
        throw StructuralError(std::string("route disagreement for ") +
                              invariant_name(w) + ": " + route_name(rs[0]) +
                              " gives " + serialize(first) + " but " +
                              route_name(rs[i]) + " gives " + serialize(other));
    }
    *out_text = dup_string(serialize(first));
    return STT_OK;
  });
}

stt_status stt_activities(const stt_semimatroid* sm, char** out_json,
                          char** error) {
  if (sm == nullptr || out_json == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  using namespace semitutte;
  return guarded(error, [&]() {
    const Semimatroid& m = sm->sm;
    ordered_json j;
    j["rank"] = m.rank();
    j["central_count"] = m.central_count();
    ordered_json basis_list = ordered_json::array();
    for (Subset b : m.bases()) {
      ActivityRecord rec = activities(m, b);
      ordered_json item;
      item["basis"] = subset_labels(m, rec.basis);
      item["internally_active"] = subset_labels(m, rec.internally_active);
      item["externally_active"] = subset_labels(m, rec.externally_active);
      ordered_json fcirc = ordered_json::array();
      for (const auto& [e, c] : rec.fundamental_circuits)
        fcirc.push_back(ordered_json{{"element", m.ground().label(e)},
                                     {"circuit", subset_labels(m, c)}});
      ordered_json fcocirc = ordered_json::array();
      for (const auto& [e, c] : rec.fundamental_cocircuits)
        fcocirc.push_back(ordered_json{{"element", m.ground().label(e)},
                                       {"cocircuit", subset_labels(m, c)}});
      item["fundamental_circuits"] = std::move(fcirc);
      item["fundamental_cocircuits"] = std::move(fcocirc);
      basis_list.push_back(std::move(item));
    }
    j["bases"] = std::move(basis_list);
    ordered_json intervals = ordered_json::array();
    for (const DecompositionInterval& iv : interval_decomposition(m)) {
      intervals.push_back(ordered_json{{"basis", subset_labels(m, iv.basis)},
                                       {"lower", subset_labels(m, iv.lower)},
                                       {"upper", subset_labels(m, iv.upper)}});
    }
    j["intervals"] = std::move(intervals);
    *out_json = dup_string(j.dump(2));
    return STT_OK;
  });
}

stt_status stt_verify(const stt_semimatroid* sm, const char* identity_id,
                      char** out_json, char** error) {
  if (sm == nullptr || out_json == nullptr) {
    set_error(error, "NULL argument");
    return STT_ERROR_USAGE;
  }
  using namespace semitutte;
  if (identity_id != nullptr && *identity_id != '\0') {
    try {
      identity_is_multivariate(identity_id);  // name check
    } catch (const InputError& e) {
      set_error(error, e.what());
      return STT_ERROR_USAGE;
    }
  }
  return guarded(error, [&]() {
    std::vector<IdentityReport> reports =
        (identity_id == nullptr || *identity_id == '\0')
            ? check_all(sm->sm)
            : run_identity(sm->sm, identity_id);
    bool all_pass = true;
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
      all_pass = all_pass && rep.pass;
      arr.push_back(report_json(rep));
    }
    ordered_json j;
    j["all_pass"] = all_pass;
    j["reports"] = std::move(arr);
    *out_json = dup_string(j.dump(2));
    if (!all_pass) {
      set_error(error, "identity check failed");
      return STT_ERROR_IDENTITY;
    }
    return STT_OK;
  });
}

char* stt_identities(void) {
  std::string out;
  for (const auto& id : semitutte::identity_ids()) {
    out += id;
    if (semitutte::identity_is_multivariate(id)) out += " mv";
    out += "\n";
  }
  return dup_string(out);
}

}  // extern "C"
