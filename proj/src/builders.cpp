#include "builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "linalg.hpp"

namespace semitutte {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kEnumerationCap = 20;  // 2^n scans; beyond this is a typo, not a plan

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InputError("document root must be a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field: ") + name);
  return *it;
}

long long integer_field(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw InputError(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational parse_rational(const json& j, const char* what) {
  if (!j.is_object())
    throw InputError(std::string(what) + " must be {\"num\":…,\"den\":…}");
  Rational r;
  r.num = mpz_class(static_cast<long>(integer_field(field(j, "num"), "num")));
  r.den = mpz_class(static_cast<long>(integer_field(field(j, "den"), "den")));
  r.normalize();
  return r;
}

void require_no_duplicates(const std::vector<std::string>& labels,
                           const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw InputError(std::string("duplicate label in ") + what + ": " + l);
}

struct SplitMix {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased via threshold rejection.
  long uniform(long lo, long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t threshold = (-range) % range;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return lo + static_cast<long>(r % range);
    }
  }
};

}  // namespace

void Rational::normalize() {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

ExplicitDoc parse_explicit_doc(const std::string& text) {
  json j = parse_json(text);
  ExplicitDoc doc;
  doc.ground = label_list(field(j, "ground"), "ground");

  const json& central = field(j, "central");
  if (!central.is_array()) throw InputError("central must be an array");
  for (const auto& item : central) {
    auto labels = label_list(item, "central set");
    require_no_duplicates(labels, "central set");
    doc.central.push_back(std::move(labels));
  }

  const json& rank = field(j, "rank");
  if (!rank.is_array()) throw InputError("rank must be an array");
  for (const auto& item : rank) {
    if (!item.is_array() || item.size() != 2)
      throw InputError("rank entries must be [labels, value] pairs");
    auto labels = label_list(item[0], "rank entry");
    require_no_duplicates(labels, "rank entry");
    long long v = integer_field(item[1], "rank value");
    doc.rank.emplace_back(std::move(labels), static_cast<int>(v));
  }
  return doc;
}

ArrangementDoc parse_arrangement_doc(const std::string& text) {
  json j = parse_json(text);
  ArrangementDoc doc;
  long long d = integer_field(field(j, "dimension"), "dimension");
  if (d < 0) throw InputError("dimension must be nonnegative");
  doc.dimension = static_cast<int>(d);

  const json& hs = field(j, "hyperplanes");
  if (!hs.is_array()) throw InputError("hyperplanes must be an array");
  for (const auto& h : hs) {
    Hyperplane hp;
    const json& label = field(h, "label");
    if (!label.is_string()) throw InputError("hyperplane label must be a string");
    hp.label = label.get<std::string>();

    const json& normal = field(h, "normal");
    if (!normal.is_array() || static_cast<long long>(normal.size()) != d)
      throw InputError("normal of " + hp.label + " must list " +
                       std::to_string(d) + " rationals");
    for (const auto& c : normal) hp.normal.push_back(parse_rational(c, "normal entry"));
    hp.offset = parse_rational(field(h, "offset"), "offset");
    doc.hyperplanes.push_back(std::move(hp));
  }
  return doc;
}

DocKind sniff_doc_kind(const std::string& text) {
  json j = parse_json(text);
  if (j.is_object() && j.contains("hyperplanes")) return DocKind::Arrangement;
  if (j.is_object() && j.contains("ground")) return DocKind::Explicit;
  throw InputError("unrecognized document: expected ground/central/rank or dimension/hyperplanes");
}

std::string emit_explicit(const Semimatroid& sm) {
  ordered_json j;
  j["ground"] = sm.ground().labels();
  ordered_json central = ordered_json::array();
  ordered_json rank = ordered_json::array();
  for (int i = 0; i < sm.central_count(); ++i) {
    auto labels = sm.ground().labels_of(sm.central_sets()[static_cast<std::size_t>(i)]);
    central.push_back(labels);
    rank.push_back(ordered_json::array({labels, sm.rank_at(i)}));
  }
  j["central"] = std::move(central);
  j["rank"] = std::move(rank);
  return j.dump(2);
}

Semimatroid from_explicit(const ExplicitDoc& doc) {
  GroundSet g(doc.ground);
  RawSemimatroid raw;
  raw.labels = doc.ground;

  std::set<std::uint64_t> member_masks;
  for (const auto& labels : doc.central) {
    Subset s = g.parse_subset(labels);
    raw.members.push_back(s);
    member_masks.insert(s.bits);
  }

  std::map<std::uint64_t, int> rank_by_mask;
  for (const auto& [labels, value] : doc.rank) {
    Subset s = g.parse_subset(labels);
    if (!rank_by_mask.emplace(s.bits, value).second)
      throw InputError("duplicate rank entry for a set");
    if (member_masks.count(s.bits) == 0)
      throw InputError("rank entry for a set not listed as central");
  }
  for (Subset s : raw.members) {
    auto it = rank_by_mask.find(s.bits);
    if (it == rank_by_mask.end())
      throw InputError("missing rank for central set {" + [&] {
        std::string out;
        for (const auto& l : g.labels_of(s)) {
          if (!out.empty()) out += ",";
          out += l;
        }
        return out;
      }() + "}");
    raw.ranks.push_back(it->second);
  }
  return Semimatroid::validated(raw);
}

Semimatroid from_matroid_rank(const std::vector<std::string>& ground,
                              const std::function<int(Subset)>& rank) {
  GroundSet g(ground);
  if (g.size() > kEnumerationCap)
    throw InputError("rank-table construction is capped at " +
                     std::to_string(kEnumerationCap) + " elements");
  RawSemimatroid raw;
  raw.labels = ground;
  std::uint64_t total = 1ull << g.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset s{mask};
    raw.members.push_back(s);
    raw.ranks.push_back(rank(s));
  }
  return Semimatroid::validated(raw);
}

Semimatroid from_arrangement(const ArrangementDoc& doc) {
  std::vector<std::string> labels;
  for (const auto& h : doc.hyperplanes) labels.push_back(h.label);
  GroundSet g(labels);
  int n = g.size();
  if (n > kEnumerationCap)
    throw InputError("arrangement construction is capped at " +
                     std::to_string(kEnumerationCap) + " hyperplanes");

  // Scale each equation to integers; row scaling changes neither rank nor
  // consistency.
  std::vector<std::vector<mpz_class>> rows;  // d coefficients then the offset
  for (const auto& h : doc.hyperplanes) {
    if (static_cast<int>(h.normal.size()) != doc.dimension)
      throw InputError("normal of " + h.label + " has wrong dimension");
    bool all_zero = true;
    for (const auto& c : h.normal)
      if (c.num != 0) all_zero = false;
    if (all_zero) throw InputError("zero normal for hyperplane " + h.label);

    mpz_class scale = 1;
    for (const auto& c : h.normal)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.den.get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), h.offset.den.get_mpz_t());

    std::vector<mpz_class> row;
    for (const auto& c : h.normal) row.push_back(c.num * (scale / c.den));
    row.push_back(h.offset.num * (scale / h.offset.den));
    rows.push_back(std::move(row));
  }

  RawSemimatroid raw;
  raw.labels = labels;
  std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    IntMatrix coeff, augmented;
    for (int i : Subset{mask}.elements()) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      coeff.emplace_back(row.begin(), row.end() - 1);
      augmented.emplace_back(row);
    }
    int rc = matrix_rank(std::move(coeff));
    int ra = matrix_rank(std::move(augmented));
    if (rc == ra) {
      raw.members.push_back(Subset{mask});
      raw.ranks.push_back(rc);
    }
  }

  CheckResult res = Semimatroid::check_axioms(raw);
  if (!res.ok()) {
    std::ostringstream msg;
    msg << "arrangement construction violated";
    for (const auto& v : res.violations) msg << " " << axiom_name(v.axiom);
    throw StructuralError(msg.str());
  }
  return *std::move(res.semimatroid);
}

Semimatroid load_document(const std::string& text) {
  switch (sniff_doc_kind(text)) {
    case DocKind::Arrangement:
      return from_arrangement(parse_arrangement_doc(text));
    case DocKind::Explicit:
    default:
      return from_explicit(parse_explicit_doc(text));
  }
}

ArrangementDoc random_arrangement(const RandomSpec& spec) {
  if (spec.n < 0) throw InputError("n must be nonnegative");
  if (spec.n > kEnumerationCap)
    throw InputError("random instances are capped at " +
                     std::to_string(kEnumerationCap) + " hyperplanes");
  if (spec.n > 0 && spec.d < 1) throw InputError("dimension must be at least 1");
  if (spec.n > 0 && spec.bound < 1) throw InputError("bound must be at least 1");

  ArrangementDoc doc;
  doc.dimension = spec.d;
  SplitMix rng{spec.seed};
  for (int i = 0; i < spec.n; ++i) {
    Hyperplane h;
    h.label = "h" + std::to_string(i);
    for (;;) {
      h.normal.clear();
      bool all_zero = true;
      for (int k = 0; k < spec.d; ++k) {
        long c = rng.uniform(-spec.bound, spec.bound);
        if (c != 0) all_zero = false;
        h.normal.push_back(Rational{mpz_class(c), mpz_class(1)});
      }
      if (!all_zero) break;
    }
    h.offset = Rational{mpz_class(rng.uniform(-spec.bound, spec.bound)), mpz_class(1)};
    doc.hyperplanes.push_back(std::move(h));
  }
  return doc;
}

Semimatroid random_instance(const RandomSpec& spec) {
  return from_arrangement(random_arrangement(spec));
}

}  // namespace semitutte
