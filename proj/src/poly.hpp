#pragma once

/*
 * Sparse multivariate Laurent polynomials with arbitrary-precision integer
 * coefficients.
 *
 * Variables come in five kinds: the two scalar parameters lambda and xi
 * (the only ones allowed negative exponents), per-element variables x_e and
 * y_e addressed by ground-set label, and plain named scalars ("x", "y").
 * A polynomial is a map monomial -> coefficient; the map's ordering is the
 * canonical term order used for serialization, so iteration order is
 * printing order.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace semitutte {

struct VarId {
  enum class Kind : std::uint8_t { Lambda = 0, Xi = 1, XVar = 2, YVar = 3, Plain = 4 };

  Kind kind = Kind::Plain;
  std::string name;  // element label for XVar/YVar, variable name for Plain

  static VarId lambda() { return {Kind::Lambda, ""}; }
  static VarId xi() { return {Kind::Xi, ""}; }
  static VarId x(std::string label) { return {Kind::XVar, std::move(label)}; }
  static VarId y(std::string label) { return {Kind::YVar, std::move(label)}; }
  static VarId plain(std::string n) { return {Kind::Plain, std::move(n)}; }

  bool laurent_capable() const { return kind == Kind::Lambda || kind == Kind::Xi; }
  std::string token() const;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.name.compare(b.name) <=> 0;
  }
};

// Exponent vector, sorted by VarId, zero exponents dropped. Negative
// exponents only ever appear on lambda/xi.
struct Monomial {
  std::vector<std::pair<VarId, int>> factors;

  static Monomial one() { return {}; }
  static Monomial var(const VarId& v, int exp);

  bool is_one() const { return factors.empty(); }
  int exponent_of(const VarId& v) const;
  Monomial times(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: walk variables in (lambda, xi, x_<label>, y_<label>,
// plain) sequence; at the first variable whose exponents differ, the term
// with the larger (|e|, e) pair prints first.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  SparsePoly() = default;

  static SparsePoly zero() { return {}; }
  static SparsePoly one() { return constant(1); }
  static SparsePoly constant(mpz_class c);
  static SparsePoly term(mpz_class c, Monomial m);
  static SparsePoly var(const VarId& v, int exp = 1) { return term(1, Monomial::var(v, exp)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, mpz_class, TermOrder>& terms() const { return terms_; }

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  // Multiply by c * m in place; much cheaper than a general product.
  void scale(const mpz_class& c, const Monomial& m);

  void add_term(const mpz_class& c, const Monomial& m);

 private:
  std::map<Monomial, mpz_class, TermOrder> terms_;
};

SparsePoly pow(const SparsePoly& p, int k);  // k >= 0

// Simultaneous substitution of sigma into p. A variable carrying a negative
// exponent somewhere in p may only map to a single term whose monomial uses
// lambda/xi and whose coefficient exactly divides the affected coefficients;
// anything else raises DomainError.
SparsePoly substitute(const SparsePoly& p, const std::map<VarId, SparsePoly>& sigma);

// Canonical text form; parse_poly() inverts it. Zero serializes as "0".
std::string serialize(const SparsePoly& p);
SparsePoly parse_poly(const std::string& text);

}  // namespace semitutte
