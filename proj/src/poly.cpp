#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace semitutte {

std::string VarId::token() const {
  switch (kind) {
    case Kind::Lambda: return "l";
    case Kind::Xi: return "xi";
    case Kind::XVar: return "x_" + name;
    case Kind::YVar: return "y_" + name;
    case Kind::Plain: return name;
  }
  return name;
}

Monomial Monomial::var(const VarId& v, int exp) {
  if (exp == 0) return {};
  if (exp < 0 && !v.laurent_capable())
    throw DomainError("negative exponent on non-Laurent variable " + v.token());
  Monomial m;
  m.factors.emplace_back(v, exp);
  return m;
}

int Monomial::exponent_of(const VarId& v) const {
  for (const auto& [w, e] : factors)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors.reserve(factors.size() + o.factors.size());
  auto a = factors.begin(), ae = factors.end();
  auto b = o.factors.begin(), be = o.factors.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.factors.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.factors.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) {
        if (e < 0 && !a->first.laurent_capable())
          throw DomainError("negative exponent on non-Laurent variable " + a->first.token());
        out.factors.emplace_back(a->first, e);
      }
      ++a, ++b;
    }
  }
  return out;
}

namespace {

// (|e|, e) compared descending; absent variables count as exponent 0.
bool exp_prints_before(int ea, int eb) {
  int aa = ea < 0 ? -ea : ea, ab = eb < 0 ? -eb : eb;
  if (aa != ab) return aa > ab;
  return ea > eb;
}

}  // namespace

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  auto ia = a.factors.begin(), ae = a.factors.end();
  auto ib = b.factors.begin(), be = b.factors.end();
  while (ia != ae || ib != be) {
    if (ib == be || (ia != ae && ia->first < ib->first)) {
      // variable present only in a
      if (ia->second != 0) return exp_prints_before(ia->second, 0);
      ++ia;
    } else if (ia == ae || ib->first < ia->first) {
      if (ib->second != 0) return exp_prints_before(0, ib->second);
      ++ib;
    } else {
      if (ia->second != ib->second) return exp_prints_before(ia->second, ib->second);
      ++ia, ++ib;
    }
  }
  return false;
}

SparsePoly SparsePoly::constant(mpz_class c) {
  SparsePoly p;
  if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
  return p;
}

SparsePoly SparsePoly::term(mpz_class c, Monomial m) {
  SparsePoly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

void SparsePoly::add_term(const mpz_class& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ca * cb, ma.times(mb));
  return out;
}

void SparsePoly::scale(const mpz_class& c, const Monomial& m) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  if (m.is_one()) {
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return;
  }
  std::map<Monomial, mpz_class, TermOrder> next;
  for (const auto& [mono, coeff] : terms_) next.emplace(mono.times(m), coeff * c);
  terms_ = std::move(next);
}

SparsePoly pow(const SparsePoly& p, int k) {
  if (k < 0) throw DomainError("pow: negative exponent");
  SparsePoly acc = SparsePoly::one();
  SparsePoly base = p;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

SparsePoly substitute(const SparsePoly& p, const std::map<VarId, SparsePoly>& sigma) {
  // Admissibility of inverses: collect the variables that occur with a
  // negative exponent anywhere in p.
  std::map<VarId, bool> negative;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors)
      if (e < 0) negative[v] = true;
  for (const auto& [v, flag] : negative) {
    (void)flag;
    auto it = sigma.find(v);
    if (it == sigma.end()) continue;
    const SparsePoly& img = it->second;
    if (img.term_count() != 1)
      throw DomainError("substitute: image of " + v.token() +
                        " must be a single invertible term where exponents are negative");
    const auto& [mono, coeff] = *img.terms().begin();
    (void)coeff;
    for (const auto& [w, e] : mono.factors) {
      (void)e;
      if (!w.laurent_capable())
        throw DomainError("substitute: image of " + v.token() + " is not invertible (" +
                          w.token() + " admits no negative powers)");
    }
  }

  std::map<std::pair<VarId, int>, SparsePoly> pow_cache;
  auto image_pow = [&](const VarId& v, int e, const SparsePoly& img) -> const SparsePoly& {
    auto key = std::make_pair(v, e);
    auto it = pow_cache.find(key);
    if (it == pow_cache.end()) it = pow_cache.emplace(key, pow(img, e)).first;
    return it->second;
  };

  SparsePoly result;
  for (const auto& [mono, coeff] : p.terms()) {
    SparsePoly acc = SparsePoly::constant(coeff);
    mpz_class divisor = 1;
    Monomial passthrough;  // untouched variables and inverse-monomial parts
    for (const auto& [v, e] : mono.factors) {
      auto it = sigma.find(v);
      if (it == sigma.end()) {
        passthrough = passthrough.times(Monomial::var(v, e));
      } else if (e >= 0) {
        acc = acc * image_pow(v, e, it->second);
      } else {
        const auto& [m0, c0] = *it->second.terms().begin();
        if (c0 == 0) throw DomainError("substitute: zero image is not invertible");
        Monomial inv;
        for (const auto& [w, we] : m0.factors) inv = inv.times(Monomial::var(w, we * e));
        passthrough = passthrough.times(inv);
        mpz_class mag;
        mpz_pow_ui(mag.get_mpz_t(), c0.get_mpz_t(), static_cast<unsigned long>(-e));
        divisor *= mag;
      }
    }
    acc.scale(1, passthrough);
    if (divisor != 1) {
      SparsePoly divided;
      for (const auto& [m, c] : acc.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
          throw DomainError("substitute: inverse image coefficient does not divide exactly");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        divided.add_term(q, m);
      }
      acc = std::move(divided);
    }
    result += acc;
  }
  return result;
}

std::string serialize(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    bool neg = coeff < 0;
    mpz_class mag = neg ? mpz_class(-coeff) : coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (mono.is_one()) {
      body = mag.get_str();
    } else {
      if (mag != 1) body = mag.get_str() + "*";
      bool firstv = true;
      for (const auto& [v, e] : mono.factors) {
        if (!firstv) body += "*";
        firstv = false;
        body += v.token();
        if (e != 1) body += "^" + std::to_string(e);
      }
    }
    out += body;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }

  [[noreturn]] void fail(const std::string& why) {
    throw InputError("polynomial parse error at offset " + std::to_string(i) + ": " + why);
  }

  mpz_class read_integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return mpz_class(s.substr(start, i - start));
  }

  std::string read_ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (i == start) fail("expected variable name");
    return s.substr(start, i - start);
  }

  int read_exponent() {
    // caller consumed '^'
    skip_ws();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    mpz_class e = read_integer();
    if (!e.fits_sint_p()) fail("exponent out of range");
    int v = static_cast<int>(e.get_si());
    return neg ? -v : v;
  }
};

VarId var_from_token(const std::string& tok) {
  if (tok == "l") return VarId::lambda();
  if (tok == "xi") return VarId::xi();
  if (tok.size() > 2 && tok.compare(0, 2, "x_") == 0) return VarId::x(tok.substr(2));
  if (tok.size() > 2 && tok.compare(0, 2, "y_") == 0) return VarId::y(tok.substr(2));
  return VarId::plain(tok);
}

}  // namespace

SparsePoly parse_poly(const std::string& text) {
  Parser p(text);
  SparsePoly out;
  bool first = true;
  while (!p.done()) {
    int sign = 1;
    p.skip_ws();
    if (p.peek() == '+' || p.peek() == '-') {
      if (p.peek() == '-') sign = -1;
      ++p.i;
    } else if (!first) {
      p.fail("expected '+' or '-' between terms");
    }
    p.skip_ws();
    if (p.done()) p.fail("dangling sign");

    mpz_class coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coeff = p.read_integer();
      saw_coeff = true;
    }
    std::map<VarId, int> exps;
    bool expect_var = !saw_coeff;
    while (true) {
      p.skip_ws();
      if (!p.done() && p.peek() == '*') {
        ++p.i;
        expect_var = true;
        p.skip_ws();
      } else if (!expect_var) {
        break;
      }
      if (p.done()) p.fail("expected variable after '*'");
      std::string tok = p.read_ident();
      VarId v = var_from_token(tok);
      int e = 1;
      p.skip_ws();
      if (!p.done() && p.peek() == '^') {
        ++p.i;
        e = p.read_exponent();
      }
      exps[v] += e;
      expect_var = false;
    }
    Monomial mono;
    for (const auto& [v, e] : exps) {
      if (e == 0) continue;
      mono = mono.times(Monomial::var(v, e));
    }
    out.add_term(sign * coeff, mono);
    first = false;
  }
  if (first) throw InputError("polynomial parse error: empty input");
  return out;
}

}  // namespace semitutte
