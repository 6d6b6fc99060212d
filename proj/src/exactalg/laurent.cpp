// laurent.cpp -- exact Laurent polynomial arithmetic.

#include "laurent.hpp"

#include <algorithm>
#include <sstream>

namespace exactalg {

Ring make_ring(const std::string& prefix, int count, long long den) {
  Ring r;
  r.den = den;
  r.vars.reserve(count);
  for (int i = 1; i <= count; ++i) r.vars.push_back(prefix + std::to_string(i));
  return r;
}

LaurentPoly LaurentPoly::constant(const Ring& r, Int c) {
  LaurentPoly p(r);
  p.add_term(Expo(r.nvars(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Ring& r, Expo e, Int c) {
  if (e.size() != r.nvars()) throw std::invalid_argument("exponent arity mismatch");
  LaurentPoly p(r);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::var_pow(const Ring& r, int idx, long long num) {
  if (idx < 0 || static_cast<size_t>(idx) >= r.nvars())
    throw std::invalid_argument("variable index out of range");
  Expo e(r.nvars(), 0);
  e[idx] = num;
  return monomial(r, e, 1);
}

LaurentPoly LaurentPoly::var(const Ring& r, const std::string& name) {
  int idx = r.index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable " + name);
  return var_pow(r, idx, r.den);
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
}

void LaurentPoly::add_term(const Expo& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(ring_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

static void check_ring(const Ring& a, const Ring& b) {
  if (a != b) throw std::invalid_argument("ring mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_ring(ring_, o.ring_);
  LaurentPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_ring(ring_, o.ring_);
  LaurentPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_ring(ring_, o.ring_);
  LaurentPoly p(ring_);
  Expo e(ring_.nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::pow(long long k) const {
  if (is_monomial()) {
    const auto& [e, c] = *terms_.begin();
    if (c == 1 || c == -1) {
      Expo ek(e.size());
      for (size_t i = 0; i < e.size(); ++i) ek[i] = e[i] * k;
      Int ck = (c == 1 || k % 2 == 0) ? Int(1) : Int(-1);
      return monomial(ring_, ek, ck);
    }
  }
  if (k < 0) throw std::domain_error("negative power of a non-unit polynomial");
  LaurentPoly acc = constant(ring_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return acc;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  check_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return a;

  const size_t nv = a.ring().nvars();
  // Shift both operands so all exponents are >= 0; for polynomials the
  // per-coordinate minimum of a product is the sum of the minima, so the
  // shifted quotient has nonnegative exponents too.
  auto min_expo = [nv](const LaurentPoly& p) {
    Expo m(nv, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      (void)c;
      for (size_t i = 0; i < nv; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  };
  Expo ma = min_expo(a), mb = min_expo(b);

  auto shifted = [&](const LaurentPoly& p, const Expo& m) {
    LaurentPoly q(p.ring());
    for (const auto& [e, c] : p.terms()) {
      Expo f(nv);
      for (size_t i = 0; i < nv; ++i) f[i] = e[i] - m[i];
      q.add_term(f, c);
    }
    return q;
  };
  LaurentPoly r = shifted(a, ma);
  LaurentPoly bs = shifted(b, mb);

  const auto& blead = *bs.terms().rbegin();  // lex-leading term of divisor
  LaurentPoly q(a.ring());
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Expo qe(nv);
    for (size_t i = 0; i < nv; ++i) {
      qe[i] = rlead.first[i] - blead.first[i];
      if (qe[i] < 0) throw std::domain_error("not divisible");
    }
    if (rlead.second % blead.second != 0) throw std::domain_error("not divisible");
    Int qc = rlead.second / blead.second;
    q.add_term(qe, qc);
    r -= LaurentPoly::monomial(a.ring(), qe, qc) * bs;
  }
  // Undo the shift: q_true = q * x^(ma - mb).
  LaurentPoly out(a.ring());
  for (const auto& [e, c] : q.terms()) {
    Expo f(nv);
    for (size_t i = 0; i < nv; ++i) f[i] = e[i] + ma[i] - mb[i];
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& p,
                       const std::map<std::string, LaurentPoly>& images,
                       const Ring& target) {
  const Ring& src = p.ring();
  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    Expo acc(target.nvars(), 0);  // exponent numerators over target.den
    for (size_t v = 0; v < src.nvars(); ++v) {
      if (e[v] == 0) continue;
      auto it = images.find(src.vars[v]);
      if (it == images.end())
        throw std::invalid_argument("unmapped variable " + src.vars[v]);
      const LaurentPoly& img = it->second;
      if (img.ring() != target) throw std::invalid_argument("image ring mismatch");
      if (img.is_monomial()) {
        const auto& [me, mc] = *img.terms().begin();
        // target exponent numerator gets e[v]/src.den * me[j]; exactness check.
        for (size_t j = 0; j < target.nvars(); ++j) {
          Int num = Int(e[v]) * me[j];
          if (num % src.den != 0)
            throw std::domain_error("non-integral exponents after substitution");
          Int shifted = num / src.den;
          acc[j] += static_cast<long long>(shifted);
        }
        if (mc != 1) {
          if (e[v] % src.den != 0)
            throw std::domain_error("fractional power of non-unit coefficient");
          long long k = e[v] / src.den;
          if (mc == -1) {
            if (k % 2 != 0) term = -term;
          } else if (k >= 0) {
            Int f = 1;
            for (long long q = 0; q < k; ++q) f *= mc;
            term *= LaurentPoly::constant(target, f);
          } else {
            throw std::domain_error("negative power of non-unit coefficient");
          }
        }
      } else {
        if (e[v] % src.den != 0)
          throw std::domain_error("fractional power of non-monomial image");
        long long k = e[v] / src.den;
        if (k < 0) throw std::domain_error("negative power of non-monomial image");
        term *= img.pow(k);
      }
    }
    out += term * LaurentPoly::monomial(target, acc, 1);
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j;
  j["vars"] = p.ring().vars;
  j["den"] = p.ring().den;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["c"] = c.str();
    t["e"] = e;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  Ring r;
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.den = j.at("den").get<long long>();
  LaurentPoly p(r);
  for (const auto& t : j.at("terms")) {
    Expo e = t.at("e").get<Expo>();
    p.add_term(e, Int(t.at("c").get<std::string>()));
  }
  return p;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest term first for readability.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int ca = c < 0 ? Int(-c) : c;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    bool allzero = std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
    bool wrote = false;
    if (ca != 1 || allzero) {
      os << ca.str();
      wrote = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << p.ring().vars[i];
      if (e[i] != p.ring().den) {
        os << "^";
        if (e[i] % p.ring().den == 0)
          os << (e[i] / p.ring().den);
        else
          os << "(" << e[i] << "/" << p.ring().den << ")";
      }
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace exactalg
