#pragma once
// laurent.hpp
// -----------
// Exact multivariate Laurent polynomials with a fractional exponent lattice.
//
// A Ring fixes an ordered list of variable names and a positive integer
// denominator m; every exponent is an integer numerator over that shared m,
// so monomials like y^(−2/3) are exact. Coefficients are arbitrary-precision
// integers. Terms are kept in a std::map under lexicographic exponent order,
// which makes the representation canonical and serialization deterministic.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace exactalg {

using Int = boost::multiprecision::cpp_int;
using Expo = std::vector<long long>;  // exponent numerators, one per variable

struct Ring {
  std::vector<std::string> vars;
  long long den = 1;

  bool operator==(const Ring& o) const { return den == o.den && vars == o.vars; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  // Index of a variable name, or -1 if absent.
  int index_of(const std::string& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    return -1;
  }
  size_t nvars() const { return vars.size(); }
};

// Convenience: a ring with variables prefix1..prefixK and denominator den.
Ring make_ring(const std::string& prefix, int count, long long den);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Ring r) : ring_(std::move(r)) {}

  static LaurentPoly zero(const Ring& r) { return LaurentPoly(r); }
  static LaurentPoly constant(const Ring& r, Int c);
  // Monomial c * prod vars^(e_i / r.den).
  static LaurentPoly monomial(const Ring& r, Expo e, Int c);
  // vars[idx]^(num / r.den).
  static LaurentPoly var_pow(const Ring& r, int idx, long long num);
  // Plain variable (exponent 1).
  static LaurentPoly var(const Ring& r, const std::string& name);

  const Ring& ring() const { return ring_; }
  const std::map<Expo, Int>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Nonnegative integer power (repeated squaring); any integer power for
  // monomials with coefficient ±1.
  LaurentPoly pow(long long k) const;

  // Internal: insert c * x^e (merges, drops zeros).
  void add_term(const Expo& e, const Int& c);

 private:
  Ring ring_;
  std::map<Expo, Int> terms_;
};

// Exact quotient a / b; throws std::domain_error("not divisible") otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Substitute variables by polynomials of a target ring. Monomial images with
// coefficient ±1 may be raised to fractional powers; general images require
// integral nonnegative exponents. Variables of p must all be mapped.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::map<std::string, LaurentPoly>& images,
                       const Ring& target);

// Canonical JSON: {"vars":[...],"den":m,"terms":[{"c":"...","e":[...]},...]}
// with terms in lexicographic exponent order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

std::string to_string(const LaurentPoly& p);

}  // namespace exactalg
