#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace addcomp {

using Int = mpz_class;
using Rational = mpq_class;
using Point = std::vector<Int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Result in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int floor_of(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_of(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int abs_int(const Int& a) { return abs(a); }

inline std::int64_t to_i64(const Int& a) {
  if (!a.fits_slong_p()) throw Error("integer does not fit in 64 bits: " + a.get_str());
  return a.get_si();
}

inline Int parse_int(std::string_view s) {
  Int r;
  if (r.set_str(std::string(s), 10) != 0) throw Error("not an integer: " + std::string(s));
  return r;
}

inline Rational parse_rational(std::string_view s) {
  Rational r;
  if (r.set_str(std::string(s), 10) != 0) throw Error("not a rational: " + std::string(s));
  r.canonicalize();
  if (r.get_den() == 0) throw Error("zero denominator: " + std::string(s));
  return r;
}

inline std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

inline Point make_point(std::initializer_list<long> xs) {
  Point p;
  p.reserve(xs.size());
  for (long x : xs) p.emplace_back(x);
  return p;
}

inline Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Int squared_norm(const Point& p) {
  Int s = 0;
  for (const auto& x : p) s += x * x;
  return s;
}

// Dictionary order on Z^k.
inline int lex_compare(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace addcomp
