#pragma once

#include <addcomp/integer.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace addcomp {

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial with coefficients in Int or Rational.
template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const std::vector<std::pair<Exponents, C>>& terms) : nvars_(nvars) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static Poly constant(std::size_t nvars, const C& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    Poly p(nvars);
    p.add_term(e, C(1));
    return p;
  }
  // sum_i c_i x^i in one variable.
  static Poly univariate(const std::vector<C>& coeffs) {
    Poly p(1);
    for (unsigned i = 0; i < coeffs.size(); ++i) p.add_term({i}, coeffs[i]);
    return p;
  }

  void add_term(const Exponents& e, const C& c) {
    if (e.size() != nvars_) throw Error("monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  C constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? C(0) : it->second;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }

  // Every monomial involves at most one variable.
  bool is_separable() const {
    for (const auto& [e, c] : terms_) {
      int used = 0;
      for (unsigned x : e) used += x > 0;
      if (used > 1) return false;
    }
    return true;
  }

  // Coefficients of the pure powers of variable i (constant term excluded).
  std::vector<C> pure_part(std::size_t i) const {
    std::vector<C> out(degree_in(i) + 1, C(0));
    for (const auto& [e, c] : terms_) {
      bool pure = e[i] > 0;
      for (std::size_t j = 0; j < nvars_; ++j)
        if (j != i && e[j] != 0) pure = false;
      if (pure) out[e[i]] = c;
    }
    return out;
  }

  template <class X>
  X eval(const std::vector<X>& x) const {
    if (x.size() != nvars_) throw Error("polynomial evaluated at a point of wrong dimension");
    X total = 0;
    for (const auto& [e, c] : terms_) {
      X m = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) m *= x[i];
      total += m;
    }
    return total;
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, C(ca * cb));
      }
    return r;
  }
  friend Poly operator*(const C& s, const Poly& p) {
    Poly r(p.nvars_);
    for (const auto& [e, c] : p.terms_) r.add_term(e, C(s * c));
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = c.get_str();
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      C mag = abs(c);
      if (mono.empty()) s += mag.get_str();
      else if (mag == 1) s += mono;
      else s += mag.get_str() + "*" + mono;
    }
    return s;
  }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, C> terms_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  RatPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
  return r;
}

}  // namespace addcomp
