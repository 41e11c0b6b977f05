#pragma once

#include <addcomp/integer.hpp>

#include <string>

namespace addcomp {

// A + B sqrt(N) with rational A, B and integer N >= 1, compared and rounded exactly.
class QuadSurd {
 public:
  QuadSurd(Rational a, Rational b, Int n);

  static QuadSurd rational(const Rational& a, const Int& n) { return QuadSurd(a, 0, n); }
  static QuadSurd root(const Int& n) { return QuadSurd(0, 1, n); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Int& n() const { return n_; }

  int sign() const;
  Int floor() const;
  Int ceil() const;
  bool is_integer() const;
  double approx() const;
  std::string to_string() const;

  QuadSurd operator-() const { return QuadSurd(-a_, -b_, n_); }
  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const { return *this + (-o); }
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd operator*(const Rational& q) const { return QuadSurd(a_ * q, b_ * q, n_); }
  QuadSurd times_root() const { return QuadSurd(b_ * n_, a_, n_); }
  QuadSurd operator+(const Rational& q) const { return QuadSurd(a_ + q, b_, n_); }

  friend int compare(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign(); }

 private:
  void check(const QuadSurd& o) const;

  Rational a_;
  Rational b_;
  Int n_;
};

}  // namespace addcomp
