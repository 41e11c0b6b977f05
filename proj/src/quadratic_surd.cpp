#include <addcomp/quadratic_surd.hpp>

#include <cmath>

namespace addcomp {

QuadSurd::QuadSurd(Rational a, Rational b, Int n) : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
  if (n_ < 1) throw Error("surd radicand must be positive");
  if (mpz_perfect_square_p(n_.get_mpz_t())) {
    Int r = sqrt(n_);
    a_ += b_ * r;
    b_ = 0;
  }
}

void QuadSurd::check(const QuadSurd& o) const {
  if (n_ != o.n_ && b_ != 0 && o.b_ != 0) throw Error("surds with different radicands");
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  check(o);
  return QuadSurd(a_ + o.a_, b_ + o.b_, b_ != 0 ? n_ : o.n_);
}

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  check(o);
  Int n = b_ != 0 ? n_ : o.n_;
  return QuadSurd(a_ * o.a_ + b_ * o.b_ * n, a_ * o.b_ + b_ * o.a_, n);
}

int QuadSurd::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare A^2 with B^2 N.
  int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * n_));
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

bool QuadSurd::is_integer() const { return b_ == 0 && a_.get_den() == 1; }

Int QuadSurd::floor() const {
  // Start from a truncated binary expansion of B sqrt(N), then correct.
  const unsigned long bits = 64;
  Int scaled = n_ << (2 * bits);
  Int root = sqrt(scaled);
  Rational approx = a_ + b_ * Rational(root, Int(1) << bits);
  Int k = floor_of(approx);
  while ((*this + Rational(-k)).sign() < 0) --k;
  while ((*this + Rational(-(k + 1))).sign() >= 0) ++k;
  return k;
}

Int QuadSurd::ceil() const { return -(-*this).floor(); }

double QuadSurd::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(n_.get_d()); }

std::string QuadSurd::to_string() const {
  if (b_ == 0) return a_.get_str();
  return a_.get_str() + (b_ < 0 ? " - " : " + ") + Rational(abs(b_)).get_str() + "*sqrt(" + n_.get_str() + ")";
}

}  // namespace addcomp
