#pragma once

#include <sstream>
#include <string>

#include "ddb/ints.hpp"

namespace ddb {

// Exact element a + b*sqrt(d) of a real quadratic field, d in {1, 2, 5}.
// d == 1 means plain Q (the surd part is folded into the rational part), and
// rational values interoperate with either surd field; mixing sqrt(2) with
// sqrt(5) is an error.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(1) {}
  QuadExt(const Rational& a) : a_(a), b_(0), d_(1) {}  // NOLINT(runtime/explicit)
  QuadExt(long long a) : a_(a), b_(0), d_(1) {}        // NOLINT(runtime/explicit)

  QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d != 1 && d != 2 && d != 5) throw Error("quadext: discriminant must be 1, 2 or 5");
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    } else if (b_ == 0) {
      d_ = 1;
    }
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  int disc() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    int d = joint_disc(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
  }

  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    int d = joint_disc(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    int d = joint_disc(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
  }

  QuadExt inverse() const {
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - d b^2)
    Rational n = a_ * a_ - Rational(d_) * b_ * b_;
    if (n == 0) throw Error("quadext: division by zero");
    return QuadExt(a_ / n, -b_ / n, d_);
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    joint_disc(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend bool operator<(const QuadExt& x, const QuadExt& y) {
    joint_disc(x, y);
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  std::string str() const {
    std::ostringstream os;
    if (b_ == 0) {
      os << a_;
    } else {
      if (a_ != 0) os << a_ << (b_ > 0 ? "+" : "");
      os << b_ << "*sqrt(" << d_ << ")";
    }
    return os.str();
  }

 private:
  static int joint_disc(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == y.d_ || y.d_ == 1) return x.d_;
    if (x.d_ == 1) return y.d_;
    throw Error("quadext: discriminant mismatch");
  }

  Rational a_;
  Rational b_;
  int d_;
};

inline QuadExt sqrt_of(int d) { return QuadExt(0, 1, d); }

}  // namespace ddb
