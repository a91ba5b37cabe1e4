#pragma once

#include <set>
#include <string>
#include <vector>

#include "ddb/quadext.hpp"

namespace ddb {

// Quaternion with exact quadratic-field components. Group elements carry
// reduced norm exactly 1.
class Quaternion {
 public:
  Quaternion() : w_(1), x_(0), y_(0), z_(0) {}
  Quaternion(QuadExt w, QuadExt x, QuadExt y, QuadExt z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion one() { return Quaternion(); }
  static Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion k() { return Quaternion(0, 0, 0, 1); }

  const QuadExt& w() const { return w_; }
  const QuadExt& x() const { return x_; }
  const QuadExt& y() const { return y_; }
  const QuadExt& z() const { return z_; }

  QuadExt norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

  Quaternion conjugate() const { return Quaternion(w_, -x_, -y_, -z_); }

  Quaternion inverse() const {
    QuadExt n = norm();
    if (n.is_zero()) throw Error("quaternion: zero has no inverse");
    QuadExt r = n.inverse();
    return Quaternion(w_ * r, -x_ * r, -y_ * r, -z_ * r);
  }

  // Hamilton product
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return Quaternion(
        p.w_ * q.w_ - p.x_ * q.x_ - p.y_ * q.y_ - p.z_ * q.z_,
        p.w_ * q.x_ + p.x_ * q.w_ + p.y_ * q.z_ - p.z_ * q.y_,
        p.w_ * q.y_ - p.x_ * q.z_ + p.y_ * q.w_ + p.z_ * q.x_,
        p.w_ * q.z_ + p.x_ * q.y_ - p.y_ * q.x_ + p.z_ * q.w_);
  }

  Quaternion operator-() const { return Quaternion(-w_, -x_, -y_, -z_); }

  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.w_ == q.w_ && p.x_ == q.x_ && p.y_ == q.y_ && p.z_ == q.z_;
  }

  friend bool operator<(const Quaternion& p, const Quaternion& q) {
    if (!(p.w_ == q.w_)) return p.w_ < q.w_;
    if (!(p.x_ == q.x_)) return p.x_ < q.x_;
    if (!(p.y_ == q.y_)) return p.y_ < q.y_;
    return p.z_ < q.z_;
  }

  std::string str() const {
    return "(" + w_.str() + ", " + x_.str() + ", " + y_.str() + ", " +
           z_.str() + ")";
  }

 private:
  QuadExt w_, x_, y_, z_;
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  return p * q;
}

// Full multiplicative closure of unit quaternions, deduplicated by exact
// equality. Throws LimitError past `cap` elements (the generators do not
// generate a small finite group at this discriminant).
inline std::vector<Quaternion> quaternion_closure(
    const std::vector<Quaternion>& gens, std::size_t cap = 2048) {
  QuadExt one(1);
  for (const auto& g : gens)
    if (!(g.norm() == one)) throw Error("quaternion closure: generator is not a unit");
  std::set<Quaternion> seen(gens.begin(), gens.end());
  std::vector<Quaternion> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Quaternion> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Quaternion p = e * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap)
            throw LimitError("quaternion closure cap exceeded");
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return std::vector<Quaternion>(seen.begin(), seen.end());
}

}  // namespace ddb
