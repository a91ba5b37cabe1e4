#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using ddb::QuadExt;
using ddb::Quaternion;
using ddb::Rational;

namespace {

const Rational kHalf(1, 2);

Quaternion omega() {  // (-1 + i + j + k) / 2
  return Quaternion(QuadExt(-kHalf), QuadExt(kHalf), QuadExt(kHalf), QuadExt(kHalf));
}

}  // namespace

TEST_CASE("quadratic field arithmetic is exact") {
  QuadExt phi(Rational(1, 2), Rational(1, 2), 5);  // golden ratio
  CHECK(phi * phi == phi + QuadExt(1));
  QuadExt r2 = ddb::sqrt_of(2);
  CHECK(r2 * r2 == QuadExt(2));
  CHECK(r2.inverse() == QuadExt(0, kHalf, 2));
  CHECK((phi - phi).is_zero());
  CHECK_THROWS_AS(ddb::sqrt_of(2) + ddb::sqrt_of(5), ddb::Error);
  CHECK_THROWS_AS(QuadExt(1, 1, 3), ddb::Error);
  // rationals embed into either field
  CHECK(QuadExt(3) * r2 == QuadExt(0, 3, 2));
}

TEST_CASE("quaternion identities") {
  CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  Quaternion w = omega();
  CHECK(w * w * w == Quaternion::one());
  CHECK(w.norm() == QuadExt(1));
}

TEST_CASE("unit quaternions invert to their conjugates") {
  std::mt19937 rng(67);
  std::vector<Quaternion> pool{omega(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  for (int trial = 0; trial < 40; ++trial) {
    Quaternion q = Quaternion::one();
    for (int step = 0; step < 5; ++step) q = q * pool[rng() % pool.size()];
    CHECK(q.norm() == QuadExt(1));
    CHECK(q * q.inverse() == Quaternion::one());
    CHECK(q.inverse() == q.conjugate());
  }
}

TEST_CASE("norm is multiplicative") {
  Quaternion p(QuadExt(Rational(3, 5)), QuadExt(Rational(4, 5)), QuadExt(0),
               QuadExt(0));
  Quaternion q(QuadExt(0), QuadExt(Rational(5, 13)), QuadExt(Rational(12, 13)),
               QuadExt(0));
  CHECK((p * q).norm() == p.norm() * q.norm());
}

TEST_CASE("multiplicative closures of the space form groups") {
  auto q8 = ddb::quaternion_closure({Quaternion::i(), Quaternion::j()});
  CHECK(q8.size() == 8);

  auto bint = ddb::quaternion_closure({omega(), Quaternion::i()});
  CHECK(bint.size() == 24);

  QuadExt c8(0, Rational(1, 2), 2);  // sqrt(2)/2
  auto bino = ddb::quaternion_closure(
      {omega(), Quaternion(c8, c8, QuadExt(0), QuadExt(0))});
  CHECK(bino.size() == 48);

  QuadExt phi_half(Rational(1, 4), Rational(1, 4), 5);
  QuadExt inv_phi_half(Rational(-1, 4), Rational(1, 4), 5);
  auto bini = ddb::quaternion_closure(
      {omega(), Quaternion(phi_half, QuadExt(kHalf), inv_phi_half, QuadExt(0))});
  CHECK(bini.size() == 120);

  for (const auto& closure : {q8, bint, bino, bini}) {
    for (const auto& e : closure) {
      CHECK(e.norm() == QuadExt(1));
      CHECK(std::binary_search(closure.begin(), closure.end(), e.inverse()));
    }
  }
}

TEST_CASE("closure rejects non-units and infinite groups") {
  Quaternion nonunit(QuadExt(2), QuadExt(0), QuadExt(0), QuadExt(0));
  CHECK_THROWS_AS(ddb::quaternion_closure({nonunit}), ddb::Error);

  // unit of infinite multiplicative order
  Quaternion rot(QuadExt(Rational(3, 5)), QuadExt(Rational(4, 5)), QuadExt(0),
                 QuadExt(0));
  CHECK_THROWS_AS(ddb::quaternion_closure({rot}, 256), ddb::LimitError);
}
