#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace leavitt {

using BigInt = boost::multiprecision::cpp_int;

//! The coefficient rings that ship: Z (trivial involution) and Z[i]
//! (complex conjugation).
enum class Ring { Integer, Gaussian };

std::string_view to_string(Ring ring);

//! A ring automorphism applied to coefficients on top of the generator images.
enum class Twist { Identity, Conjugation };

std::string_view to_string(Twist twist);

//! An exact coefficient a + bi, tagged with its ring. Integer scalars always
//! have b = 0. Combining scalars of different rings throws MixedRings.
class Scalar {
 public:
  explicit Scalar(Ring ring = Ring::Integer, BigInt real = 0, BigInt imag = 0);

  static Scalar zero(Ring ring) { return Scalar(ring); }
  static Scalar one(Ring ring) { return Scalar(ring, 1); }
  //! The imaginary unit; throws MixedRings over Z.
  static Scalar i(Ring ring) { return Scalar(ring, 0, 1); }

  //! Accepts `-3`, `2+3i`, `2-3i`, `3i`, `-i`. Throws Parse.
  static Scalar parse(Ring ring, std::string_view text);

  Ring ring() const noexcept { return ring_; }
  const BigInt& real() const noexcept { return real_; }
  const BigInt& imag() const noexcept { return imag_; }
  bool is_zero() const { return real_ == 0 && imag_ == 0; }
  bool is_one() const { return real_ == 1 && imag_ == 0; }

  Scalar conj() const;
  Scalar twisted(Twist twist) const { return twist == Twist::Conjugation ? conj() : *this; }

  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }

  //! Exact equality; scalars over different rings are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.real_ == b.real_ && a.imag_ == b.imag_;
  }

 private:
  Ring ring_;
  BigInt real_;
  BigInt imag_;
};

void require_same_ring(Ring a, Ring b);

}  // namespace leavitt
