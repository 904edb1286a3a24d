#include <random>

#include "support.hpp"

using namespace testing;

TEST_CASE("scalar examples") {
  CHECK(Scalar::one(Ring::Integer).conj() == Scalar::one(Ring::Integer));
  CHECK(Scalar::one(Ring::Gaussian).conj() == Scalar::one(Ring::Gaussian));
  CHECK(Scalar(Ring::Gaussian, 2, 3).conj() == Scalar(Ring::Gaussian, 2, -3));
  CHECK(Scalar(Ring::Gaussian, 2, 1) * Scalar(Ring::Gaussian, 2, -1) == Scalar(Ring::Gaussian, 5));
}

TEST_CASE("scalar literals") {
  CHECK(Scalar::parse(Ring::Integer, "-3") == Scalar(Ring::Integer, -3));
  CHECK(Scalar::parse(Ring::Gaussian, "2+3i") == Scalar(Ring::Gaussian, 2, 3));
  CHECK(Scalar::parse(Ring::Gaussian, "-i") == Scalar(Ring::Gaussian, 0, -1));
  CHECK(Scalar(Ring::Gaussian, 2, -3).to_string() == "2-3i");
  CHECK(error_kind([] { Scalar::parse(Ring::Integer, "2+3i"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { Scalar::parse(Ring::Integer, "x"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { Scalar(Ring::Integer, 1) + Scalar(Ring::Gaussian, 1); }) == ErrorKind::MixedRings);
}

TEST_CASE("no zero divisors among small Gaussian integers") {
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      Scalar r(Ring::Gaussian, a, b);
      for (int c = -5; c <= 5; ++c) {
        for (int d = -5; d <= 5; ++d) {
          Scalar s(Ring::Gaussian, c, d);
          if ((r * s).is_zero()) REQUIRE((r.is_zero() || s.is_zero()));
        }
      }
    }
  }
}

TEST_CASE("conjugation laws on random pairs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    Scalar r(Ring::Gaussian, entry(rng), entry(rng));
    Scalar s(Ring::Gaussian, entry(rng), entry(rng));
    REQUIRE(r.conj().conj() == r);
    REQUIRE((r * s).conj() == r.conj() * s.conj());
    REQUIRE(Scalar::parse(Ring::Gaussian, r.to_string()) == r);
  }
}

TEST_CASE("big integers do not overflow") {
  Scalar big = Scalar::parse(Ring::Integer, "123456789012345678901234567890");
  CHECK((big * big).to_string() == "15241578753238836750495351562536198787501905199875019052100");
}
