#include "leavitt/scalar.hpp"

#include <cctype>

#include "leavitt/error.hpp"

namespace leavitt {

std::string_view to_string(Ring ring) {
  return ring == Ring::Integer ? "int" : "gauss";
}

std::string_view to_string(Twist twist) {
  return twist == Twist::Identity ? "identity" : "conjugation";
}

void require_same_ring(Ring a, Ring b) {
  if (a != b) {
    fail(ErrorKind::MixedRings,
         std::string(to_string(a)) + " combined with " + std::string(to_string(b)));
  }
}

Scalar::Scalar(Ring ring, BigInt real, BigInt imag)
    : ring_(ring), real_(std::move(real)), imag_(std::move(imag)) {
  if (ring_ == Ring::Integer && imag_ != 0) {
    fail(ErrorKind::MixedRings, "imaginary part in an integer scalar");
  }
}

Scalar Scalar::conj() const { return Scalar(ring_, real_, -imag_); }

Scalar Scalar::operator-() const { return Scalar(ring_, -real_, -imag_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_);
  return Scalar(a.ring_, a.real_ + b.real_, a.imag_ + b.imag_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.ring_ == Ring::Integer) return Scalar(a.ring_, a.real_ * b.real_);
  return Scalar(a.ring_, a.real_ * b.real_ - a.imag_ * b.imag_,
                a.real_ * b.imag_ + a.imag_ * b.real_);
}

std::string Scalar::to_string() const {
  if (imag_ == 0) return real_.str();
  std::string im;
  if (imag_ == 1) {
    im = "i";
  } else if (imag_ == -1) {
    im = "-i";
  } else {
    im = imag_.str() + "i";
  }
  if (real_ == 0) return im;
  if (im.front() == '-') return real_.str() + im;
  return real_.str() + "+" + im;
}

namespace {

// Reads an optional sign and optional digits starting at pos. Returns false
// when nothing at all was consumed.
bool read_signed(std::string_view text, std::size_t& pos, bool& negative, std::string& digits) {
  std::size_t start = pos;
  negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  digits.clear();
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
  }
  return pos != start;
}

BigInt to_big(bool negative, const std::string& digits) {
  BigInt value = digits.empty() ? BigInt(1) : BigInt(digits);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Scalar Scalar::parse(Ring ring, std::string_view raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  auto bad = [&](const std::string& why) -> Scalar {
    fail(ErrorKind::Parse, "scalar '" + std::string(raw) + "': " + why);
  };
  if (text.empty()) return bad("empty");
  std::size_t pos = 0;
  bool negative = false;
  std::string digits;
  read_signed(text, pos, negative, digits);
  if (pos == text.size()) {
    if (digits.empty()) return bad("no digits");
    return Scalar(ring, to_big(negative, digits));
  }
  if (text[pos] == 'i' && pos + 1 == text.size()) {
    if (ring != Ring::Gaussian) return bad("imaginary unit outside gauss ring");
    return Scalar(ring, 0, to_big(negative, digits));
  }
  if (digits.empty()) return bad("expected digits");
  BigInt real = to_big(negative, digits);
  if (text[pos] != '+' && text[pos] != '-') return bad("unexpected character");
  bool imag_negative = false;
  std::string imag_digits;
  read_signed(text, pos, imag_negative, imag_digits);
  if (pos + 1 != text.size() || text[pos] != 'i') return bad("expected trailing 'i'");
  if (ring != Ring::Gaussian) return bad("imaginary unit outside gauss ring");
  return Scalar(ring, real, to_big(imag_negative, imag_digits));
}

}  // namespace leavitt
