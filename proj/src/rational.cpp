#include "orbifold/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "orbifold/error.hpp"

namespace orbifold {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational::Rational(long long num, long long den) {
  *this = from_i128(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_i128(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_i128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational division by zero");
  }
  *this = from_i128(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::SyntaxError, "not a rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::NoMirrors: return "NoMirrors";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::IncompatibleComplex: return "IncompatibleComplex";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::ClosureBoundExceeded: return "ClosureBoundExceeded";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::ChiMismatch: return "ChiMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::BadIntervals: return "BadIntervals";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::BadOrbifold: return "BadOrbifold";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::FlatIndeterminate: return "FlatIndeterminate";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace orbifold
