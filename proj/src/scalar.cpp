// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discarr/scalar.hpp"

#include <sstream>

#include "discarr/errors.hpp"

namespace discarr {

Scalar::Scalar(Rational value) : a_(std::move(value)) { a_.canonicalize(); }

void Scalar::check_radicand(long d) {
  if (d == 0) return;
  if (d < 2) {
    throw DegenerateInput("radicand must be a squarefree integer >= 2, got " +
                          std::to_string(d));
  }
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) {
      throw DegenerateInput("radicand " + std::to_string(d) +
                            " is not squarefree");
    }
  }
}

Scalar Scalar::quadratic(Rational a, Rational b, long d) {
  check_radicand(d);
  if (d == 0 && b != 0) {
    throw DegenerateInput("rational field cannot carry an irrational part");
  }
  Scalar s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.a_.canonicalize();
  s.b_.canonicalize();
  s.d_ = d;
  return s;
}

long Scalar::join(long d1, long d2) {
  if (d1 == d2 || d2 == 0) return d1;
  if (d1 == 0) return d2;
  throw FieldMismatch("cannot combine Q(sqrt(" + std::to_string(d1) +
                      ")) with Q(sqrt(" + std::to_string(d2) + "))");
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d*b^2.
  const Rational a2 = a_ * a_;
  const Rational db2 = b_ * b_ * d_;
  if (a2 == db2) return 0;  // unreachable for squarefree d
  return a2 > db2 ? sa : sb;
}

Scalar Scalar::in_field(long d) const {
  Scalar s = *this;
  s.d_ = join(d_, d);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DegenerateInput("division by zero");
  Scalar s;
  s.d_ = d_;
  if (b_ == 0) {
    s.a_ = 1 / a_;
    return s;
  }
  // (a - b√d) / (a^2 - d b^2); the norm is nonzero because √d is irrational.
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  s.a_ = a_ / norm;
  s.b_ = -b_ / norm;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -s.a_;
  if (s.b_ != 0) s.b_ = -s.b_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  d_ = join(d_, rhs.d_);
  a_ += rhs.a_;
  if (rhs.b_ != 0) b_ += rhs.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  d_ = join(d_, rhs.d_);
  a_ -= rhs.a_;
  if (rhs.b_ != 0) b_ -= rhs.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  d_ = join(d_, rhs.d_);
  if (b_ == 0 && rhs.b_ == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.b_ == 0) {
    if (rhs.a_ == 0) throw DegenerateInput("division by zero");
    d_ = join(d_, rhs.d_);
    a_ /= rhs.a_;
    if (b_ != 0) b_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

Scalar& Scalar::scale(const Rational& factor) {
  a_ *= factor;
  if (b_ != 0) b_ *= factor;
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  Scalar::join(lhs.d_, rhs.d_);
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::string Scalar::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  std::ostringstream out;
  if (a_ != 0) out << rational_to_string(a_) << (sgn(b_) > 0 ? " + " : " - ");
  else if (sgn(b_) < 0) out << "-";
  const Rational mag = abs(b_);
  if (mag != 1) out << rational_to_string(mag) << "*";
  out << "sqrt(" << d_ << ")";
  return out.str();
}

int key_compare(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.radicand() != rhs.radicand()) {
    return lhs.radicand() < rhs.radicand() ? -1 : 1;
  }
  if (const int c = cmp(lhs.a(), rhs.a())) return c < 0 ? -1 : 1;
  if (const int c = cmp(lhs.b(), rhs.b())) return c < 0 ? -1 : 1;
  return 0;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("bad rational literal '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) {
      throw ParseError("bad rational literal '" + text + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw ParseError("bad rational literal '" + text + "'");
      }
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace discarr
