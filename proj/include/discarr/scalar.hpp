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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace discarr {

using BigInt = mpz_class;
using Rational = mpq_class;

// Exact element of Q or of a real quadratic field Q(√d), stored as a + b√d.
//
// The radicand doubles as the field tag: 0 means the scalar lives in Q and
// b is always zero. A rational-tagged scalar combines freely with a scalar
// of any tag (Q embeds into every Q(√d)); two different nonzero radicands
// raise FieldMismatch. The tag is sticky: a quadratic-tagged result keeps
// its radicand even when b cancels to zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT: literals read naturally
  explicit Scalar(Rational value);

  // d must be a squarefree integer >= 2.
  static Scalar quadratic(Rational a, Rational b, long d);

  // Validates d as a radicand (0 is accepted and means Q).
  static void check_radicand(long d);

  long radicand() const { return d_; }
  bool is_rational_field() const { return d_ == 0; }
  // True when the value is rational, whatever the tag.
  bool is_rational_value() const { return b_ == 0; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // Sign of the real number a + b√d.
  int sign() const;

  // Same value re-tagged into Q(√d). Throws FieldMismatch if the scalar
  // already carries a different nonzero radicand.
  Scalar in_field(long d) const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  // Multiplication by a rational keeps the tag of *this.
  Scalar& scale(const Rational& factor);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // Value equality; throws FieldMismatch on two different nonzero radicands.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  // "p/q" or "p" for rational values; "a + b*sqrt(d)" style otherwise.
  std::string to_string() const;

 private:
  static long join(long d1, long d2);

  Rational a_;
  Rational b_;
  long d_ = 0;
};

// Arbitrary but fixed total order (by radicand, then a, then b), used for
// canonical keys. Not the real ordering; see Scalar::sign for that.
int key_compare(const Scalar& lhs, const Scalar& rhs);

// Parses "p/q", "p", or "-p/q" into a reduced rational.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& value);

}  // namespace discarr
