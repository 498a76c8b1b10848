// Copyright 2026 The qdag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDAG_VALUE_HPP
#define QDAG_VALUE_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace qdag {

/// A DP cell: a finite signed integer or one of the two infinities. Bits are
/// the finite values 0 and 1.
class Value {
 public:
  enum class Kind : std::uint8_t { kNegInf = 0, kFinite = 1, kPosInf = 2 };

  constexpr Value() = default;
  constexpr Value(std::int64_t v) : kind_(Kind::kFinite), v_(v) {}  // NOLINT

  static constexpr Value neg_inf() { return Value(Kind::kNegInf); }
  static constexpr Value pos_inf() { return Value(Kind::kPosInf); }
  static constexpr Value bit(bool b) { return Value(b ? 1 : 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_bit() const { return is_finite() && (v_ == 0 || v_ == 1); }

  /// Finite payload; 0 for the infinities.
  constexpr std::int64_t finite() const { return is_finite() ? v_ : 0; }

  constexpr std::strong_ordering operator<=>(const Value& o) const {
    if (kind_ != o.kind_) return kind_ <=> o.kind_;
    if (!is_finite()) return std::strong_ordering::equal;
    return v_ <=> o.v_;
  }
  constexpr bool operator==(const Value& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
  }

  /// Saturating: an infinity absorbs any finite addend. Adding opposite
  /// infinities has no meaning here and returns the left operand.
  friend constexpr Value operator+(const Value& a, const Value& b) {
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return Value(a.v_ + b.v_);
  }

  std::string to_string() const;

 private:
  explicit constexpr Value(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  std::int64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace qdag

#endif  // QDAG_VALUE_HPP
