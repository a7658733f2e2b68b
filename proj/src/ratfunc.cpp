/* Copyright (C) 2026 The asred Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include "asred/errors.hpp"
#include "asred/field_tower.hpp"

namespace asred {

RatFunc::RatFunc(const FieldRef& field) : num_(field), den_(Poly::from_int(field, 1)) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::from_int(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  const FieldRef& f = num.field();
  if (num.is_zero()) {
    num_ = Poly(f);
    den_ = Poly::from_int(f, 1);
    return;
  }
  if (!den.is_constant()) {
    const Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const FqElem scale = f->inv(den.leading_coeff());
  num_ = num.scaled(scale);
  den_ = den.scaled(scale);
}

RatFunc RatFunc::constant(const FieldRef& field, const FqElem& c) { return RatFunc(Poly::constant(field, c)); }

RatFunc RatFunc::from_int(const FieldRef& field, std::uint64_t n) { return RatFunc(Poly::from_int(field, n)); }

RatFunc RatFunc::variable(const FieldRef& field, std::size_t index) {
  return RatFunc(Poly::variable(field, index));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero in L");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc pow(const RatFunc& a, unsigned n) { return RatFunc(pow(a.num(), n), pow(a.den(), n)); }

RatFunc frobenius(const RatFunc& f) {
  // Coprimality and a monic denominator survive the p-th power map.
  return RatFunc(RatFunc::Canonical{}, frobenius(f.num_), frobenius(f.den_));
}

std::optional<RatFunc> ratfunc_pth_root(const RatFunc& f) {
  auto num = poly_pth_root(f.num_);
  if (!num) return std::nullopt;
  auto den = poly_pth_root(f.den_);
  if (!den) return std::nullopt;
  return RatFunc(RatFunc::Canonical{}, std::move(*num), std::move(*den));
}

bool is_in_K(const RatFunc& f) { return f.den().is_one() && f.num().is_constant(); }

unsigned Depth::value() const {
  if (!value_) throw InvariantError("value of an infinite depth");
  return *value_;
}

std::string Depth::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Depth depth(const RatFunc& c) {
  if (c.is_zero()) throw PreconditionError("depth of zero is undefined");
  if (is_in_K(c)) return Depth::infinite();
  unsigned i = 0;
  RatFunc cur = c;
  while (auto root = ratfunc_pth_root(cur)) {
    cur = std::move(*root);
    ++i;
  }
  return Depth::finite(i);
}

}  // namespace asred
