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

#include <algorithm>
#include <numeric>

namespace asred {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
  return q;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

const FieldRef& common_field(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field()) throw InvariantError("polynomial without a field");
  if (a.field() != b.field() && !(*a.field() == *b.field()))
    throw PreconditionError("polynomials over different fields");
  return a.field();
}

}  // namespace

Poly Poly::constant(const FieldRef& field, const FqElem& c) {
  return term(field, Monomial(field->nvars(), 0), c);
}

Poly Poly::from_int(const FieldRef& field, std::uint64_t n) { return constant(field, field->from_int(n)); }

Poly Poly::variable(const FieldRef& field, std::size_t index) {
  Monomial m(field->nvars(), 0);
  m.at(index) = 1;
  return term(field, std::move(m), field->one());
}

Poly Poly::term(const FieldRef& field, Monomial m, const FqElem& c) {
  Poly r(field);
  if (!field->is_zero(c)) r.terms_.emplace(std::move(m), c);
  return r;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && asred::total_degree(terms_.begin()->first) == 0);
}

bool Poly::is_one() const { return is_constant() && !is_zero() && field_->is_one(terms_.begin()->second); }

FqElem Poly::constant_coeff() const {
  Monomial zero(field_->nvars(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? field_->zero() : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw InvariantError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const FqElem& Poly::leading_coeff() const {
  if (terms_.empty()) throw InvariantError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : asred::total_degree(terms_.begin()->first);
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::optional<std::size_t> Poly::highest_var() const {
  std::optional<std::size_t> best;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = m.size(); i-- > 0;)
      if (m[i] != 0) {
        if (!best || i > *best) best = i;
        break;
      }
  return best;
}

Poly Poly::coeff_in(std::size_t var, unsigned d) const {
  Poly r(field_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != d) continue;
    Monomial mm = m;
    mm[var] = 0;
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

Poly Poly::shifted(std::size_t var, unsigned k) const {
  Poly r(field_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[var] += k;
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

void Poly::add_term(const Monomial& m, const FqElem& c) {
  if (field_->is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = field_->add(it->second, c);
  if (field_->is_zero(it->second)) terms_.erase(it);
}

Poly Poly::scaled(const FqElem& c) const {
  Poly r(field_);
  if (field_->is_zero(c)) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, field_->mul(a, c));
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_coeff()));
}

Poly Poly::operator-() const {
  Poly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_->neg(c));
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  common_field(a, b);
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  const auto& f = common_field(a, b);
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, f->neg(c));
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& f = common_field(a, b);
  Poly r(f);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), f->mul(ca, cb));
  return r;
}

Poly pow(const Poly& a, unsigned n) {
  Poly r = Poly::from_int(a.field(), 1);
  Poly base = a;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const auto& f = common_field(a, b);
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const Monomial& lm_b = b.leading_monomial();
  const FqElem lc_b_inv = f->inv(b.leading_coeff());

  Poly q(f), r(f), rest = a;
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const FqElem lc = rest.leading_coeff();
    if (divides(lm_b, lm)) {
      Poly t = Poly::term(f, monomial_quotient(lm, lm_b), f->mul(lc, lc_b_inv));
      q.add_term(t.leading_monomial(), t.leading_coeff());
      rest = rest - t * b;
    } else {
      r.add_term(lm, lc);
      rest.add_term(lm, f->neg(lc));
    }
  }
  return {std::move(q), std::move(r)};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

namespace {

Poly gcd_impl(const Poly& a, const Poly& b);

// gcd of all coefficients of `a` viewed as a polynomial in `var`.
Poly content_in(const Poly& a, std::size_t var) {
  Poly g(a.field());
  const unsigned d = a.degree_in(var);
  for (unsigned i = 0; i <= d; ++i) {
    Poly c = a.coeff_in(var, i);
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& a, std::size_t var) {
  if (a.is_zero()) return a;
  return exact_div(a, content_in(a, var));
}

// Pseudo-remainder in `var`: lc(b)^k * a - Q * b with deg_var < deg_var(b).
Poly prem_in(const Poly& a, const Poly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Poly lcb = b.coeff_in(var, db);
  Poly r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    const Poly lcr = r.coeff_in(var, dr);
    r = lcb * r - (lcr * b).shifted(var, dr - db);
  }
  return r;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::from_int(a.field(), 1);

  const std::size_t var = std::max(a.highest_var().value_or(0), b.highest_var().value_or(0));
  if (a.degree_in(var) == 0) return gcd_impl(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd_impl(content_in(a, var), b);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  Poly pa = exact_div(a, ca);
  Poly pb = exact_div(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  // Primitive PRS; the last nonzero element is the primitive gcd.
  for (;;) {
    Poly r = prem_in(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = Poly::from_int(a.field(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
  return (gcd_impl(ca, cb) * pb).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  common_field(a, b);
  return gcd_impl(a, b);
}

Poly frobenius(const Poly& f) {
  const auto& fp = f.field();
  Poly r(fp);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    for (auto& x : mm) {
      const std::uint64_t scaled = std::uint64_t{x} * fp->p();
      if (x != 0 && (scaled / fp->p() != x || scaled > UINT32_MAX))
        throw PreconditionError("monomial exponent overflow in Frobenius");
      x = static_cast<std::uint32_t>(scaled);
    }
    r.add_term(mm, fp->frobenius(c));
  }
  return r;
}

std::optional<Poly> poly_pth_root(const Poly& f) {
  const auto& fp = f.field();
  const std::uint64_t p = fp->p();
  Poly r(fp);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    for (auto& x : mm) {
      if (x % p != 0) return std::nullopt;
      x = static_cast<std::uint32_t>(x / p);
    }
    r.add_term(mm, fp->pth_root(c));
  }
  return r;
}

}  // namespace asred
