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
#include <cctype>
#include <set>

namespace asred {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_raw(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_raw(u64 a, u64 n, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod_raw(r, a, m);
    a = mulmod_raw(a, a, m);
    n >>= 1;
  }
  return r;
}

// Dense polynomials over F_p, low degree first, no trailing zeros (zero = {}).
using Dense = std::vector<u64>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_sub(Dense a, const Dense& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Dense dense_mul(const Dense& a, const Dense& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod_raw(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b, u64 p) {
  const u64 lc_inv = powmod_raw(b.back(), p - 2, p);
  Dense q;
  trim(a);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const u64 c = mulmod_raw(a.back(), lc_inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = (a[i + shift] + p - mulmod_raw(c, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  return {q, a};
}

Dense dense_gcd(Dense a, Dense b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = dense_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_raw(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_raw(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::shared_ptr<const FieldParams> FieldParams::make(std::uint64_t p, unsigned e,
                                                     std::vector<std::uint64_t> modulus,
                                                     std::vector<std::string> vars) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (p >= (u64{1} << 62)) throw PreconditionError("p must be below 2^62");
  if (e < 1) throw PreconditionError("extension degree e must be at least 1");
  if (vars.empty()) throw PreconditionError("at least one variable is required");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw PreconditionError("invalid variable name '" + v + "'");
    if (e > 1 && v == "g")
      throw PreconditionError("variable name 'g' is reserved for the generator of F_{p^e}");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }

  std::shared_ptr<FieldParams> fp(new FieldParams());
  fp->p_ = p;
  fp->e_ = e;
  fp->vars_ = std::move(vars);

  if (e == 1) {
    if (!modulus.empty()) throw PreconditionError("a modulus must not be given when e = 1");
    return fp;
  }
  if (modulus.size() != e + 1)
    throw PreconditionError("modulus must have degree e = " + std::to_string(e));
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw PreconditionError("modulus must be monic");
  fp->modulus_ = modulus;

  // Ben-Or: f of degree e is irreducible iff gcd(g^{p^i} - g, f) = 1 for 1 <= i <= e/2.
  FqElem h = fp->generator();
  const Dense f(modulus.begin(), modulus.end());
  for (unsigned i = 1; i <= e / 2; ++i) {
    h = fp->frobenius(h);
    Dense hd(h.c.begin(), h.c.end());
    trim(hd);
    hd = dense_sub(hd, Dense{0, 1}, p);
    Dense g = dense_gcd(f, hd, p);
    if (g.size() != 1) throw PreconditionError("modulus is reducible over F_p");
  }
  return fp;
}

std::uint64_t FieldParams::addmod(std::uint64_t a, std::uint64_t b) const {
  u64 s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t FieldParams::submod(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + p_ - b;
}

std::uint64_t FieldParams::mulmod(std::uint64_t a, std::uint64_t b) const {
  return mulmod_raw(a, b, p_);
}

FqElem FieldParams::zero() const { return FqElem{std::vector<u64>(e_, 0)}; }

FqElem FieldParams::one() const { return from_int(1); }

FqElem FieldParams::from_int(std::uint64_t n) const {
  FqElem r = zero();
  r.c[0] = n % p_;
  return r;
}

FqElem FieldParams::from_bigint(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return from_int(static_cast<u64>(r));
}

FqElem FieldParams::generator() const {
  if (e_ < 2) throw PreconditionError("the generator g exists only when e > 1");
  FqElem r = zero();
  r.c[1] = 1;
  return r;
}

bool FieldParams::is_zero(const FqElem& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](u64 x) { return x == 0; });
}

bool FieldParams::is_one(const FqElem& a) const {
  if (a.c.empty() || a.c[0] != 1) return false;
  return std::all_of(a.c.begin() + 1, a.c.end(), [](u64 x) { return x == 0; });
}

FqElem FieldParams::add(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (unsigned i = 0; i < e_; ++i) r.c[i] = addmod(a.c[i], b.c[i]);
  return r;
}

FqElem FieldParams::sub(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (unsigned i = 0; i < e_; ++i) r.c[i] = submod(a.c[i], b.c[i]);
  return r;
}

FqElem FieldParams::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FieldParams::mul(const FqElem& a, const FqElem& b) const {
  if (e_ == 1) return FqElem{{mulmod(a.c[0], b.c[0])}};
  std::vector<u64> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = addmod(prod[i + j], mulmod(a.c[i], b.c[j]));
  }
  // Reduce by the monic modulus from the top down.
  for (std::size_t d = prod.size() - 1; d >= e_; --d) {
    const u64 c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < e_; ++i) prod[d - e_ + i] = submod(prod[d - e_ + i], mulmod(c, modulus_[i]));
  }
  prod.resize(e_);
  return FqElem{std::move(prod)};
}

FqElem FieldParams::inv(const FqElem& a) const {
  if (is_zero(a)) throw PreconditionError("division by zero in F_q");
  if (e_ == 1) return FqElem{{powmod_raw(a.c[0], p_ - 2, p_)}};

  // Extended Euclid in F_p[g]: track s with s*a ≡ r (mod modulus).
  Dense r0(modulus_.begin(), modulus_.end());
  Dense r1(a.c.begin(), a.c.end());
  trim(r1);
  Dense s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = dense_divmod(r0, r1, p_);
    Dense s = dense_sub(s0, dense_mul(q, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw InvariantError("non-invertible element: modulus is not irreducible");
  const u64 scale = powmod_raw(r0[0], p_ - 2, p_);
  FqElem out = zero();
  for (std::size_t i = 0; i < s0.size(); ++i) out.c[i] = mulmod(s0[i], scale);
  return out;
}

FqElem FieldParams::pow(const FqElem& a, std::uint64_t n) const {
  FqElem r = one();
  FqElem base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FqElem FieldParams::frobenius(const FqElem& a) const {
  if (e_ == 1) return a;
  return pow(a, p_);
}

FqElem FieldParams::pth_root(const FqElem& a) const {
  FqElem r = a;
  for (unsigned i = 1; i < e_; ++i) r = frobenius(r);
  return r;
}

}  // namespace asred
