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

#ifndef ASRED_FIELD_TOWER_HPP
#define ASRED_FIELD_TOWER_HPP

// Exact arithmetic in the tower  F_p  ⊆  K = F_{p^e}  ⊆  L = K(u_1, ..., u_k).
//
// K is perfect, and L^{p^∞} = K holds for this concrete L, so every
// p-th power question asked by the reduction engine is decidable here:
// a reduced fraction is a p-th power in L iff numerator and (monic)
// denominator are, and a polynomial is a p-th power iff every exponent is
// divisible by p.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asred {

using BigInt = boost::multiprecision::cpp_int;

/// Element of F_{p^e}: coefficients c[0..e) of a polynomial of degree < e in
/// the generator g, each reduced mod p.
struct FqElem {
  std::vector<std::uint64_t> c;

  friend auto operator<=>(const FqElem&, const FqElem&) = default;
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

bool is_prime(std::uint64_t n);

/// The base field K = F_{p^e} plus the ordered variable list of L.
///
/// Instances are immutable and shared through FieldRef; every Poly and
/// RatFunc carries the FieldRef it lives in.
class FieldParams {
public:
  /// `modulus` holds coefficients low degree first, size e + 1, monic.
  /// It must be empty when e == 1. Throws PreconditionError on any violated
  /// invariant (composite p, reducible modulus, duplicate variable, ...).
  static std::shared_ptr<const FieldParams> make(std::uint64_t p, unsigned e,
                                                 std::vector<std::uint64_t> modulus,
                                                 std::vector<std::string> vars);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(std::uint64_t n) const;
  FqElem from_bigint(const BigInt& n) const;
  /// The class of g in F_p[g]/(modulus). Requires e > 1.
  FqElem generator() const;

  bool is_zero(const FqElem& a) const;
  bool is_one(const FqElem& a) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;
  FqElem pow(const FqElem& a, std::uint64_t n) const;
  /// a^p
  FqElem frobenius(const FqElem& a) const;
  /// The unique b with b^p = a, computed as a^{p^{e-1}}.
  FqElem pth_root(const FqElem& a) const;

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_ && a.vars_ == b.vars_;
  }

private:
  FieldParams() = default;

  std::uint64_t addmod(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t submod(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_ = 0;
  unsigned e_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::string> vars_;
};

using FieldRef = std::shared_ptr<const FieldParams>;

/// Free-function form of FieldParams::pth_root.
inline FqElem fq_pth_root(const FqElem& a, const FieldParams& fp) { return fp.pth_root(a); }

/// Exponent vector over the k variables of L.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded-lexicographic order, largest first (so map::begin() is the leading term).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in K[u_1, ..., u_k]. Zero coefficients are never stored.
class Poly {
public:
  using Terms = std::map<Monomial, FqElem, GrlexGreater>;

  Poly() = default;
  explicit Poly(FieldRef field) : field_(std::move(field)) {}

  static Poly constant(const FieldRef& field, const FqElem& c);
  static Poly from_int(const FieldRef& field, std::uint64_t n);
  static Poly variable(const FieldRef& field, std::size_t index);
  static Poly term(const FieldRef& field, Monomial m, const FqElem& c);

  const FieldRef& field() const { return field_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Coefficient of the monomial 1.
  FqElem constant_coeff() const;

  /// Leading term under grlex. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const FqElem& leading_coeff() const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Largest variable index occurring in any term, or nullopt for constants.
  std::optional<std::size_t> highest_var() const;
  /// Sum of the terms whose exponent in `var` equals `d`, with that exponent cleared.
  Poly coeff_in(std::size_t var, unsigned d) const;
  /// Multiply by var^k.
  Poly shifted(std::size_t var, unsigned k) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const FqElem& c);

  Poly scaled(const FqElem& c) const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
  FieldRef field_;
  Terms terms_;
};

Poly pow(const Poly& a, unsigned n);

/// Multivariate division by a single divisor under grlex: a = q*b + r with no
/// term of r divisible by the leading monomial of b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b, throwing InvariantError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic greatest common divisor (recursive primitive PRS over K[u_1..u_{v-1}][u_v]).
/// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// f^p: exponents times p, coefficients to the p.
Poly frobenius(const Poly& f);

/// g with g^p = f, present iff every exponent of f is divisible by p.
std::optional<Poly> poly_pth_root(const Poly& f);

/// Element of L in canonical form: gcd(num, den) = 1 and den monic under grlex.
/// Zero is 0/1. Structural equality is field equality.
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(const FieldRef& field);
  explicit RatFunc(Poly num);
  /// Canonicalizes. Throws PreconditionError on a zero denominator.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const FieldRef& field, const FqElem& c);
  static RatFunc from_int(const FieldRef& field, std::uint64_t n);
  static RatFunc variable(const FieldRef& field, std::size_t index);

  const FieldRef& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  RatFunc inverse() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  struct Canonical {};
  RatFunc(Canonical, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  friend RatFunc frobenius(const RatFunc& f);
  friend std::optional<RatFunc> ratfunc_pth_root(const RatFunc& f);

  Poly num_;
  Poly den_;
};

RatFunc pow(const RatFunc& a, unsigned n);

/// f^p.
RatFunc frobenius(const RatFunc& f);

/// g with g^p = f, present iff f ∈ L^p.
std::optional<RatFunc> ratfunc_pth_root(const RatFunc& f);

/// f ∈ K: denominator 1 and constant numerator.
bool is_in_K(const RatFunc& f);

/// max { i | c ∈ L^{p^i} }, which is infinite exactly for c ∈ K.
class Depth {
public:
  static Depth infinite() { return Depth(); }
  static Depth finite(unsigned v) { return Depth(v); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Requires a finite depth.
  unsigned value() const;
  std::string to_string() const;

  friend bool operator==(const Depth&, const Depth&) = default;

private:
  Depth() = default;
  explicit Depth(unsigned v) : value_(v) {}
  std::optional<unsigned> value_;
};

/// Throws PreconditionError for c = 0.
Depth depth(const RatFunc& c);

}  // namespace asred

#endif  // ASRED_FIELD_TOWER_HPP
