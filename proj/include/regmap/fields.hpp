#pragma once

// Prime-field and quadratic-extension arithmetic used by the group
// constructions and the number-theoretic side conditions of the
// classification.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace regmap {

/// Deterministic trial-division primality test; fine for the ranges used here.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest divisor of m coprime to p.
std::uint64_t coprime_part(std::uint64_t m, std::uint64_t p);

/// Largest power of p dividing m.
std::uint64_t prime_power_part(std::uint64_t m, std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Throws InvalidArgument unless p is an odd prime.
void require_odd_prime(std::uint64_t p, const char* what);

/// Residue modulo an odd prime.
class FpElement {
 public:
  FpElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpElement operator+(const FpElement& o) const;
  FpElement operator-(const FpElement& o) const;
  FpElement operator*(const FpElement& o) const;
  FpElement operator-() const;
  FpElement pow(std::uint64_t e) const;
  /// Throws InvalidArgument on zero.
  FpElement inverse() const;

  friend bool operator==(const FpElement&, const FpElement&) = default;

 private:
  void check_same_field(const FpElement& o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// True iff x is a square in F_p (0 counts).
bool quadratic_residue(const FpElement& x);

/// Smallest positive quadratic non-residue modulo p.
std::uint32_t smallest_nonresidue(std::uint32_t p);

/// Element a + b*w of F_{p^2} where w^2 = the field's non-residue.
struct Fp2Element {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const Fp2Element&, const Fp2Element&) = default;
};

/// F_{p^2} = F_p[w] / (w^2 - delta), delta the smallest non-residue.
class Fp2Field {
 public:
  explicit Fp2Field(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t nonresidue() const noexcept { return delta_; }
  std::uint64_t multiplicative_order() const noexcept {
    return static_cast<std::uint64_t>(p_) * p_ - 1;
  }

  Fp2Element one() const { return {1, 0}; }
  Fp2Element embed(std::uint32_t a) const { return {a % p_, 0}; }
  Fp2Element add(const Fp2Element& x, const Fp2Element& y) const;
  Fp2Element mul(const Fp2Element& x, const Fp2Element& y) const;
  Fp2Element pow(Fp2Element x, std::uint64_t e) const;
  Fp2Element inverse(const Fp2Element& x) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(const Fp2Element& x) const;
  /// Generator of the cyclic group F_{p^2}^*, first in (b, a) scan order.
  Fp2Element generator() const;
  /// Every element of exact multiplicative order k (test helper, O(p^2)).
  std::vector<Fp2Element> elements_of_order(std::uint64_t k) const;

 private:
  std::uint32_t p_;
  std::uint32_t delta_;
};

/// Invertible 2x2 matrix over F_p, row-major.
struct Gl2Matrix {
  std::uint32_t p;
  std::array<std::uint32_t, 4> e;

  Gl2Matrix(std::uint32_t modulus, std::array<std::int64_t, 4> entries);

  static Gl2Matrix identity(std::uint32_t p) { return Gl2Matrix(p, {1, 0, 0, 1}); }

  std::uint32_t determinant() const;
  std::uint32_t trace() const { return (e[0] + e[3]) % p; }
  bool is_identity() const { return e[0] == 1 && e[1] == 0 && e[2] == 0 && e[3] == 1; }

  Gl2Matrix operator*(const Gl2Matrix& o) const;

  friend bool operator==(const Gl2Matrix&, const Gl2Matrix&) = default;
};

/// The determinant-one companion matrix [[0, 1], [-1, x]].
Gl2Matrix companion_matrix(const FpElement& x);

/// Least e >= 1 with m^e = I. Throws InvalidArgument on singular input and
/// InternalError past the p(p^2-1) cap.
std::uint64_t matrix_order(const Gl2Matrix& m);

/// Residues x whose companion matrix has order dividing n but not n/2.
struct CompanionTraceSet {
  std::uint64_t n;
  std::uint32_t p;
  std::vector<std::uint32_t> members;  // ascending

  bool contains(std::uint32_t x) const;
};

/// Throws InvalidArgument for odd n or non-prime p.
CompanionTraceSet companion_trace_set(std::uint64_t n, std::uint32_t p);

/// An element of exact multiplicative order k in F_{p^2}; requires k | p^2-1
/// (UnsupportedExtension otherwise). Deterministic: the field generator raised
/// to (p^2-1)/k.
Fp2Element root_of_unity(std::uint64_t k, std::uint32_t p);

/// xi + xi^{-1} for xi a primitive 2*m_{p'}-th root of unity. Throws
/// UnsupportedExtension when 2*m_{p'} does not divide p^2-1 and InternalError
/// when the sum leaves F_p.
FpElement root_trace(std::uint64_t m, std::uint32_t p);

/// (xi + xi^{-1})^2 computed inside F_{p^2} as xi^2 + xi^{-2} + 2. Agrees with
/// root_trace(m,p)^2 whenever the latter is defined, and is also defined when
/// only the square lands in F_p.
FpElement root_trace_squared(std::uint64_t m, std::uint32_t p);

/// Whether 4 - t_m^2 - t_n^2 is a square in F_p.
bool is_admissible_pair(std::uint64_t m, std::uint64_t n, std::uint32_t p);

}  // namespace regmap
