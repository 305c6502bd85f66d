#include "regmap/fields.hpp"

#include <algorithm>
#include <string>

#include "regmap/errors.hpp"

namespace regmap {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (e) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t coprime_part(std::uint64_t m, std::uint64_t p) {
  if (m == 0) return 0;
  while (m % p == 0) m /= p;
  return m;
}

std::uint64_t prime_power_part(std::uint64_t m, std::uint64_t p) {
  if (m == 0) return 0;
  return m / coprime_part(m, p);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

void require_odd_prime(std::uint64_t p, const char* what) {
  if (p == 2 || !is_prime(p))
    throw InvalidArgument(std::string(what) + " must be an odd prime, got " + std::to_string(p));
}

// ---------------------------------------------------------------- FpElement

FpElement::FpElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  require_odd_prime(modulus, "modulus");
  value_ = reduce(value, modulus);
}

void FpElement::check_same_field(const FpElement& o) const {
  if (o.modulus_ != modulus_)
    throw InvalidArgument("mixed moduli " + std::to_string(modulus_) + " and " +
                          std::to_string(o.modulus_));
}

FpElement FpElement::operator+(const FpElement& o) const {
  check_same_field(o);
  return FpElement(static_cast<std::int64_t>(value_) + o.value_, modulus_);
}

FpElement FpElement::operator-(const FpElement& o) const {
  check_same_field(o);
  return FpElement(static_cast<std::int64_t>(value_) - o.value_, modulus_);
}

FpElement FpElement::operator*(const FpElement& o) const {
  check_same_field(o);
  return FpElement(mulmod(value_, o.value_, modulus_), modulus_);
}

FpElement FpElement::operator-() const { return FpElement(-static_cast<std::int64_t>(value_), modulus_); }

FpElement FpElement::pow(std::uint64_t e) const { return FpElement(powmod(value_, e, modulus_), modulus_); }

FpElement FpElement::inverse() const {
  if (value_ == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(modulus_));
  return pow(modulus_ - 2);
}

bool quadratic_residue(const FpElement& x) {
  if (x.is_zero()) return true;
  return x.pow((x.modulus() - 1) / 2).value() == 1;
}

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  require_odd_prime(p, "p");
  for (std::uint32_t d = 2; d < p; ++d)
    if (!quadratic_residue(FpElement(d, p))) return d;
  throw InternalError("no quadratic non-residue modulo " + std::to_string(p));
}

// ----------------------------------------------------------------- Fp2Field

Fp2Field::Fp2Field(std::uint32_t p) : p_(p), delta_(smallest_nonresidue(p)) {}

Fp2Element Fp2Field::add(const Fp2Element& x, const Fp2Element& y) const {
  return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}

Fp2Element Fp2Field::mul(const Fp2Element& x, const Fp2Element& y) const {
  const std::uint64_t p = p_;
  std::uint64_t a = (static_cast<std::uint64_t>(x.a) * y.a + static_cast<std::uint64_t>(x.b) * y.b % p * delta_) % p;
  std::uint64_t b = (static_cast<std::uint64_t>(x.a) * y.b + static_cast<std::uint64_t>(x.b) * y.a) % p;
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

Fp2Element Fp2Field::pow(Fp2Element x, std::uint64_t e) const {
  Fp2Element r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fp2Element Fp2Field::inverse(const Fp2Element& x) const {
  if (x.a == 0 && x.b == 0) throw InvalidArgument("inverse of zero in F_p^2");
  return pow(x, multiplicative_order() - 1);
}

std::uint64_t Fp2Field::order(const Fp2Element& x) const {
  if (x.a == 0 && x.b == 0) throw InvalidArgument("order of zero in F_p^2");
  std::uint64_t ord = multiplicative_order();
  for (std::uint64_t q : prime_divisors(multiplicative_order())) {
    while (ord % q == 0 && pow(x, ord / q) == one()) ord /= q;
  }
  return ord;
}

Fp2Element Fp2Field::generator() const {
  const std::uint64_t full = multiplicative_order();
  for (std::uint32_t b = 0; b < p_; ++b) {
    for (std::uint32_t a = 0; a < p_; ++a) {
      Fp2Element x{a, b};
      if (a == 0 && b == 0) continue;
      if (order(x) == full) return x;
    }
  }
  throw InternalError("F_p^2 has no generator for p = " + std::to_string(p_));
}

std::vector<Fp2Element> Fp2Field::elements_of_order(std::uint64_t k) const {
  std::vector<Fp2Element> out;
  for (std::uint32_t b = 0; b < p_; ++b)
    for (std::uint32_t a = 0; a < p_; ++a)
      if ((a || b) && order({a, b}) == k) out.push_back({a, b});
  return out;
}

// ---------------------------------------------------------------- Gl2Matrix

Gl2Matrix::Gl2Matrix(std::uint32_t modulus, std::array<std::int64_t, 4> entries) : p(modulus) {
  for (std::size_t i = 0; i < 4; ++i) e[i] = reduce(entries[i], modulus);
}

std::uint32_t Gl2Matrix::determinant() const {
  return reduce(static_cast<std::int64_t>(mulmod(e[0], e[3], p)) - mulmod(e[1], e[2], p), p);
}

Gl2Matrix Gl2Matrix::operator*(const Gl2Matrix& o) const {
  if (o.p != p) throw InvalidArgument("matrix moduli differ");
  auto dot = [&](std::uint32_t x1, std::uint32_t y1, std::uint32_t x2, std::uint32_t y2) {
    return static_cast<std::int64_t>((static_cast<std::uint64_t>(x1) * y1 + static_cast<std::uint64_t>(x2) * y2) % p);
  };
  return Gl2Matrix(p, {dot(e[0], o.e[0], e[1], o.e[2]), dot(e[0], o.e[1], e[1], o.e[3]),
                       dot(e[2], o.e[0], e[3], o.e[2]), dot(e[2], o.e[1], e[3], o.e[3])});
}

Gl2Matrix companion_matrix(const FpElement& x) {
  return Gl2Matrix(x.modulus(), {0, 1, -1, x.value()});
}

std::uint64_t matrix_order(const Gl2Matrix& m) {
  if (m.determinant() == 0) throw InvalidArgument("matrix_order: singular matrix");
  const std::uint64_t p = m.p;
  const std::uint64_t cap = p * (p * p - 1);
  Gl2Matrix power = m;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (power.is_identity()) return e;
    power = power * m;
  }
  throw InternalError("matrix_order: exceeded cap p(p^2-1) = " + std::to_string(cap));
}

bool CompanionTraceSet::contains(std::uint32_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

CompanionTraceSet companion_trace_set(std::uint64_t n, std::uint32_t p) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("n must be even and >= 2, got " + std::to_string(n));
  require_odd_prime(p, "p");
  CompanionTraceSet out{n, p, {}};
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint64_t ord = matrix_order(companion_matrix(FpElement(x, p)));
    if (n % ord == 0 && (n / 2) % ord != 0) out.members.push_back(x);
  }
  return out;
}

// --------------------------------------------------------- roots of unity

Fp2Element root_of_unity(std::uint64_t k, std::uint32_t p) {
  require_odd_prime(p, "p");
  const std::uint64_t full = static_cast<std::uint64_t>(p) * p - 1;
  if (k == 0 || full % k != 0)
    throw UnsupportedExtension("a primitive " + std::to_string(k) + "-th root of unity does not lie in F_" +
                               std::to_string(p) + "^2");
  Fp2Field field(p);
  return field.pow(field.generator(), full / k);
}

namespace {

// (zeta, field) where zeta is the primitive 2*m_{p'}-th root used for m.
std::pair<Fp2Element, Fp2Field> primitive_root_for(std::uint64_t m, std::uint32_t p) {
  if (m == 0) throw InvalidArgument("root_trace: m must be positive");
  const std::uint64_t k = 2 * coprime_part(m, p);
  return {root_of_unity(k, p), Fp2Field(p)};
}

}  // namespace

FpElement root_trace(std::uint64_t m, std::uint32_t p) {
  auto [xi, field] = primitive_root_for(m, p);
  Fp2Element t = field.add(xi, field.inverse(xi));
  if (t.b != 0)
    throw InternalError("root_trace(" + std::to_string(m) + ", " + std::to_string(p) +
                        "): xi + xi^-1 is not in the prime field");
  return FpElement(t.a, p);
}

FpElement root_trace_squared(std::uint64_t m, std::uint32_t p) {
  auto [xi, field] = primitive_root_for(m, p);
  Fp2Element sq = field.mul(xi, xi);
  Fp2Element t2 = field.add(field.add(sq, field.inverse(sq)), field.embed(2));
  if (t2.b != 0)
    throw InternalError("root_trace_squared(" + std::to_string(m) + ", " + std::to_string(p) +
                        "): square of the trace is not in the prime field");
  return FpElement(t2.a, p);
}

bool is_admissible_pair(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  FpElement value = FpElement(4, p) - root_trace_squared(m, p) - root_trace_squared(n, p);
  return quadratic_residue(value);
}

}  // namespace regmap
