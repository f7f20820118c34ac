#include "liftedrs/field.hpp"

#include <stdexcept>
#include <string>

namespace liftedrs {

namespace gf2 {

int degree(std::uint64_t p) {
  if (p == 0) return -1;
  int d = 0;
  while (p >>= 1) ++d;
  return d;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) {
    a ^= m << (d - dm);
  }
  return a;
}

bool irreducible(std::uint32_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  // Trial division by every polynomial of lower degree >= 1.
  for (std::uint64_t f = 2; degree(f) < d; ++f) {
    if (mod(p, f) == 0) return false;
  }
  return true;
}

std::uint32_t smallest_irreducible(unsigned ell) {
  const std::uint32_t lo = 1u << ell;
  for (std::uint32_t p = lo + 1; p < 2 * lo; p += 2) {
    if (irreducible(p)) return p;
  }
  throw std::logic_error("no irreducible polynomial of degree " + std::to_string(ell));
}

}  // namespace gf2

Field::Field(unsigned ell) : Field(ell, 0, unchecked_tag{}) {
  modulus_ = gf2::smallest_irreducible(ell);
}

Field::Field(unsigned ell, std::uint32_t modulus) : Field(ell, modulus, unchecked_tag{}) {
  if (gf2::degree(modulus) != static_cast<int>(ell)) {
    throw std::invalid_argument("field modulus must have degree ell");
  }
  if (!gf2::irreducible(modulus)) {
    throw std::invalid_argument("field modulus is reducible");
  }
}

Field::Field(unsigned ell, std::uint32_t modulus, unchecked_tag)
    : ell_(ell), q_(1u << ell), modulus_(modulus) {
  if (ell < 1 || ell > 16) {
    throw std::invalid_argument("field exponent ell must be in 1..16");
  }
}

Field Field::with_unchecked_modulus(unsigned ell, std::uint32_t modulus) {
  return Field(ell, modulus, unchecked_tag{});
}

FieldElem Field::elem(std::uint32_t value) const {
  if (value >= q_) {
    throw std::invalid_argument("element value out of range for GF(2^" +
                                std::to_string(ell_) + ")");
  }
  return FieldElem(static_cast<std::uint16_t>(value), *this);
}

std::uint16_t Field::mul(std::uint16_t a, std::uint16_t b) const {
  std::uint32_t acc = 0;
  std::uint32_t x = a;
  std::uint32_t y = b;
  while (y) {
    if (y & 1) acc ^= x;
    x <<= 1;
    if (x & q_) x ^= modulus_;
    y >>= 1;
  }
  return static_cast<std::uint16_t>(acc);
}

std::uint16_t Field::pow(std::uint16_t a, std::uint64_t e) const {
  std::uint16_t result = 1;
  std::uint16_t base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint16_t Field::inv(std::uint16_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

namespace {

const Field& common_field(const FieldElem& a, const FieldElem& b) {
  if (a.field == nullptr || b.field == nullptr) {
    throw std::logic_error("operation on detached field element");
  }
  if (!(*a.field == *b.field)) {
    throw std::invalid_argument("field elements from different fields");
  }
  return *a.field;
}

}  // namespace

FieldElem FieldElem::operator+(FieldElem other) const {
  const Field& f = common_field(*this, other);
  return FieldElem(f.add(value, other.value), f);
}

FieldElem FieldElem::operator*(FieldElem other) const {
  const Field& f = common_field(*this, other);
  return FieldElem(f.mul(value, other.value), f);
}

FieldElem FieldElem::inverse() const {
  if (field == nullptr) throw std::logic_error("operation on detached field element");
  return FieldElem(field->inv(value), *field);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  if (field == nullptr) throw std::logic_error("operation on detached field element");
  return FieldElem(field->pow(value, e), *field);
}

FieldElem mul(FieldElem a, FieldElem b) { return a * b; }
FieldElem inv(FieldElem a) { return a.inverse(); }
Field make_field(unsigned ell) { return Field(ell); }

UniPoly UniPoly::from_values(const Field& f, std::vector<std::uint16_t> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() > f.q()) {
    throw std::invalid_argument("polynomial degree must stay below q");
  }
  for (std::uint16_t c : coeffs) {
    if (c >= f.q()) throw std::invalid_argument("coefficient out of range");
  }
  UniPoly p(f);
  p.coeffs_ = std::move(coeffs);
  return p;
}

std::uint16_t UniPoly::eval_value(std::uint16_t x) const {
  std::uint16_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

FieldElem UniPoly::eval(FieldElem x) const {
  if (x.field == nullptr || !(*x.field == *field_)) {
    throw std::invalid_argument("evaluation point from a different field");
  }
  return FieldElem(eval_value(x.value), *field_);
}

UniPoly interpolate(const std::vector<std::pair<FieldElem, FieldElem>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const Field& f = common_field(points.front().first, points.front().second);
  const std::size_t n = points.size();
  if (n > f.q()) throw std::invalid_argument("more interpolation points than field elements");
  for (const auto& [x, y] : points) {
    common_field(x, y);
    common_field(x, points.front().first);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first.value == points[j].first.value) {
        throw std::invalid_argument("duplicate x coordinate in interpolation");
      }
    }
  }

  // Master numerator N(T) = prod_i (T + x_i); degree n, coefficient vector
  // kept low-to-high. Subtraction is addition in characteristic 2.
  std::vector<std::uint16_t> master(n + 1, 0);
  master[0] = 1;
  std::size_t mdeg = 0;
  for (const auto& [x, y] : points) {
    for (std::size_t k = mdeg + 1; k-- > 0;) {
      std::uint16_t up = (k > 0) ? master[k - 1] : 0;
      master[k] = f.add(up, f.mul(master[k], x.value));
    }
    master[mdeg + 1] = 1;
    ++mdeg;
  }

  std::vector<std::uint16_t> acc(n, 0);
  std::vector<std::uint16_t> quotient(n, 0);
  for (const auto& [x, y] : points) {
    // Synthetic division: quotient = N(T) / (T + x), degree n-1.
    std::uint16_t carry = 0;
    for (std::size_t k = n; k-- > 0;) {
      carry = f.add(master[k + 1], f.mul(carry, x.value));
      quotient[k] = carry;
    }
    std::uint16_t denom = 0;
    for (std::size_t k = n; k-- > 0;) {
      denom = f.add(f.mul(denom, x.value), quotient[k]);
    }
    const std::uint16_t scale = f.mul(y.value, f.inv(denom));
    for (std::size_t k = 0; k < n; ++k) {
      acc[k] = f.add(acc[k], f.mul(scale, quotient[k]));
    }
  }
  return UniPoly::from_values(f, std::move(acc));
}

FieldElem eval_poly(const UniPoly& p, FieldElem x) { return p.eval(x); }

}  // namespace liftedrs
