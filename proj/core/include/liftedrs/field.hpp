#ifndef LIFTEDRS_FIELD_HPP
#define LIFTEDRS_FIELD_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace liftedrs {

class Field;

// One element of GF(2^ell). Carries a pointer to its field so that values
// from different fields cannot be combined silently; the Field object must
// outlive its elements.
struct FieldElem {
  std::uint16_t value = 0;
  const Field* field = nullptr;

  FieldElem() = default;
  FieldElem(std::uint16_t v, const Field& f) : value(v), field(&f) {}

  FieldElem operator+(FieldElem other) const;  // XOR, characteristic 2
  FieldElem operator-(FieldElem other) const { return *this + other; }
  FieldElem operator*(FieldElem other) const;
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem& other) const {
    return value == other.value;
  }
  bool is_zero() const { return value == 0; }
};

// GF(2^ell) for 1 <= ell <= 16. Elements are bit-vectors of polynomial
// coefficients over GF(2), reduced modulo an irreducible polynomial of
// degree ell. Immutable after construction; all operations are pure.
class Field {
 public:
  // Uses the smallest irreducible modulus (by integer value of the
  // coefficient bit-vector, restricted to odd constant term) of degree ell,
  // so fields are identical across runs.
  explicit Field(unsigned ell);

  // Explicit modulus; rejects anything that is not an irreducible degree-ell
  // polynomial (checked by trial division over all lower-degree divisors).
  Field(unsigned ell, std::uint32_t modulus);

  // Skips the irreducibility check. Exists so verification suites can feed
  // a corrupted modulus through the arithmetic checks; not for regular use.
  static Field with_unchecked_modulus(unsigned ell, std::uint32_t modulus);

  unsigned ell() const { return ell_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldElem elem(std::uint32_t value) const;
  FieldElem zero() const { return FieldElem(0, *this); }
  FieldElem one() const { return FieldElem(1, *this); }

  // Raw-value arithmetic; inputs must be < q.
  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    return a ^ b;
  }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;
  std::uint16_t inv(std::uint16_t a) const;  // a^(q-2); rejects a = 0

  bool operator==(const Field& other) const {
    return ell_ == other.ell_ && modulus_ == other.modulus_;
  }

 private:
  struct unchecked_tag {};
  Field(unsigned ell, std::uint32_t modulus, unchecked_tag);

  unsigned ell_;
  std::uint32_t q_;
  std::uint32_t modulus_;
};

// Free-function spellings used alongside the operator forms.
FieldElem mul(FieldElem a, FieldElem b);
FieldElem inv(FieldElem a);
Field make_field(unsigned ell);

// Degree reported for the zero polynomial; stands in for -infinity so that
// "degree < d" accepts the zero polynomial for every d >= 0.
inline constexpr int kZeroPolyDegree = -1;

// Univariate polynomial over a Field, coefficients indexed by degree with a
// nonzero leading coefficient (no coefficients at all for the zero
// polynomial). Normalized length never exceeds q.
class UniPoly {
 public:
  explicit UniPoly(const Field& f) : field_(&f) {}
  static UniPoly from_values(const Field& f, std::vector<std::uint16_t> coeffs);

  int degree() const {
    return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Zero for indices past the stored coefficients.
  std::uint16_t coeff_value(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  FieldElem coeff(std::size_t k) const { return FieldElem(coeff_value(k), *field_); }

  FieldElem eval(FieldElem x) const;
  std::uint16_t eval_value(std::uint16_t x) const;

  const Field& field() const { return *field_; }
  const std::vector<std::uint16_t>& coeffs() const { return coeffs_; }

  bool operator==(const UniPoly& other) const {
    return coeffs_ == other.coeffs_;
  }

 private:
  const Field* field_;
  std::vector<std::uint16_t> coeffs_;
};

// Unique polynomial of degree < points.size() through the given points.
// Requires pairwise distinct x coordinates, 1 <= count <= q, and all
// elements from one field.
UniPoly interpolate(const std::vector<std::pair<FieldElem, FieldElem>>& points);

FieldElem eval_poly(const UniPoly& p, FieldElem x);

namespace gf2 {
// Polynomials over GF(2) as coefficient bit-vectors (bit i = coefficient of
// x^i). Used for modulus search and by tests as an independent check.
int degree(std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
bool irreducible(std::uint32_t p);
std::uint32_t smallest_irreducible(unsigned ell);
}  // namespace gf2

}  // namespace liftedrs

#endif  // LIFTEDRS_FIELD_HPP
