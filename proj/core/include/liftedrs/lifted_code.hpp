#ifndef LIFTEDRS_LIFTED_CODE_HPP
#define LIFTEDRS_LIFTED_CODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liftedrs/field.hpp"
#include "liftedrs/monomial.hpp"

namespace liftedrs {

// Evaluation point in F_q^m, raw coordinate values in [0, q).
using Point = std::vector<std::uint16_t>;

// Codeword values over all q^m points in point order.
using Codeword = std::vector<std::uint16_t>;

// Line {direction * T + offset : T in F_q}. Canonical form: the first
// nonzero direction coordinate is 1 and the offset is 0 at that coordinate,
// so canonical (direction, offset) pairs are in bijection with point sets.
struct Line {
  Point direction;
  Point offset;
};

// Point order is lexicographic by coordinate values, first coordinate most
// significant.
std::size_t point_index(const Point& p, std::uint32_t q);
Point index_point(std::size_t index, unsigned m, std::uint32_t q);

bool is_canonical(const Line& line);
Line canonicalize(const Field& field, const Point& direction, const Point& offset);

// All q^(m-1) (q^m - 1)/(q - 1) canonical lines, each point set exactly
// once, in lexicographic (direction, offset) order.
std::vector<Line> canonical_lines(unsigned m, std::uint32_t q);

// The (q^m - 1)/(q - 1) canonical lines through one point, in lexicographic
// direction order.
std::vector<Line> canonical_lines_through(const Point& p, const Field& field);

// Point direction * t + offset.
Point line_point(const Field& field, const Line& line, std::uint16_t t);

// The [m, d, q] code: evaluations over F_q^m of the span of the d*-good
// monomials. Immutable after construction.
class LiftedCode {
 public:
  LiftedCode(unsigned m, std::uint32_t q, std::uint32_t d);

  unsigned m() const { return m_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint32_t d() const { return d_; }
  const Field& field() const { return field_; }

  // d*-good exponent vectors in lexicographic order.
  const std::vector<ExponentVec>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t length() const { return length_; }

  // Evaluation of monomial X^e at point p, with 0^0 = 1.
  std::uint16_t eval_monomial(const ExponentVec& e, const Point& p) const;

 private:
  unsigned m_;
  std::uint32_t d_;
  Field field_;
  std::size_t length_;
  std::vector<ExponentVec> basis_;
};

LiftedCode build_code(unsigned m, std::uint32_t q, std::uint32_t d);

// values[p] = sum_k coeffs[k] * basis_k(p); linear in coeffs.
Codeword encode(const LiftedCode& code, const std::vector<std::uint16_t>& coeffs);

// Interpolates the q samples (t, w[direction*t + offset]) of a word over
// the line; works for any nonzero direction, canonical or not.
UniPoly restrict_to_line(const Field& field, const Codeword& w, const Line& line);

// Decides membership directly from the definition: every canonical line
// restriction must have degree < d.
bool is_codeword_bruteforce(const Codeword& w, unsigned m, std::uint32_t q, std::uint32_t d);

// Dimension of the code cut out by the line constraints, as the null space
// dimension of the linear system "restriction coefficients d..q-1 vanish on
// every canonical line". The definitional counterpart of dimension().
std::size_t bruteforce_dimension(unsigned m, std::uint32_t q, std::uint32_t d);

// dimension() many points whose generator submatrix is invertible, chosen
// greedily in point order.
std::vector<Point> information_set(const LiftedCode& code);

// Text format: header "lifted-rs v1 m=<m> ell=<ell> d=<d> modulus=<hex>"
// followed by one comma-separated basis exponent vector per line.
std::string code_to_string(const LiftedCode& code);
LiftedCode code_from_string(const std::string& text);

// Whitespace-separated hex field element values in point order.
std::string codeword_to_string(const Codeword& w);
Codeword codeword_from_string(const std::string& text, const LiftedCode& code);

}  // namespace liftedrs

#endif  // LIFTEDRS_LIFTED_CODE_HPP
