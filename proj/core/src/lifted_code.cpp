#include "liftedrs/lifted_code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace liftedrs {

namespace {

constexpr std::uint64_t kDeskScale = 1ull << 20;

unsigned ell_for(std::uint32_t q) {
  if (q < 2 || (q & (q - 1)) != 0) {
    throw std::invalid_argument("q must be a power of two");
  }
  return std::bit_width(q) - 1;
}

std::uint64_t checked_length(unsigned m, std::uint32_t q) {
  std::uint64_t length = 1;
  for (unsigned k = 0; k < m; ++k) {
    length *= q;
    if (length > kDeskScale) {
      throw std::invalid_argument("q^m exceeds the supported scale");
    }
  }
  return length;
}

int pivot_coordinate(const Point& direction) {
  for (std::size_t k = 0; k < direction.size(); ++k) {
    if (direction[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

// Coefficients of the Lagrange basis polynomials of the full point set
// F_q: row t holds the q coefficients of L_t with L_t(t) = 1 and L_t(s) = 0
// elsewhere. Restriction coefficients of a word on a line are linear
// combinations of these rows.
std::vector<std::vector<std::uint16_t>> lagrange_rows(const Field& f) {
  const std::uint32_t q = f.q();
  std::vector<std::vector<std::uint16_t>> rows(q);
  // Master polynomial over all of F_q is T^q + T.
  std::vector<std::uint16_t> master(q + 1, 0);
  master[1] = 1;
  master[q] = 1;
  for (std::uint32_t t = 0; t < q; ++t) {
    std::vector<std::uint16_t> quotient(q, 0);
    std::uint16_t carry = 0;
    for (std::size_t k = q; k-- > 0;) {
      carry = f.add(master[k + 1], f.mul(carry, static_cast<std::uint16_t>(t)));
      quotient[k] = carry;
    }
    std::uint16_t denom = 0;
    for (std::size_t k = q; k-- > 0;) {
      denom = f.add(f.mul(denom, static_cast<std::uint16_t>(t)), quotient[k]);
    }
    const std::uint16_t scale = f.inv(denom);
    for (auto& c : quotient) c = f.mul(c, scale);
    rows[t] = std::move(quotient);
  }
  return rows;
}

// Gaussian elimination over the field; destroys rows; returns the rank.
std::size_t rank_of(std::vector<std::vector<std::uint16_t>>& rows, const Field& f,
                    std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint16_t scale = f.inv(rows[rank][col]);
    for (std::size_t c = col; c < cols; ++c) rows[rank][c] = f.mul(rows[rank][c], scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint16_t factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = f.add(rows[r][c], f.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t point_index(const Point& p, std::uint32_t q) {
  std::size_t index = 0;
  for (std::uint16_t c : p) {
    if (c >= q) throw std::invalid_argument("point coordinate out of range");
    index = index * q + c;
  }
  return index;
}

Point index_point(std::size_t index, unsigned m, std::uint32_t q) {
  Point p(m, 0);
  for (unsigned k = m; k-- > 0;) {
    p[k] = static_cast<std::uint16_t>(index % q);
    index /= q;
  }
  if (index != 0) throw std::invalid_argument("point index out of range");
  return p;
}

bool is_canonical(const Line& line) {
  const int pivot = pivot_coordinate(line.direction);
  if (pivot < 0) return false;
  return line.direction[pivot] == 1 && line.offset[pivot] == 0;
}

Line canonicalize(const Field& field, const Point& direction, const Point& offset) {
  if (direction.size() != offset.size()) {
    throw std::invalid_argument("direction and offset of different lengths");
  }
  const int pivot = pivot_coordinate(direction);
  if (pivot < 0) throw std::invalid_argument("line direction must be nonzero");
  const std::uint16_t scale = field.inv(direction[pivot]);
  Line out{direction, offset};
  for (auto& c : out.direction) c = field.mul(c, scale);
  // Slide the base point along the line until the pivot coordinate is zero.
  const std::uint16_t shift = offset[pivot];
  for (std::size_t k = 0; k < out.offset.size(); ++k) {
    out.offset[k] = field.add(out.offset[k], field.mul(shift, out.direction[k]));
  }
  return out;
}

std::vector<Line> canonical_lines(unsigned m, std::uint32_t q) {
  const std::uint64_t length = checked_length(m, q);
  std::vector<Line> lines;
  std::uint64_t offsets_per_dir = 1;
  for (unsigned k = 0; k + 1 < m; ++k) offsets_per_dir *= q;

  for (std::size_t di = 1; di < length; ++di) {
    const Point direction = index_point(di, m, q);
    const int pivot = pivot_coordinate(direction);
    if (direction[pivot] != 1) continue;
    for (std::uint64_t oi = 0; oi < offsets_per_dir; ++oi) {
      // Inject the free offset coordinates around the zero pivot slot.
      Point offset(m, 0);
      std::uint64_t rest = oi;
      for (unsigned k = m; k-- > 0;) {
        if (static_cast<int>(k) == pivot) continue;
        offset[k] = static_cast<std::uint16_t>(rest % q);
        rest /= q;
      }
      lines.push_back(Line{direction, offset});
    }
  }
  return lines;
}

std::vector<Line> canonical_lines_through(const Point& p, const Field& field) {
  const unsigned m = static_cast<unsigned>(p.size());
  const std::uint32_t q = field.q();
  const std::uint64_t length = checked_length(m, q);
  std::vector<Line> lines;
  for (std::size_t di = 1; di < length; ++di) {
    const Point direction = index_point(di, m, q);
    const int pivot = pivot_coordinate(direction);
    if (direction[pivot] != 1) continue;
    // Unique canonical offset: slide p so the pivot coordinate vanishes.
    Point offset(m, 0);
    const std::uint16_t shift = p[pivot];
    for (unsigned k = 0; k < m; ++k) {
      offset[k] = field.add(p[k], field.mul(shift, direction[k]));
    }
    lines.push_back(Line{direction, offset});
  }
  return lines;
}

Point line_point(const Field& field, const Line& line, std::uint16_t t) {
  Point p(line.direction.size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = field.add(field.mul(line.direction[k], t), line.offset[k]);
  }
  return p;
}

LiftedCode::LiftedCode(unsigned m, std::uint32_t q, std::uint32_t d)
    : m_(m), d_(d), field_(ell_for(q)) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (d < 1 || d >= q) throw std::invalid_argument("need 1 <= d < q");
  length_ = checked_length(m, q);
  const unsigned ell = field_.ell();
  ExponentVec e(m, 0);
  for (;;) {
    if (!is_dstar_bad(e, ell, d).is_bad) basis_.push_back(e);
    unsigned k = m;
    bool done = true;
    while (k-- > 0) {
      if (++e[k] < q) {
        done = false;
        break;
      }
      e[k] = 0;
    }
    if (done) break;
  }
}

LiftedCode build_code(unsigned m, std::uint32_t q, std::uint32_t d) {
  return LiftedCode(m, q, d);
}

std::uint16_t LiftedCode::eval_monomial(const ExponentVec& e, const Point& p) const {
  std::uint16_t acc = 1;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;  // 0^0 = 1
    acc = field_.mul(acc, field_.pow(p[k], e[k]));
  }
  return acc;
}

Codeword encode(const LiftedCode& code, const std::vector<std::uint16_t>& coeffs) {
  if (coeffs.size() != code.dimension()) {
    throw std::invalid_argument("coefficient count must equal the code dimension");
  }
  const Field& f = code.field();
  for (std::uint16_t c : coeffs) {
    if (c >= f.q()) throw std::invalid_argument("coefficient out of range");
  }
  Codeword w(code.length(), 0);
  for (std::size_t pi = 0; pi < w.size(); ++pi) {
    const Point p = index_point(pi, code.m(), f.q());
    std::uint16_t acc = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      acc = f.add(acc, f.mul(coeffs[k], code.eval_monomial(code.basis()[k], p)));
    }
    w[pi] = acc;
  }
  return w;
}

UniPoly restrict_to_line(const Field& field, const Codeword& w, const Line& line) {
  if (pivot_coordinate(line.direction) < 0) {
    throw std::invalid_argument("line direction must be nonzero");
  }
  const std::uint32_t q = field.q();
  std::vector<std::pair<FieldElem, FieldElem>> samples;
  samples.reserve(q);
  for (std::uint32_t t = 0; t < q; ++t) {
    const Point p = line_point(field, line, static_cast<std::uint16_t>(t));
    samples.emplace_back(field.elem(t), field.elem(w.at(point_index(p, q))));
  }
  return interpolate(samples);
}

bool is_codeword_bruteforce(const Codeword& w, unsigned m, std::uint32_t q, std::uint32_t d) {
  if (w.size() != checked_length(m, q)) {
    throw std::invalid_argument("word length must be q^m");
  }
  const Field field(ell_for(q));
  const auto lagrange = lagrange_rows(field);
  for (const Line& line : canonical_lines(m, q)) {
    // Coefficient k of the restriction is sum_t lagrange[t][k] w[p_t]; the
    // word passes iff the coefficients d..q-1 vanish on every line.
    std::vector<std::uint16_t> values(q);
    for (std::uint32_t t = 0; t < q; ++t) {
      values[t] = w[point_index(line_point(field, line, static_cast<std::uint16_t>(t)), q)];
    }
    for (std::uint32_t k = d; k < q; ++k) {
      std::uint16_t coeff = 0;
      for (std::uint32_t t = 0; t < q; ++t) {
        coeff = field.add(coeff, field.mul(lagrange[t][k], values[t]));
      }
      if (coeff != 0) return false;
    }
  }
  return true;
}

std::size_t bruteforce_dimension(unsigned m, std::uint32_t q, std::uint32_t d) {
  const std::uint64_t length = checked_length(m, q);
  const Field field(ell_for(q));
  const auto lagrange = lagrange_rows(field);
  std::vector<std::vector<std::uint16_t>> rows;
  for (const Line& line : canonical_lines(m, q)) {
    std::vector<std::size_t> indices(q);
    for (std::uint32_t t = 0; t < q; ++t) {
      indices[t] = point_index(line_point(field, line, static_cast<std::uint16_t>(t)), q);
    }
    for (std::uint32_t k = d; k < q; ++k) {
      std::vector<std::uint16_t> row(length, 0);
      for (std::uint32_t t = 0; t < q; ++t) {
        row[indices[t]] = field.add(row[indices[t]], lagrange[t][k]);
      }
      rows.push_back(std::move(row));
    }
  }
  return length - rank_of(rows, field, length);
}

std::vector<Point> information_set(const LiftedCode& code) {
  const Field& f = code.field();
  const std::size_t dim = code.dimension();
  // Incrementally reduced selected columns of the generator matrix;
  // pivots[r] is the row of the r-th selected column's leading entry.
  std::vector<std::vector<std::uint16_t>> reduced;
  std::vector<std::size_t> pivots;
  std::vector<Point> chosen;
  for (std::size_t pi = 0; pi < code.length() && chosen.size() < dim; ++pi) {
    const Point p = index_point(pi, code.m(), f.q());
    std::vector<std::uint16_t> column(dim);
    for (std::size_t k = 0; k < dim; ++k) column[k] = code.eval_monomial(code.basis()[k], p);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const std::uint16_t factor = column[pivots[r]];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        column[k] = f.add(column[k], f.mul(factor, reduced[r][k]));
      }
    }
    std::size_t lead = dim;
    for (std::size_t k = 0; k < dim; ++k) {
      if (column[k] != 0) {
        lead = k;
        break;
      }
    }
    if (lead == dim) continue;
    const std::uint16_t scale = f.inv(column[lead]);
    for (auto& v : column) v = f.mul(v, scale);
    reduced.push_back(std::move(column));
    pivots.push_back(lead);
    chosen.push_back(p);
  }
  if (chosen.size() != dim) {
    throw std::runtime_error("generator matrix is rank deficient");
  }
  return chosen;
}

std::string code_to_string(const LiftedCode& code) {
  std::ostringstream out;
  out << "lifted-rs v1 m=" << code.m() << " ell=" << code.field().ell()
      << " d=" << code.d() << " modulus=" << std::hex << code.field().modulus()
      << std::dec << "\n";
  for (const ExponentVec& e : code.basis()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) out << ',';
      out << e[k];
    }
    out << "\n";
  }
  return out.str();
}

LiftedCode code_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string magic, version;
  in >> magic >> version;
  if (magic != "lifted-rs" || version != "v1") {
    throw std::invalid_argument("unrecognized code file header");
  }
  unsigned m = 0, ell = 0;
  std::uint32_t d = 0, modulus = 0;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) break;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "m") m = std::stoul(value);
    else if (key == "ell") ell = std::stoul(value);
    else if (key == "d") d = std::stoul(value);
    else if (key == "modulus") modulus = std::stoul(value, nullptr, 16);
    else throw std::invalid_argument("unknown header field: " + key);
    if (key == "modulus") break;
  }
  if (m == 0 || ell == 0) throw std::invalid_argument("incomplete code file header");
  LiftedCode code(m, 1u << ell, d);
  if (code.field().modulus() != modulus) {
    throw std::invalid_argument("modulus in file does not match the field construction");
  }
  // The basis lines are redundant with (m, ell, d); require exact agreement
  // so corrupted files are rejected.
  std::vector<ExponentVec> listed;
  std::string line;
  std::getline(in, line);  // rest of header line
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ExponentVec e;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) e.push_back(std::stoul(cell));
    listed.push_back(std::move(e));
  }
  if (listed != code.basis()) {
    throw std::invalid_argument("basis listing does not match the code parameters");
  }
  return code;
}

std::string codeword_to_string(const Codeword& w) {
  std::ostringstream out;
  out << std::hex;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out << ' ';
    out << w[k];
  }
  return out.str();
}

Codeword codeword_from_string(const std::string& text, const LiftedCode& code) {
  std::istringstream in(text);
  Codeword w;
  std::string token;
  while (in >> token) {
    const unsigned long v = std::stoul(token, nullptr, 16);
    if (v >= code.q()) throw std::invalid_argument("codeword value out of range");
    w.push_back(static_cast<std::uint16_t>(v));
  }
  if (w.size() != code.length()) {
    throw std::invalid_argument("codeword length must be q^m");
  }
  return w;
}

}  // namespace liftedrs
