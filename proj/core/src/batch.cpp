#include "liftedrs/batch.hpp"

#include <sstream>
#include <stdexcept>

namespace liftedrs {

namespace {

void append_coords(std::ostringstream& out, const Point& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out << ',';
    out << p[k];
  }
}

}  // namespace

std::uint64_t capacity(unsigned m, std::uint32_t q, std::uint32_t r) {
  if (m < 2) throw std::invalid_argument("batch serving needs m >= 2");
  if (r < 1 || r >= q) throw std::invalid_argument("need 1 <= r < q");
  std::uint64_t k = r;
  for (unsigned t = 0; t + 2 < m; ++t) k *= q;
  return k;
}

BatchPlan plan_batch(const LiftedCode& code, std::uint32_t r, const BatchRequest& request) {
  const unsigned m = code.m();
  const std::uint32_t q = code.q();
  const Field& f = code.field();
  if (code.d() != q - r) {
    throw std::invalid_argument("planner needs a code with d = q - r");
  }
  const std::uint64_t cap = capacity(m, q, r);
  if (request.targets.size() > cap) {
    throw std::invalid_argument("batch of size " + std::to_string(request.targets.size()) +
                                " exceeds the capacity " + std::to_string(cap));
  }

  BatchPlan plan;
  plan.r = r;
  std::vector<char> consumed(code.length(), 0);  // points of accepted lines

  for (const Point& target : request.targets) {
    if (target.size() != m) throw std::invalid_argument("target of wrong dimension");
    const std::size_t target_index = point_index(target, q);

    bool planned = false;
    for (const Line& line : canonical_lines_through(target, f)) {
      std::uint32_t overlap = 0;
      std::vector<std::uint16_t> free_params;
      for (std::uint32_t t = 0; t < q; ++t) {
        const std::size_t pi =
            point_index(line_point(f, line, static_cast<std::uint16_t>(t)), q);
        if (pi == target_index) continue;
        if (consumed[pi]) {
          ++overlap;
        } else if (free_params.size() < q - r) {
          free_params.push_back(static_cast<std::uint16_t>(t));
        }
      }
      // The line qualifies when fewer than r of its non-target points were
      // consumed by earlier sets; q-r free points then always remain.
      if (overlap >= r || free_params.size() < q - r) continue;

      for (std::uint32_t t = 0; t < q; ++t) {
        consumed[point_index(line_point(f, line, static_cast<std::uint16_t>(t)), q)] = 1;
      }
      plan.max_overlap = std::max(plan.max_overlap, overlap);
      plan.sets.push_back(RecoveringSet{target, line, std::move(free_params)});
      planned = true;
      break;
    }
    if (!planned) {
      throw std::runtime_error("no admissible line left; the counting bound rules this out");
    }
  }
  return plan;
}

Point read_point(const Field& field, const RecoveringSet& set, std::uint16_t t) {
  return line_point(field, set.line, t);
}

std::vector<std::uint16_t> execute_batch(const LiftedCode& code, const Codeword& w,
                                         const BatchPlan& plan) {
  const Field& f = code.field();
  const std::uint32_t q = code.q();
  if (w.size() != code.length()) {
    throw std::invalid_argument("word length does not match the code");
  }
  if (plan.r != q - code.d()) {
    throw std::invalid_argument("plan was made for different parameters");
  }
  std::vector<std::uint16_t> recovered;
  recovered.reserve(plan.sets.size());
  for (const RecoveringSet& set : plan.sets) {
    if (set.read_params.size() != q - plan.r) {
      throw std::invalid_argument("recovering set of wrong size");
    }
    std::vector<std::pair<FieldElem, FieldElem>> samples;
    samples.reserve(set.read_params.size());
    for (std::uint16_t t : set.read_params) {
      const Point p = line_point(f, set.line, t);
      samples.emplace_back(f.elem(t), f.elem(w[point_index(p, q)]));
    }
    const UniPoly restriction = interpolate(samples);
    // On a canonical line the parameter of a point is its pivot coordinate.
    const int pivot = [&] {
      for (std::size_t k = 0; k < set.line.direction.size(); ++k) {
        if (set.line.direction[k] != 0) return static_cast<int>(k);
      }
      return -1;
    }();
    if (pivot < 0 || !is_canonical(set.line)) {
      throw std::invalid_argument("recovering set line is not canonical");
    }
    const std::uint16_t t_target = set.target[pivot];
    recovered.push_back(restriction.eval_value(t_target));
  }
  return recovered;
}

BinaryExpansion binary_expand(const LiftedCode& code) {
  BinaryExpansion out;
  out.bits_per_symbol = code.field().ell();
  out.length_bits = static_cast<std::uint64_t>(out.bits_per_symbol) * code.length();
  out.dimension_bits = static_cast<std::uint64_t>(out.bits_per_symbol) * code.dimension();
  out.redundancy_bits = out.length_bits - out.dimension_bits;
  return out;
}

std::string plan_to_string(const BatchPlan& plan) {
  std::ostringstream out;
  for (const RecoveringSet& set : plan.sets) {
    out << "target=";
    append_coords(out, set.target);
    out << " dir=";
    append_coords(out, set.line.direction);
    out << " offset=";
    append_coords(out, set.line.offset);
    out << " reads=";
    for (std::size_t k = 0; k < set.read_params.size(); ++k) {
      if (k) out << ',';
      out << set.read_params[k];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace liftedrs
