#include "dragoncrypto/dragon.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

#include "dragoncrypto/errors.hpp"

namespace dragoncrypto::dragon {
namespace {

void check_trace_iterations(unsigned n) {
  if (n < 1 || n > kMaxTraceIterations) {
    throw IterationOutOfRange("iteration count " + std::to_string(n) +
                              " outside [1, " +
                              std::to_string(kMaxTraceIterations) +
                              "] for a materialized walk");
  }
}

void check_closed_form_iterations(unsigned n) {
  if (n < 1 || n > kMaxClosedFormIterations) {
    throw IterationOutOfRange("iteration count " + std::to_string(n) +
                              " outside [1, " +
                              std::to_string(kMaxClosedFormIterations) + "]");
  }
}

// The four headings a walk can have: u rotated by 0, 90, 180 and 270
// degrees, each scaled to a full step. Index + 1 mod 4 is a left turn.
std::array<PlanePoint, 4> step_vectors(const Bigint& step, int theta_deg,
                                       unsigned scale) {
  const auto [s, c] = sin_cos_deg(theta_deg, scale);
  const FixedPoint dx = c.mul_int(step);
  const FixedPoint dy = s.mul_int(step);
  return {PlanePoint{dx, dy}, PlanePoint{-dy, dx}, PlanePoint{-dx, -dy},
          PlanePoint{dy, -dx}};
}

}  // namespace

TurnSequence turn_sequence(unsigned n) {
  check_trace_iterations(n);
  std::vector<Turn> turns;
  turns.reserve(std::size_t{1} << n);
  turns.push_back(Turn::L);
  for (unsigned k = 1; k < n; ++k) {
    const std::size_t half = turns.size();
    turns.push_back(Turn::L);
    for (std::size_t i = half; i-- > 0;) {
      turns.push_back(invert(turns[i]));
    }
  }
  turns.push_back(Turn::L);  // trailing turn after the final step
  return TurnSequence{n, std::move(turns)};
}

std::string folding_string(const TurnSequence& seq) {
  std::string out;
  out.reserve(2 * seq.turns.size());
  for (Turn t : seq.turns) {
    out.push_back('F');
    out.push_back(to_char(t));
  }
  return out;
}

Turn nth_turn(const Bigint& k) {
  if (k < 1) {
    throw std::invalid_argument("turn index must be at least 1");
  }
  // k = 2^m * j with j odd; the turn is decided by j mod 4.
  const unsigned m = boost::multiprecision::lsb(k);
  const bool low_bit_of_j = boost::multiprecision::bit_test(k, m + 1);
  return low_bit_of_j ? Turn::R : Turn::L;
}

Turn nth_turn(std::uint64_t k) {
  if (k == 0) {
    throw std::invalid_argument("turn index must be at least 1");
  }
  const std::uint64_t j = k >> std::countr_zero(k);
  return (j & 2) == 0 ? Turn::L : Turn::R;
}

LatticeDisplacement lattice_displacement(unsigned n) {
  check_closed_form_iterations(n);
  // (a, b) <- components of (a + b i) * (1 + i), starting from 1 + 0i.
  // |a|, |b| never exceed 2^33, far inside the int64 range.
  std::int64_t a = 1;
  std::int64_t b = 0;
  for (unsigned k = 0; k < n; ++k) {
    const std::int64_t next_a = a - b;
    b = a + b;
    a = next_a;
  }
  return LatticeDisplacement{a, b};
}

void trace_walk(const PlanePoint& start, const Bigint& step, int theta_deg,
                unsigned n,
                const std::function<void(const PlanePoint&)>& visit) {
  check_trace_iterations(n);
  if (start.x.scale() != start.y.scale()) {
    throw std::invalid_argument("walk start coordinates have different scales");
  }
  const auto dirs = step_vectors(step, theta_deg, start.x.scale());

  PlanePoint pos = start;
  visit(pos);
  unsigned heading = 0;
  const std::uint64_t segments = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k <= segments; ++k) {
    pos.x = pos.x + dirs[heading].x;
    pos.y = pos.y + dirs[heading].y;
    visit(pos);
    heading = nth_turn(k) == Turn::L ? (heading + 1) % 4 : (heading + 3) % 4;
  }
}

std::vector<PlanePoint> trace_polyline(const PlanePoint& start,
                                       const Bigint& step, int theta_deg,
                                       unsigned n) {
  check_trace_iterations(n);
  std::vector<PlanePoint> vertices;
  vertices.reserve((std::size_t{1} << n) + 1);
  trace_walk(start, step, theta_deg, n,
             [&vertices](const PlanePoint& p) { vertices.push_back(p); });
  return vertices;
}

PlanePoint displacement(const Bigint& step, int theta_deg, unsigned n,
                        unsigned scale) {
  check_closed_form_iterations(n);
  const auto [s, c] = sin_cos_deg(theta_deg, scale);
  const auto [a, b] = lattice_displacement(n);
  // step * (a*u + b*v) with u = (cos, sin) and v = (-sin, cos): the same
  // integer combination of the sine and cosine mantissas a materialized walk
  // accumulates step by step, so the two agree bit for bit.
  const FixedPoint dx = (c.mul_int(a) - s.mul_int(b)).mul_int(step);
  const FixedPoint dy = (s.mul_int(a) + c.mul_int(b)).mul_int(step);
  return PlanePoint{dx, dy};
}

PlanePoint endpoint(const PlanePoint& start, const Bigint& step, int theta_deg,
                    unsigned n, unsigned scale) {
  if (start.x.scale() != scale || start.y.scale() != scale) {
    throw std::invalid_argument("walk start coordinates not at the requested scale");
  }
  const PlanePoint d = displacement(step, theta_deg, n, scale);
  return PlanePoint{start.x + d.x, start.y + d.y};
}

PlanePoint reverse_start(const PlanePoint& end, const Bigint& step,
                         int theta_deg, unsigned n, unsigned scale) {
  if (end.x.scale() != scale || end.y.scale() != scale) {
    throw std::invalid_argument("walk end coordinates not at the requested scale");
  }
  const PlanePoint d = displacement(step, theta_deg, n, scale);
  return PlanePoint{end.x - d.x, end.y - d.y};
}

}  // namespace dragoncrypto::dragon
