#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dragoncrypto/bigint.hpp"
#include "dragoncrypto/fixedpoint.hpp"

namespace dragoncrypto::dragon {

// Materialized walks are capped at 2^26 segments; the closed-form endpoint
// works up to iteration 64 without ever walking the curve.
inline constexpr unsigned kMaxTraceIterations = 26;
inline constexpr unsigned kMaxClosedFormIterations = 64;

enum class Turn : std::uint8_t { L, R };

inline Turn invert(Turn t) { return t == Turn::L ? Turn::R : Turn::L; }
inline char to_char(Turn t) { return t == Turn::L ? 'L' : 'R'; }

// Turns of one curve iteration, index k (1-based) = turn after the k-th
// forward step. Length 2^n; the final entry is the trailing turn the usual
// published iteration strings carry after the last step (always L).
struct TurnSequence {
  unsigned iteration = 0;
  std::vector<Turn> turns;

  friend bool operator==(const TurnSequence&, const TurnSequence&) = default;
};

// Builds the sequence by the paper-folding recursion
//   F_1 = [L],  F_{k+1} = F_k ++ [L] ++ reverse(invert(F_k))
// plus the trailing L. n must be in [1, kMaxTraceIterations].
TurnSequence turn_sequence(unsigned n);

// "FLFL..."-style rendering: F before each turn letter.
std::string folding_string(const TurnSequence& seq);

// Left-right rule: with k = 2^m * j and j odd, the k-th turn is L when
// j mod 4 == 1 and R when j mod 4 == 3. O(log k), k >= 1 of any size.
Turn nth_turn(const Bigint& k);
Turn nth_turn(std::uint64_t k);

// Components of (1+i)^n: the endpoint of an n-iteration unit-step walk from
// the origin heading +x, before rotation and scaling. a^2 + b^2 = 2^n.
struct LatticeDisplacement {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LatticeDisplacement&,
                         const LatticeDisplacement&) = default;
};

// n integer multiplications (a,b) <- (a-b, a+b) from (1,0).
// n must be <= kMaxClosedFormIterations.
LatticeDisplacement lattice_displacement(unsigned n);

// Walks the curve vertex by vertex, invoking visit for every vertex
// including the start: 2^n + 1 calls. Both start coordinates must share one
// scale; every segment has length `step`.
void trace_walk(const PlanePoint& start, const Bigint& step, int theta_deg,
                unsigned n, const std::function<void(const PlanePoint&)>& visit);

// All 2^n + 1 vertices of the walk.
std::vector<PlanePoint> trace_polyline(const PlanePoint& start,
                                       const Bigint& step, int theta_deg,
                                       unsigned n);

// The walk's displacement start -> end without materializing it:
//   step * (a*u + b*v),  u = (cos theta, sin theta), v = (-sin theta, cos theta)
// with (a, b) = lattice_displacement(n), in fixed point at `scale`.
PlanePoint displacement(const Bigint& step, int theta_deg, unsigned n,
                        unsigned scale);

// start + displacement. Exactly the last vertex of trace_polyline when both
// are computable. Start coordinates must be at `scale`.
PlanePoint endpoint(const PlanePoint& start, const Bigint& step, int theta_deg,
                    unsigned n, unsigned scale);

// end - displacement; bit-exact inverse of endpoint for identical
// (step, theta, n, scale).
PlanePoint reverse_start(const PlanePoint& end, const Bigint& step,
                         int theta_deg, unsigned n, unsigned scale);

}  // namespace dragoncrypto::dragon
