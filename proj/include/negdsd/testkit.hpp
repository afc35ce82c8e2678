#pragma once

#include <cstdint>

#include "negdsd/result.hpp"
#include "negdsd/signed_graph.hpp"

namespace negdsd::testkit {

/// Node ids of the named nodes in gen_bad_peeling; fillers follow as
/// kFirstFiller .. kFirstFiller + n - 1.
struct BadPeelingLayout {
  static constexpr NodeId kA = 0;
  static constexpr NodeId kB = 1;
  static constexpr NodeId kC = 2;
  static constexpr NodeId kCenter = 3;
  static constexpr NodeId kFirstFiller = 4;
};

/// Instance on n + 4 nodes where plain peeling removes the center first and
/// ends with a triangle of density eps, while {a, b, c, z} has density
/// (3W + 3 eps) / 4 with W = (n - 4) / 3.
///
///   triangle a, b, c with pairwise weight eps
///   center z joined to a, b, c with weight W
///   filler path f_1 - ... - f_n with weight -1 edges
///   z - f_i with weight -1 for every i
///
/// Degrees: z has 3W - n, inner fillers -3, path ends -2, triangle 2 eps + W.
/// Requires n >= 7, n = 1 (mod 3) and 0 < eps < 1; throws BadParameters.
SignedGraph gen_bad_peeling(std::size_t n, double eps);

/// (3W + 3 eps) / 4 for the instance above.
double bad_peeling_optimum(std::size_t n, double eps);

/// An r-clique of +1 edges (ids 0..r-1) next to n nodes (ids r..r+n-1) where
/// every pair independently gets a +1 edge with probability 1/2 and,
/// independently, a -1 edge with probability 1/2. Requires r >= 2; throws
/// BadParameters.
SignedGraph gen_two_component(std::size_t r, std::size_t n, std::uint64_t seed);

/// Triangle of +1 edges (ids 0-2), one edge of weight -delta (ids 3-4) and an
/// n-clique of -eps edges (ids 5..n+4). Requires n >= 3, delta > 0,
/// 0 < eps < delta and (n - 1)(delta - eps) / 2 > 1 + delta, so that shifting
/// by delta makes the clique look densest; throws BadParameters otherwise.
SignedGraph gen_shift_failure(std::size_t n, double delta, double eps);

/// Shifts every edge's net weight up by the most negative net weight (when
/// negative), solves the shifted graph exactly and reports the winner at its
/// true, unshifted density.
DsdResult shift_baseline(const SignedGraph& g);

}  // namespace negdsd::testkit
