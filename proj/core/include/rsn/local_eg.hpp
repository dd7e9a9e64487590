#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "rsn/jumps.hpp"

namespace rsn {

// A finite sub-tableau of Delta_inf whose support is connected and downward
// closed, with distinct entries.  The min-based Edelman-Greene step acts on
// clusters independently.
struct Cluster {
  std::map<Cell, double> cells;

  bool empty() const { return cells.empty(); }
  long size() const { return static_cast<long>(cells.size()); }
};

// Connected components of the support of T^{<=t_max}.  Throws
// std::invalid_argument if a component is not downward closed (malformed
// tableau) or entries collide.
std::vector<Cluster> graded_clusters(const InfiniteTableau& t, double t_max);

// One min-based sliding step: removes the minimum entry (always at a bottom
// cell (2x, 0)), slides entries down along the min-up-neighbor path, deletes
// the terminal peak cell.  Returns (x, min value, remaining cluster).
// Throws std::domain_error on an empty cluster.
std::tuple<int, double, Cluster> eg_min_step(const Cluster& c);

// All swaps of T^{<=t_max}: union over clusters of iterated min steps,
// merged into global time order.  kind tag "swap" on serialization.
PointConfiguration swaps_of_tableau(const InfiniteTableau& t, double t_max);

// The point-process formulation: repeatedly take the lowest point of the
// configuration restricted to [a_hat, b_hat] x [0, t_max] (its column is
// even for interlacing inputs), emit (x/2, u), slide along the unique
// nearest-above chain and shift the chain down.  a_hat < 2a and b_hat > 2b
// are empty columns, auto-detected within search_bound columns of the
// requested window; throws std::invalid_argument when none exist.
PointConfiguration local_eg_on_points(const PointConfiguration& x, int a, int b,
                                      double t_max, int search_bound = 50);

}  // namespace rsn
