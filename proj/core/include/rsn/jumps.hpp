#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rsn/tableau.hpp"

namespace rsn {

// A point of a jump or swap configuration on Z x R>=0.
struct JumpPoint {
  int x = 0;
  double u = 0.0;

  friend bool operator==(const JumpPoint& a, const JumpPoint& b) {
    return a.x == b.x && a.u == b.u;
  }
  friend bool operator<(const JumpPoint& a, const JumpPoint& b) {
    return a.x != b.x ? a.x < b.x : a.u < b.u;
  }
};

// Finite point configuration, kept sorted by (x, u).
struct PointConfiguration {
  std::vector<JumpPoint> points;

  void normalize();  // sort by (x, u)
  bool is_simple() const;
  bool operator==(const PointConfiguration& o) const { return points == o.points; }
};

// Cell of the infinite staircase Delta_inf = {(x,y): y >= 0, x == y mod 2}.
struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell& a, const Cell& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Cell& a, const Cell& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline bool in_delta_inf(const Cell& c) {
  return c.y >= 0 && ((c.x - c.y) % 2) == 0;
}

// Finite-support tableau on Delta_inf; missing cells are implicitly +inf.
// Valid iff T(x,y) <= min{T(x-1,y+1), T(x+1,y+1)} with inf absorbing, which
// forces the support to be a union of downward-closed clusters.
struct InfiniteTableau {
  std::map<Cell, double> cells;

  void set(int x, int y, double v);
  bool is_valid() const;
  void validate() const;  // throws std::invalid_argument with the offending cell
};

// Window around column alpha*n for the edge rescaling.  beta = sqrt(1-a^2),
// c_n = 2*floor((1+alpha)n/2) - n, which has the parity of n and satisfies
// |c_n - alpha n| <= 2.  This is the unique O(1) choice for which the
// rescaled jump process coincides exactly with the embedded-tableau route
// and with the swap window of the finite Edelman-Greene correspondence.
struct WindowSpec {
  double alpha = 0.0;
  int n = 0;
  int c_n = 0;
  double beta = 1.0;

  WindowSpec(double alpha, int n);
  WindowSpec(double alpha, int n, int c_n);
};

// Jumps of the non-intersecting path family of a Poissonized tableau with
// distinct entries: entry (i,j) contributes the point (j - i, T(i,j)).
// Entries below min_entry may be skipped to bound the output size.
PointConfiguration pyt_to_jumps(const PoissonizedTableau& p, double min_entry = 0.0);

// Entry at cell (x,y) <-> the k-th smallest point on line x, y = 2k-1-[x even].
PointConfiguration tableau_to_jumps(const InfiniteTableau& t);
InfiniteTableau jumps_to_tableau(const PointConfiguration& x);

// Embed a staircase PYT of shape Delta_n into Delta_inf, reversed and
// rescaled: cell (i,j) lands at (j - i - c_n, n - i - j) with entry
// beta * n * (1 - p(i,j)).  Entries above the cutoff value are kept;
// u_max < inf drops cells whose rescaled entry exceeds u_max.
InfiniteTableau embed_staircase(const PoissonizedTableau& p, const WindowSpec& w,
                                double u_max = -1.0);

// The prelimit edge process: (x, t) -> (x - c_n, beta * n * (1 - t)).
PointConfiguration rescale_window(const PointConfiguration& x, const WindowSpec& w);

// CSV "x,u" (sorted); JSON {"points":[[x,u],...]} with an optional kind tag.
void write_points_csv(std::ostream& os, const PointConfiguration& c);
std::string points_to_json(const PointConfiguration& c, const std::string& kind = "");
PointConfiguration points_from_json(const std::string& text);

}  // namespace rsn
