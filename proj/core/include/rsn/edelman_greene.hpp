#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rsn/rng.hpp"
#include "rsn/tableau.hpp"

namespace rsn {

// A reduced word (s_1, ..., s_N) of the reverse permutation of S_n,
// N = n(n-1)/2; s_i in {1, ..., n-1}.
struct SortingNetwork {
  int n = 0;
  std::vector<int> swaps;

  long length() const { return static_cast<long>(swaps.size()); }
  bool operator==(const SortingNetwork& o) const {
    return n == o.n && swaps == o.swaps;
  }
};

// One Schuetzenberger slide on a staircase SYT.  Returns the column of the
// maximum entry and Phi(t).  Throws std::domain_error for non-staircase
// shapes.
std::pair<int, StandardTableau> schutzenberger_step(const StandardTableau& t);

// The Edelman-Greene map: swaps_k = j_max(Phi^(k-1)(t)), k = 1..N.
SortingNetwork eg_map(const StandardTableau& t);

// True iff |swaps| = n(n-1)/2 and composing the adjacent transpositions
// takes the identity to the reverse permutation.
bool validate_network(const SortingNetwork& w);

// Uniform random sorting network: eg_map of a uniform staircase SYT.
SortingNetwork sample_network(int n, Rng& rng);

// First index i (1-based) with swaps[i-1] == s, or 0 if absent.
long first_swap_time(const SortingNetwork& w, int s);

// Wiring-diagram export: CSV "step,i"; row k records the crossing of the
// paths at positions s_k, s_k+1 at (k - 1/2, s_k + 1/2).
void write_wiring_csv(std::ostream& os, const SortingNetwork& w);

std::string network_to_json(const SortingNetwork& w);
SortingNetwork network_from_json(const std::string& text);

}  // namespace rsn
