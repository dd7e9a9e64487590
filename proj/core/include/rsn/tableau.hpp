#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "rsn/rng.hpp"

namespace rsn {

// Exact tableau / sorting-network counts.
using BigCount = boost::multiprecision::cpp_int;

// A partition lambda_1 >= lambda_2 >= ... > 0.  Rows may be empty (the
// empty diagram).  Cells are addressed 1-based as (i, j), 1 <= j <= rows[i-1].
struct YoungDiagram {
  std::vector<int> rows;

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> r);

  // Staircase Delta_n = (n-1, n-2, ..., 1).
  static YoungDiagram staircase(int n);

  long size() const;
  int num_rows() const { return static_cast<int>(rows.size()); }
  int row(int i) const {  // 1-based, 0 outside
    return (i >= 1 && i <= num_rows()) ? rows[i - 1] : 0;
  }
  bool contains(int i, int j) const { return j >= 1 && j <= row(i); }
  bool is_staircase(int* n_out = nullptr) const;
  std::vector<int> conjugate() const;

  bool operator==(const YoungDiagram& o) const { return rows == o.rows; }
};

// Entries 1..|shape|, strictly increasing along rows and columns.
struct StandardTableau {
  YoungDiagram shape;
  std::vector<std::vector<int>> entries;  // entries[i-1][j-1]

  int at(int i, int j) const { return entries[i - 1][j - 1]; }
  int& at(int i, int j) { return entries[i - 1][j - 1]; }
  bool operator==(const StandardTableau& o) const {
    return shape == o.shape && entries == o.entries;
  }
};

// Real entries in [0,1], weakly increasing along rows and columns.
struct PoissonizedTableau {
  YoungDiagram shape;
  std::vector<std::vector<double>> entries;

  double at(int i, int j) const { return entries[i - 1][j - 1]; }
  double& at(int i, int j) { return entries[i - 1][j - 1]; }
};

// Number of standard Young tableaux of the given shape (hook length formula).
BigCount count_syt(const YoungDiagram& shape);

// Number of sorting networks of S_n: N! / prod_{j=1}^{n-1} (2n-1-2j)^j,
// N = n(n-1)/2.  Throws std::domain_error for n < 2.
BigCount stanley_count(int n);

// Uniform random SYT via the Greene-Nijenhuis-Wilf hook walk.
StandardTableau sample_syt_uniform(const YoungDiagram& shape, Rng& rng);

// Replace entry k by the k-th order statistic of |shape| iid U[0,1] draws.
// If t is uniform the result is a uniform Poissonized tableau.
PoissonizedTableau poissonize(const StandardTableau& t, Rng& rng);

// Replace entries by their ranks.  Throws std::invalid_argument on ties.
StandardTableau depoissonize(const PoissonizedTableau& p);

// Weak row/column monotonicity check (tableau constraints).
bool validate_tableau(const PoissonizedTableau& p);

// Entries form a bijection onto 1..|shape| and increase strictly.
bool validate_tableau(const StandardTableau& t);

// JSON round trip: {"shape":[...], "entries":[[row values]]}.
std::string tableau_to_json(const StandardTableau& t);
std::string tableau_to_json(const PoissonizedTableau& p);
StandardTableau standard_tableau_from_json(const std::string& text);
PoissonizedTableau poissonized_tableau_from_json(const std::string& text);

}  // namespace rsn
