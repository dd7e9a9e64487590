#include "rsn/edelman_greene.hpp"

#include <json.hpp>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace rsn {

namespace {

int require_staircase(const StandardTableau& t) {
  int n = 0;
  if (!t.shape.is_staircase(&n))
    throw std::domain_error("Edelman-Greene: staircase shape required");
  return n;
}

}  // namespace

std::pair<int, StandardTableau> schutzenberger_step(const StandardTableau& t) {
  require_staircase(t);
  long N = t.shape.size();

  int mi = 0, mj = 0;
  for (int i = 1; i <= t.shape.num_rows(); ++i)
    for (int j = 1; j <= t.shape.row(i); ++j)
      if (t.at(i, j) == N) mi = i, mj = j;

  StandardTableau out = t;
  for (auto& row : out.entries)
    for (auto& v : row) v += 1;

  // Slide from the max cell down to (1,1); entries T(i,j) = -inf off shape.
  int i = mi, j = mj;
  while (!(i == 1 && j == 1)) {
    int up = (i > 1 && t.shape.contains(i - 1, j)) ? t.at(i - 1, j) : -1;
    int left = (j > 1) ? t.at(i, j - 1) : -1;
    if (up >= left) {
      out.at(i, j) = up + 1;
      --i;
    } else {
      out.at(i, j) = left + 1;
      --j;
    }
  }
  out.at(1, 1) = 1;
  return {mj, out};
}

SortingNetwork eg_map(const StandardTableau& t) {
  int n = require_staircase(t);
  long N = t.shape.size();
  SortingNetwork w;
  w.n = n;
  if (N == 0) return w;
  w.swaps.reserve(N);

  // Flattened staircase with a running offset: after k slides all effective
  // entries are stored + k, so the slide never rewrites the whole tableau.
  int nrows = t.shape.num_rows();
  std::vector<int> base(nrows + 2, 0);
  for (int i = 1; i <= nrows; ++i) base[i + 1] = base[i] + t.shape.row(i);
  auto idx = [&](int i, int j) { return base[i] + (j - 1); };

  std::vector<int> val(N);
  // pos[v + N] = flat cell currently storing stored-value v; stored values
  // run down from N to 1-N over the course of the N slides.
  std::vector<int> pos(2 * static_cast<size_t>(N) + 2, -1);
  std::vector<int> cell_i(N), cell_j(N);
  for (int i = 1; i <= nrows; ++i)
    for (int j = 1; j <= t.shape.row(i); ++j) {
      int c = idx(i, j);
      val[c] = t.at(i, j);
      pos[val[c] + N] = c;
      cell_i[c] = i;
      cell_j[c] = j;
    }

  const int NEG = std::numeric_limits<int>::min();
  auto stored_at = [&](int i, int j) -> int {
    if (i < 1 || j < 1 || j > n - i) return NEG;
    return val[idx(i, j)];
  };

  for (long k = 0; k < N; ++k) {
    int offset = static_cast<int>(k);
    int cmax = pos[(N - offset) + N];
    int i = cell_i[cmax], j = cell_j[cmax];
    w.swaps.push_back(j);

    // Pull stored values along the sliding path toward (1,1).
    while (!(i == 1 && j == 1)) {
      int up = stored_at(i - 1, j);
      int left = stored_at(i, j - 1);
      int c = idx(i, j);
      if (up >= left) {
        val[c] = up;
        --i;
      } else {
        val[c] = left;
        --j;
      }
      pos[val[c] + N] = c;
    }
    int c11 = idx(1, 1);
    val[c11] = -offset;  // effective entry 1 after the global +1 shift
    pos[val[c11] + N] = c11;
  }
  return w;
}

bool validate_network(const SortingNetwork& w) {
  if (w.n < 2) return false;
  long N = static_cast<long>(w.n) * (w.n - 1) / 2;
  if (w.length() != N) return false;
  std::vector<int> perm(w.n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int s : w.swaps) {
    if (s < 1 || s > w.n - 1) return false;
    std::swap(perm[s - 1], perm[s]);
  }
  for (int i = 0; i < w.n; ++i)
    if (perm[i] != w.n - i) return false;
  return true;
}

SortingNetwork sample_network(int n, Rng& rng) {
  if (n < 2) throw std::domain_error("sample_network: n >= 2 required");
  StandardTableau t = sample_syt_uniform(YoungDiagram::staircase(n), rng);
  return eg_map(t);
}

long first_swap_time(const SortingNetwork& w, int s) {
  for (long i = 0; i < w.length(); ++i)
    if (w.swaps[i] == s) return i + 1;
  return 0;
}

void write_wiring_csv(std::ostream& os, const SortingNetwork& w) {
  os << "step,i\n";
  for (long k = 0; k < w.length(); ++k) os << (k + 1) << "," << w.swaps[k] << "\n";
}

std::string network_to_json(const SortingNetwork& w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["swaps"] = w.swaps;
  return j.dump();
}

SortingNetwork network_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SortingNetwork w;
  w.n = j.at("n").get<int>();
  w.swaps = j.at("swaps").get<std::vector<int>>();
  return w;
}

}  // namespace rsn
