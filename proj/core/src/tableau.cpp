#include "rsn/tableau.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>
#include <utility>

namespace rsn {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw std::invalid_argument("YoungDiagram: rows must be positive");
    if (i > 0 && rows[i] > rows[i - 1])
      throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
  }
}

YoungDiagram YoungDiagram::staircase(int n) {
  if (n < 1) throw std::domain_error("staircase: n >= 1 required");
  std::vector<int> r;
  for (int k = n - 1; k >= 1; --k) r.push_back(k);
  return YoungDiagram(std::move(r));
}

long YoungDiagram::size() const {
  long s = 0;
  for (int r : rows) s += r;
  return s;
}

bool YoungDiagram::is_staircase(int* n_out) const {
  int n = num_rows() + 1;
  for (int i = 1; i <= num_rows(); ++i)
    if (row(i) != n - i) return false;
  if (n_out) *n_out = n;
  return true;
}

std::vector<int> YoungDiagram::conjugate() const {
  std::vector<int> c(rows.empty() ? 0 : rows[0], 0);
  for (int i = 1; i <= num_rows(); ++i)
    for (int j = 1; j <= row(i); ++j) c[j - 1] = i;
  return c;
}

BigCount count_syt(const YoungDiagram& shape) {
  long n = shape.size();
  if (n == 0) return 1;
  std::vector<int> conj = shape.conjugate();
  BigCount hooks = 1;
  for (int i = 1; i <= shape.num_rows(); ++i)
    for (int j = 1; j <= shape.row(i); ++j)
      hooks *= (shape.row(i) - j) + (conj[j - 1] - i) + 1;
  BigCount fact = 1;
  for (long k = 2; k <= n; ++k) fact *= k;
  return fact / hooks;
}

BigCount stanley_count(int n) {
  if (n < 2) throw std::domain_error("stanley_count: n >= 2 required");
  long N = static_cast<long>(n) * (n - 1) / 2;
  BigCount num = 1;
  for (long k = 2; k <= N; ++k) num *= k;
  BigCount den = 1;
  for (int j = 1; j <= n - 1; ++j) {
    BigCount base = 2 * n - 1 - 2 * j;
    for (int e = 0; e < j; ++e) den *= base;
  }
  return num / den;
}

namespace {

// Fenwick tree over per-row cell counts, for uniform cell selection.
class RowFenwick {
 public:
  explicit RowFenwick(const std::vector<int>& rows)
      : n_(static_cast<int>(rows.size())), tree_(n_ + 1, 0) {
    for (int i = 1; i <= n_; ++i) add(i, rows[i - 1]);
  }
  void add(int i, int delta) {
    for (; i <= n_; i += i & (-i)) tree_[i] += delta;
  }
  // Smallest row index i such that prefix(i) > target (target 0-based).
  int find(long target) const {
    int pos = 0;
    long rem = target;
    int log = 1;
    while ((1 << log) <= n_) ++log;
    for (int k = log; k >= 0; --k) {
      int next = pos + (1 << k);
      if (next <= n_ && tree_[next] <= rem) {
        pos = next;
        rem -= tree_[next];
      }
    }
    return pos + 1;
  }
  long prefix(int i) const {
    long s = 0;
    for (; i > 0; i -= i & (-i)) s += tree_[i];
    return s;
  }

 private:
  int n_;
  std::vector<long> tree_;
};

}  // namespace

StandardTableau sample_syt_uniform(const YoungDiagram& shape, Rng& rng) {
  StandardTableau t;
  t.shape = shape;
  t.entries.resize(shape.num_rows());
  for (int i = 1; i <= shape.num_rows(); ++i) t.entries[i - 1].resize(shape.row(i));

  std::vector<int> rows = shape.rows;
  std::vector<int> cols = shape.conjugate();
  long remaining = shape.size();
  if (remaining == 0) return t;
  RowFenwick fen(rows);

  for (long k = remaining; k >= 1; --k) {
    long pick = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(k)));
    int i = fen.find(pick);
    int j = static_cast<int>(pick - fen.prefix(i - 1)) + 1;
    // Hook walk to a corner.
    for (;;) {
      int arm = rows[i - 1] - j;
      int leg = cols[j - 1] - i;
      if (arm + leg == 0) break;
      long h = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(arm + leg)));
      if (h < arm)
        j += static_cast<int>(h) + 1;
      else
        i += static_cast<int>(h - arm) + 1;
    }
    t.at(i, j) = static_cast<int>(k);
    rows[i - 1] -= 1;
    cols[j - 1] -= 1;
    fen.add(i, -1);
  }
  return t;
}

PoissonizedTableau poissonize(const StandardTableau& t, Rng& rng) {
  long n = t.shape.size();
  std::vector<double> u(n);
  for (auto& v : u) v = rng.next_double();
  std::sort(u.begin(), u.end());

  PoissonizedTableau p;
  p.shape = t.shape;
  p.entries.resize(t.shape.num_rows());
  for (int i = 1; i <= t.shape.num_rows(); ++i) {
    p.entries[i - 1].resize(t.shape.row(i));
    for (int j = 1; j <= t.shape.row(i); ++j) p.at(i, j) = u[t.at(i, j) - 1];
  }
  return p;
}

StandardTableau depoissonize(const PoissonizedTableau& p) {
  struct Item {
    double v;
    int i, j;
  };
  std::vector<Item> items;
  for (int i = 1; i <= p.shape.num_rows(); ++i)
    for (int j = 1; j <= p.shape.row(i); ++j) items.push_back({p.at(i, j), i, j});
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.v < b.v; });
  for (size_t k = 1; k < items.size(); ++k)
    if (items[k].v == items[k - 1].v)
      throw std::invalid_argument("depoissonize: tied entries");

  StandardTableau t;
  t.shape = p.shape;
  t.entries.resize(p.shape.num_rows());
  for (int i = 1; i <= p.shape.num_rows(); ++i) t.entries[i - 1].resize(p.shape.row(i));
  for (size_t k = 0; k < items.size(); ++k)
    t.at(items[k].i, items[k].j) = static_cast<int>(k) + 1;
  return t;
}

bool validate_tableau(const PoissonizedTableau& p) {
  for (int i = 1; i <= p.shape.num_rows(); ++i) {
    for (int j = 1; j <= p.shape.row(i); ++j) {
      double v = p.at(i, j);
      if (!(v >= 0.0 && v <= 1.0)) return false;
      if (p.shape.contains(i, j + 1) && !(v <= p.at(i, j + 1))) return false;
      if (p.shape.contains(i + 1, j) && !(v <= p.at(i + 1, j))) return false;
    }
  }
  return true;
}

bool validate_tableau(const StandardTableau& t) {
  long n = t.shape.size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int i = 1; i <= t.shape.num_rows(); ++i) {
    for (int j = 1; j <= t.shape.row(i); ++j) {
      int v = t.at(i, j);
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (t.shape.contains(i, j + 1) && !(v < t.at(i, j + 1))) return false;
      if (t.shape.contains(i + 1, j) && !(v < t.at(i + 1, j))) return false;
    }
  }
  return true;
}

namespace {

template <typename T>
nlohmann::json tableau_json(const YoungDiagram& shape,
                            const std::vector<std::vector<T>>& entries) {
  nlohmann::json j;
  j["shape"] = shape.rows;
  j["entries"] = entries;
  return j;
}

}  // namespace

std::string tableau_to_json(const StandardTableau& t) {
  return tableau_json(t.shape, t.entries).dump();
}

std::string tableau_to_json(const PoissonizedTableau& p) {
  return tableau_json(p.shape, p.entries).dump();
}

StandardTableau standard_tableau_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  StandardTableau t;
  t.shape = YoungDiagram(j.at("shape").get<std::vector<int>>());
  t.entries = j.at("entries").get<std::vector<std::vector<int>>>();
  if (!validate_tableau(t)) throw std::invalid_argument("invalid standard tableau");
  return t;
}

PoissonizedTableau poissonized_tableau_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  PoissonizedTableau p;
  p.shape = YoungDiagram(j.at("shape").get<std::vector<int>>());
  p.entries = j.at("entries").get<std::vector<std::vector<double>>>();
  if (!validate_tableau(p)) throw std::invalid_argument("invalid Poissonized tableau");
  return p;
}

}  // namespace rsn
