#include "rsn/local_eg.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rsn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cluster_value(const std::map<Cell, double>& cells, int x, int y) {
  auto it = cells.find(Cell{x, y});
  return it == cells.end() ? kInf : it->second;
}

// One sliding step on a raw cell map; emits (x, t) and mutates the map.
std::pair<int, double> min_step_inplace(std::map<Cell, double>& cells) {
  if (cells.empty()) throw std::domain_error("eg_min_step: empty cluster");

  auto min_it = cells.begin();
  for (auto it = cells.begin(); it != cells.end(); ++it)
    if (it->second < min_it->second) min_it = it;
  Cell c0 = min_it->first;
  double t = min_it->second;
  if (c0.y != 0)
    throw std::invalid_argument("eg_min_step: minimum entry not on the bottom level");

  std::vector<Cell> path{c0};
  for (;;) {
    Cell cur = path.back();
    double left = cluster_value(cells, cur.x - 1, cur.y + 1);
    double right = cluster_value(cells, cur.x + 1, cur.y + 1);
    if (left == kInf && right == kInf) break;
    path.push_back(left < right ? Cell{cur.x - 1, cur.y + 1} : Cell{cur.x + 1, cur.y + 1});
  }
  for (size_t r = 0; r + 1 < path.size(); ++r) cells[path[r]] = cells.at(path[r + 1]);
  cells.erase(path.back());
  return {c0.x / 2, t};
}

}  // namespace

std::vector<Cluster> graded_clusters(const InfiniteTableau& t, double t_max) {
  std::map<Cell, double> level;
  std::set<double> values;
  for (const auto& [c, v] : t.cells) {
    if (v <= t_max) {
      if (!values.insert(v).second)
        throw std::invalid_argument("graded_clusters: entries not distinct");
      level[c] = v;
    }
  }

  std::vector<Cluster> out;
  std::set<Cell> seen;
  for (const auto& [start, v0] : level) {
    if (seen.count(start)) continue;
    Cluster cl;
    std::vector<Cell> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      cl.cells[c] = level.at(c);
      for (Cell nb : {Cell{c.x - 1, c.y + 1}, Cell{c.x + 1, c.y + 1}, Cell{c.x - 1, c.y - 1},
                      Cell{c.x + 1, c.y - 1}}) {
        if (nb.y < 0 || seen.count(nb) || !level.count(nb)) continue;
        seen.insert(nb);
        stack.push_back(nb);
      }
    }
    // Downward closure within the level set.
    for (const auto& [c, v] : cl.cells) {
      if (c.y == 0) continue;
      if (cluster_value(cl.cells, c.x - 1, c.y - 1) > v ||
          cluster_value(cl.cells, c.x + 1, c.y - 1) > v) {
        std::ostringstream msg;
        msg << "graded_clusters: component not downward closed at (" << c.x << "," << c.y << ")";
        throw std::invalid_argument(msg.str());
      }
    }
    out.push_back(std::move(cl));
  }
  return out;
}

std::tuple<int, double, Cluster> eg_min_step(const Cluster& c) {
  Cluster next = c;
  auto [x, t] = min_step_inplace(next.cells);
  return {x, t, next};
}

PointConfiguration swaps_of_tableau(const InfiniteTableau& t, double t_max) {
  PointConfiguration out;
  for (Cluster& cl : graded_clusters(t, t_max)) {
    while (!cl.cells.empty()) {
      auto [x, u] = min_step_inplace(cl.cells);
      out.points.push_back({x, u});
    }
  }
  out.normalize();
  return out;
}

PointConfiguration local_eg_on_points(const PointConfiguration& x, int a, int b,
                                      double t_max, int search_bound) {
  if (a > b) throw std::domain_error("local_eg_on_points: a <= b required");

  std::map<int, std::set<double>> cols;
  for (const JumpPoint& p : x.points) {
    if (p.u > t_max) continue;
    if (!cols[p.x].insert(p.u).second)
      throw std::invalid_argument("local_eg_on_points: tied points on a column");
  }
  auto column_empty = [&](int c) {
    auto it = cols.find(c);
    return it == cols.end() || it->second.empty();
  };

  int a_hat = 2 * a - 1, b_hat = 2 * b + 1;
  while (a_hat > 2 * a - search_bound && !column_empty(a_hat)) --a_hat;
  while (b_hat < 2 * b + search_bound && !column_empty(b_hat)) ++b_hat;
  if (!column_empty(a_hat) || !column_empty(b_hat))
    throw std::invalid_argument("local_eg_on_points: no empty bounding columns within search bound");

  // Restrict to the open window.
  std::map<int, std::set<double>> win;
  for (auto& [c, us] : cols)
    if (c > a_hat && c < b_hat && !us.empty()) win[c] = us;

  PointConfiguration out;
  auto total = [&] {
    size_t s = 0;
    for (auto& [c, us] : win) s += us.size();
    return s;
  };

  while (total() > 0) {
    // Lowest point of the whole window.
    int mx = 0;
    double mu = kInf;
    for (auto& [c, us] : win)
      if (!us.empty() && *us.begin() < mu) {
        mu = *us.begin();
        mx = c;
      }
    if (mx % 2 != 0)
      throw std::invalid_argument("local_eg_on_points: lowest point on an odd column");
    out.points.push_back({mx / 2, mu});

    // Sliding path: nearest point above within one column.
    std::vector<JumpPoint> path{{mx, mu}};
    for (;;) {
      const JumpPoint cur = path.back();
      int bx = 0;
      double bu = kInf;
      for (int c = cur.x - 1; c <= cur.x + 1; ++c) {
        auto it = win.find(c);
        if (it == win.end()) continue;
        auto up = it->second.upper_bound(cur.u);
        if (up != it->second.end() && *up < bu) {
          bu = *up;
          bx = c;
        }
      }
      if (bu == kInf) break;
      if (bx == cur.x)
        throw std::invalid_argument("local_eg_on_points: interlacing violated");
      path.push_back({bx, bu});
    }
    for (const JumpPoint& p : path) win[p.x].erase(p.u);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      win[path[i].x].insert(path[i + 1].u);
  }
  out.normalize();
  return out;
}

}  // namespace rsn
