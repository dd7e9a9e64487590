#include "rsn/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rsn/common.hpp"

namespace rsn {

void PointConfiguration::normalize() { std::sort(points.begin(), points.end()); }

bool PointConfiguration::is_simple() const {
  for (size_t k = 1; k < points.size(); ++k)
    if (points[k] == points[k - 1]) return false;
  return true;
}

void InfiniteTableau::set(int x, int y, double v) {
  Cell c{x, y};
  if (!in_delta_inf(c)) throw std::invalid_argument("InfiniteTableau: cell not in Delta_inf");
  if (!(v >= 0.0)) throw std::invalid_argument("InfiniteTableau: entries must be >= 0");
  cells[c] = v;
}

bool InfiniteTableau::is_valid() const {
  try {
    validate();
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

void InfiniteTableau::validate() const {
  auto value = [&](int x, int y) {
    auto it = cells.find(Cell{x, y});
    return it == cells.end() ? std::numeric_limits<double>::infinity() : it->second;
  };
  for (const auto& [c, v] : cells) {
    if (!in_delta_inf(c)) throw std::invalid_argument("cell outside Delta_inf");
    if (c.y > 0) {
      // Both covered cells must be present and no larger; a missing one is
      // +inf and breaks T(x-1,y-1) <= T(x,y).
      if (value(c.x - 1, c.y - 1) > v || value(c.x + 1, c.y - 1) > v) {
        std::ostringstream msg;
        msg << "tableau constraint violated above cell (" << c.x - 1 << "," << c.y - 1
            << ") / (" << c.x + 1 << "," << c.y - 1 << ")";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

WindowSpec::WindowSpec(double alpha_, int n_) : alpha(alpha_), n(n_) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw std::domain_error("WindowSpec: |alpha| < 1 required");
  if (n < 1) throw std::domain_error("WindowSpec: n >= 1 required");
  c_n = static_cast<int>(2 * floor_nudged((1.0 + alpha) * n / 2.0)) - n;
  beta = std::sqrt(1.0 - alpha * alpha);
}

WindowSpec::WindowSpec(double alpha_, int n_, int c) : WindowSpec(alpha_, n_) {
  if (((c - n) % 2) != 0) throw std::domain_error("WindowSpec: c_n must have the parity of n");
  if (std::abs(c - alpha * n) > 2.0 + 1e-9)
    throw std::domain_error("WindowSpec: |c_n - alpha n| <= 2 required");
  c_n = c;
}

PointConfiguration pyt_to_jumps(const PoissonizedTableau& p, double min_entry) {
  PointConfiguration out;
  for (int i = 1; i <= p.shape.num_rows(); ++i)
    for (int j = 1; j <= p.shape.row(i); ++j) {
      double t = p.at(i, j);
      if (t >= min_entry) out.points.push_back({j - i, t});
    }
  out.normalize();
  if (!out.is_simple()) throw std::invalid_argument("pyt_to_jumps: tied entries");
  return out;
}

PointConfiguration tableau_to_jumps(const InfiniteTableau& t) {
  PointConfiguration out;
  out.points.reserve(t.cells.size());
  for (const auto& [c, v] : t.cells) out.points.push_back({c.x, v});
  out.normalize();
  return out;
}

InfiniteTableau jumps_to_tableau(const PointConfiguration& x) {
  InfiniteTableau t;
  int cur_x = 0;
  int k = 0;
  for (size_t idx = 0; idx < x.points.size(); ++idx) {
    const JumpPoint& p = x.points[idx];
    if (idx == 0 || p.x != cur_x) {
      cur_x = p.x;
      k = 1;
    } else {
      if (p.u == x.points[idx - 1].u)
        throw std::invalid_argument("jumps_to_tableau: configuration not simple");
      ++k;
    }
    int even = (cur_x % 2 == 0) ? 1 : 0;
    t.set(cur_x, 2 * k - 1 - even, p.u);
  }
  t.validate();
  return t;
}

InfiniteTableau embed_staircase(const PoissonizedTableau& p, const WindowSpec& w,
                                double u_max) {
  int n = 0;
  if (!p.shape.is_staircase(&n) || n != w.n)
    throw std::domain_error("embed_staircase: shape must be the staircase Delta_n of the window");
  InfiniteTableau t;
  for (int i = 1; i <= p.shape.num_rows(); ++i)
    for (int j = 1; j <= p.shape.row(i); ++j) {
      double v = w.beta * n * (1.0 - p.at(i, j));
      if (u_max >= 0.0 && v > u_max) continue;
      t.set(j - i - w.c_n, n - i - j, v);
    }
  return t;
}

PointConfiguration rescale_window(const PointConfiguration& x, const WindowSpec& w) {
  PointConfiguration out;
  out.points.reserve(x.points.size());
  for (const JumpPoint& p : x.points)
    out.points.push_back({p.x - w.c_n, w.beta * w.n * (1.0 - p.u)});
  out.normalize();
  return out;
}

void write_points_csv(std::ostream& os, const PointConfiguration& c) {
  os << "x,u\n";
  os.precision(17);
  for (const JumpPoint& p : c.points) os << p.x << "," << p.u << "\n";
}

std::string points_to_json(const PointConfiguration& c, const std::string& kind) {
  nlohmann::json j;
  if (!kind.empty()) j["kind"] = kind;
  auto& arr = j["points"] = nlohmann::json::array();
  for (const JumpPoint& p : c.points) arr.push_back({p.x, p.u});
  return j.dump();
}

PointConfiguration points_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  PointConfiguration c;
  for (const auto& e : j.at("points"))
    c.points.push_back({e.at(0).get<int>(), e.at(1).get<double>()});
  c.normalize();
  return c;
}

}  // namespace rsn
