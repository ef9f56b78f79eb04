#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

bool lp_feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& a : A[i]) a = -a;
      b[i] = -b[i];
    }
  }
  // Columns: n originals, m artificials, rhs. Row m is the phase-one cost.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols - 1] = b[i];
    basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) T[m][j] -= A[i][j];
    T[m][cols - 1] -= b[i];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][cols - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded never happens in phase one
    const Rational pivot = T[leave][enter];
    for (auto& x : T[leave]) x /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[m][cols - 1] == 0;
}

bool hull_contains(const std::vector<RationalPoint>& points, const RationalPoint& p) {
  if (points.empty()) return false;
  const std::size_t d = p.dim();
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < points.size(); ++j) A[k][j] = points[j][k];
    b[k] = p[k];
  }
  for (std::size_t j = 0; j < points.size(); ++j) A[d][j] = 1;
  b[d] = 1;
  return lp_feasible(std::move(A), std::move(b));
}

std::vector<bool> cov_membership(const std::vector<RationalPoint>& V, const RationalPoint& p) {
  const std::size_t total = std::size_t{1} << V.size();
  std::vector<bool> in(total, false);
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < V.size(); ++i) {
      if (mask >> i & 1) pts.push_back(V[i]);
    }
    in[mask] = hull_contains(pts, p);
  }
  return in;
}

std::vector<std::vector<int>> cov_minimal(const std::vector<RationalPoint>& V, const RationalPoint& p) {
  const auto in = cov_membership(V, p);
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask < in.size(); ++mask) {
    if (!in[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < V.size() && minimal; ++i) {
      if ((mask >> i & 1) && in[mask & ~(std::size_t{1} << i)]) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> J;
    for (std::size_t i = 0; i < V.size(); ++i) {
      if (mask >> i & 1) J.push_back(static_cast<int>(i));
    }
    out.push_back(J);
  }
  return out;
}

namespace {

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// 0: x>0,y>=0  1: x<=0,y>0  2: x<0,y<=0  3: x>=0,y<0
int quadrant(const Rational& x, const Rational& y) {
  if (x > 0 && y >= 0) return 0;
  if (x <= 0 && y > 0) return 1;
  if (x < 0 && y <= 0) return 2;
  return 3;
}

Rational laplace(const std::vector<std::vector<Rational>>& M) {
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(M[r][k]);
      }
      minor.push_back(row);
    }
    const Rational term = M[0][c] * laplace(minor);
    total += c % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace

bool quadrant_winding(const std::vector<RationalPoint>& loop, const RationalPoint& p, long& winding) {
  const std::size_t n = loop.size();
  long quarter_turns = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = loop[i] - p;
    const auto b = loop[(i + 1) % n] - p;
    const Rational cross = a[0] * b[1] - a[1] * b[0];
    if (cross == 0 && a[0] * b[0] + a[1] * b[1] <= 0) return false;  // p on the segment
    const int qa = quadrant(a[0], a[1]);
    const int qb = quadrant(b[0], b[1]);
    const int diff = (qb - qa + 4) % 4;
    if (diff == 1) quarter_turns += 1;
    if (diff == 3) quarter_turns -= 1;
    if (diff == 2) quarter_turns += 2 * sgn(cross);
  }
  winding = quarter_turns / 4;
  return true;
}

long geometric_degree(const kkm::OrientedComplex& complex, const std::vector<int>& labels, int omitted) {
  const int n = complex.dimension();
  const std::size_t D = static_cast<std::size_t>(n) + 1;
  auto corner = [D](int label) {
    std::vector<Rational> c(D, 0);
    if (label > 0) c[static_cast<std::size_t>(label) - 1] = 1;
    return c;
  };
  std::vector<Rational> centroid(D, Rational(1, static_cast<long>(D) + 1));
  long total = 0;
  const auto& tops = complex.top_simplices();
  for (std::size_t t = 0; t < tops.size(); ++t) {
    std::vector<int> seen;
    for (auto v : tops[t]) seen.push_back(labels[static_cast<std::size_t>(v)]);
    auto sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    if (std::find(sorted.begin(), sorted.end(), omitted) != sorted.end()) continue;
    std::vector<std::vector<Rational>> rows;
    const auto w0 = corner(seen[0]);
    std::vector<Rational> outward(D);
    for (std::size_t k = 0; k < D; ++k) outward[k] = w0[k] - centroid[k];
    rows.push_back(outward);
    for (std::size_t i = 1; i < seen.size(); ++i) {
      const auto wi = corner(seen[i]);
      std::vector<Rational> r(D);
      for (std::size_t k = 0; k < D; ++k) r[k] = wi[k] - w0[k];
      rows.push_back(r);
    }
    total += complex.signs()[t] * sgn(laplace(rows));
  }
  return total;
}

bool strictly_interior(const std::vector<RationalPoint>& V, const RationalPoint& p) {
  const std::size_t d = p.dim();
  bool found = false;
  std::vector<std::size_t> pick(d);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) -> bool {
    if (pos == d) {
      // Normal by cofactors of the rows v_j - v_0.
      std::vector<Rational> normal(d);
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> unit(d, 0);
        unit[c] = 1;
        M.push_back(unit);
        for (std::size_t j = 1; j < d; ++j) {
          std::vector<Rational> r(d);
          for (std::size_t k = 0; k < d; ++k) r[k] = V[pick[j]][k] - V[pick[0]][k];
          M.push_back(r);
        }
        normal[c] = laplace(M);
      }
      if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; })) return true;
      auto eval = [&](const RationalPoint& x) {
        Rational s = 0;
        for (std::size_t k = 0; k < d; ++k) s += normal[k] * (x[k] - V[pick[0]][k]);
        return s;
      };
      int side = 0;
      for (const auto& v : V) {
        const int s = sgn(eval(v));
        if (s == 0) continue;
        if (side == 0) side = s;
        if (s != side) return true;  // not supporting
      }
      if (side == 0) return true;
      found = true;
      return sgn(eval(p)) == side;
    }
    for (std::size_t i = from; i < V.size(); ++i) {
      pick[pos] = i;
      if (!rec(pos + 1, i + 1)) return false;
    }
    return true;
  };
  return rec(0, 0) && found && hull_contains(V, p);
}

std::vector<kkm::Simplex> close_up(const std::vector<kkm::Simplex>& all, const std::vector<kkm::Simplex>& generators) {
  std::vector<kkm::Simplex> out;
  for (const auto& s : all) {
    for (const auto& g : generators) {
      if (std::includes(s.begin(), s.end(), g.begin(), g.end())) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

std::vector<kkm::Simplex> close_down(const std::vector<kkm::Simplex>& all, const std::vector<kkm::Simplex>& generators) {
  std::vector<kkm::Simplex> out;
  for (const auto& s : all) {
    for (const auto& g : generators) {
      if (std::includes(g.begin(), g.end(), s.begin(), s.end())) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, long range, long den) {
  const long q = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den));
  const long span = 2 * range * q + 1;
  const long p = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) - range * q;
  return Rational(p, q);
}

RationalPoint random_point(std::mt19937_64& rng, std::size_t d, long range, long den) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < d; ++k) c.push_back(random_rational(rng, range, den));
  return RationalPoint(std::move(c));
}

}  // namespace oracle
