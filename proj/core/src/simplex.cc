#include "aeroplan/simplex.h"

#include <algorithm>
#include <cmath>

#include "aeroplan/errors.h"

namespace aeroplan {
namespace {

constexpr double kPivotEps = 1e-12;
constexpr int kDegenerateRunBeforeBland = 50;
constexpr long kMaxPivots = 200000;

}  // namespace

void PhaseOneSimplex::AddConstraint(std::vector<double> coeffs, Sense sense, double rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars_) throw InputError("simplex: coefficient count mismatch");
  rows_.push_back({std::move(coeffs), sense, rhs});
}

std::optional<std::vector<double>> PhaseOneSimplex::FindFeasiblePoint(double tol) const {
  pivots_ = 0;
  int m = num_constraints();
  int n = num_vars_;
  if (m == 0) return std::vector<double>(n, 0.0);

  // Normalize to rhs >= 0.
  std::vector<Row> rows = rows_;
  for (Row& r : rows) {
    if (r.rhs < 0) {
      for (double& v : r.a) v = -v;
      r.rhs = -r.rhs;
      r.sense = r.sense == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
    }
  }

  // Columns: x | one slack/surplus per row | one artificial per >= row | rhs.
  int n_art = 0;
  for (const Row& r : rows) n_art += r.sense == Sense::kGreaterEqual ? 1 : 0;
  int cols = n + m + n_art;
  int width = cols + 1;
  std::vector<double> tab(static_cast<size_t>(m + 1) * width, 0.0);
  auto at = [&](int i, int j) -> double& { return tab[static_cast<size_t>(i) * width + j]; };
  std::vector<int> basis(m);
  int art = n + m;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = rows[i].a[j];
    at(i, cols) = rows[i].rhs;
    if (rows[i].sense == Sense::kLessEqual) {
      at(i, n + i) = 1;
      basis[i] = n + i;
    } else {
      at(i, n + i) = -1;
      at(i, art) = 1;
      basis[i] = art++;
    }
  }
  // Objective row: minimize the sum of artificials, expressed in nonbasics.
  int obj = m;
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n + m) continue;
    for (int j = 0; j < n + m; ++j) at(obj, j) -= at(i, j);
    at(obj, cols) -= at(i, cols);
  }

  int degenerate_run = 0;
  while (pivots_ < kMaxPivots) {
    bool bland = degenerate_run >= kDegenerateRunBeforeBland;
    int enter = -1;
    double best = -kPivotEps;
    for (int j = 0; j < cols; ++j) {
      double d = at(obj, j);
      if (d < best) {
        enter = j;
        if (bland) break;
        best = d;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double ratio = 0;
    for (int i = 0; i < m; ++i) {
      double a = at(i, enter);
      if (a <= kPivotEps) continue;
      double r = at(i, cols) / a;
      if (leave < 0 || r < ratio - 1e-15 || (r <= ratio + 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        ratio = r;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen in phase one
    degenerate_run = ratio <= 1e-15 ? degenerate_run + 1 : 0;

    double p = at(leave, enter);
    for (int j = 0; j < width; ++j) at(leave, j) /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = at(i, enter);
      if (f == 0) continue;
      double* ri = &at(i, 0);
      const double* rl = &at(leave, 0);
      for (int j = 0; j < width; ++j) ri[j] -= f * rl[j];
    }
    basis[leave] = enter;
    ++pivots_;
  }

  double infeasibility = -at(obj, cols);
  if (infeasibility > tol * std::max(1, n_art)) return std::nullopt;

  std::vector<double> x(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = std::max(0.0, at(i, cols));
  }
  for (const Row& r : rows_) {
    double lhs = 0;
    for (int j = 0; j < n; ++j) lhs += r.a[j] * x[j];
    double slack = r.sense == Sense::kLessEqual ? r.rhs - lhs : lhs - r.rhs;
    if (slack < -std::max(tol, 1e-7 * std::abs(r.rhs)) * 10) return std::nullopt;
  }
  return x;
}

}  // namespace aeroplan
