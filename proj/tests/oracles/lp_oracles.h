#ifndef AEROPLAN_TESTS_LP_ORACLES_H
#define AEROPLAN_TESTS_LP_ORACLES_H

#include <span>
#include <vector>

#include "aeroplan/multiflow.h"

namespace aeroplan::oracle {

// {x >= 0 : G x <= h}.
struct Polyhedron {
  int n = 0;
  std::vector<std::vector<double>> g;
  std::vector<double> h;

  void AddLessEqual(std::vector<double> row, double rhs);
  void AddGreaterEqual(std::vector<double> row, double rhs);
  double MaxViolation(const std::vector<double>& x) const;
};

// Allocation set for fixed demands: normalized demand rows >= 1 and per-slot
// share budgets <= 1, variables ordered [commodity][slot].
Polyhedron AllocationPolyhedron(std::span<const HopDemand> demands, int n_commodities,
                                int n_slots);

// Exact emptiness test: a non-empty pointed polyhedron has a vertex, so try
// every choice of n active constraints (including x_i = 0).
bool VertexFeasible(const Polyhedron& p, double eps, std::vector<double>* point = nullptr);

// Scan of x over {0, 1/steps, ..., 1}^n, skipping points whose slot sums
// already exceed 1. Assumes the AllocationPolyhedron layout.
bool GridFeasible(const Polyhedron& p, int n_commodities, int n_slots, int steps, double eps);

}  // namespace aeroplan::oracle

#endif
