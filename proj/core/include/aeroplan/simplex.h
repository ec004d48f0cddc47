#ifndef AEROPLAN_SIMPLEX_H
#define AEROPLAN_SIMPLEX_H

#include <optional>
#include <vector>

namespace aeroplan {

// Feasibility of {x >= 0 : rows} by the phase-one simplex method on a dense
// tableau. Pivoting uses the steepest reduced cost and switches to Bland's
// rule once a run of degenerate pivots suggests cycling.
class PhaseOneSimplex {
 public:
  enum class Sense { kLessEqual, kGreaterEqual };

  explicit PhaseOneSimplex(int num_vars) : num_vars_(num_vars) {}

  void AddConstraint(std::vector<double> coeffs, Sense sense, double rhs);

  // A point satisfying every constraint to within `tol` (absolute, per row),
  // or nullopt when the system is infeasible.
  std::optional<std::vector<double>> FindFeasiblePoint(double tol = 1e-9) const;

  int num_vars() const { return num_vars_; }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  int last_pivot_count() const { return pivots_; }

 private:
  struct Row {
    std::vector<double> a;
    Sense sense;
    double rhs;
  };

  int num_vars_;
  std::vector<Row> rows_;
  mutable int pivots_ = 0;
};

}  // namespace aeroplan

#endif
