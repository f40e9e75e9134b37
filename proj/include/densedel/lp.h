#ifndef DENSEDEL_LP_H_
#define DENSEDEL_LP_H_

#include <string>
#include <utility>
#include <vector>

#include "densedel/rational.h"

namespace densedel {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
  Sense sense = Sense::kGreaterEqual;
  Rational rhs;
  std::string name;
};

// min c^T x subject to the constraints and x >= 0.
class LinearProgram {
 public:
  int add_variable(Rational cost, std::string name = {});
  void add_constraint(LinearConstraint c) { constraints_.push_back(std::move(c)); }

  int num_variables() const { return static_cast<int>(costs_.size()); }
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  Rational objective(const std::vector<Rational>& x) const;
  // Index of the first violated constraint (or bound, reported as
  // constraints().size() + variable), or -1 when x is feasible.
  int first_violation(const std::vector<Rational>& x) const;

 private:
  std::vector<Rational> costs_;
  std::vector<std::string> names_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;
  Rational objective;
  int pivots = 0;
};

// Two-phase primal simplex over exact rationals with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace densedel

#endif  // DENSEDEL_LP_H_
