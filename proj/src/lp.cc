#include "densedel/lp.h"

#include <gmpxx.h>

#include "densedel/error.h"

namespace densedel {

int LinearProgram::add_variable(Rational cost, std::string name) {
  costs_.push_back(std::move(cost));
  names_.push_back(std::move(name));
  return static_cast<int>(costs_.size()) - 1;
}

Rational LinearProgram::objective(const std::vector<Rational>& x) const {
  Rational total = 0;
  for (int j = 0; j < num_variables(); ++j) total += costs_[j] * x[j];
  return total;
}

int LinearProgram::first_violation(const std::vector<Rational>& x) const {
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const LinearConstraint& c = constraints_[i];
    Rational lhs = 0;
    for (const auto& [var, coef] : c.terms) lhs += coef * x.at(var);
    const bool ok = c.sense == Sense::kLessEqual      ? lhs <= c.rhs
                    : c.sense == Sense::kGreaterEqual ? lhs >= c.rhs
                                                      : lhs == c.rhs;
    if (!ok) return static_cast<int>(i);
  }
  for (int j = 0; j < num_variables(); ++j) {
    if (x.at(j).sign() < 0) return static_cast<int>(constraints_.size()) + j;
  }
  return -1;
}

namespace {

// Dense tableau in canonical form: every basic column is a unit vector and
// `reduced` holds c_j - c_B^T B^-1 A_j.
class Tableau {
 public:
  Tableau(int rows, int cols) : a_(rows, std::vector<mpq_class>(cols)), b_(rows), basis_(rows, -1),
                                reduced_(cols), allowed_(cols, true) {}

  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return static_cast<int>(reduced_.size()); }

  mpq_class& at(int i, int j) { return a_[i][j]; }
  mpq_class& rhs(int i) { return b_[i]; }
  int& basic(int i) { return basis_[i]; }
  void forbid(int j) { allowed_[j] = false; }

  void set_objective(const std::vector<mpq_class>& cost) {
    objective_ = 0;
    for (int j = 0; j < cols(); ++j) reduced_[j] = cost[j];
    for (int i = 0; i < rows(); ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols(); ++j) {
        if (a_[i][j] != 0) reduced_[j] -= cb * a_[i][j];
      }
      objective_ += cb * b_[i];
    }
  }

  void pivot(int r, int c) {
    const mpq_class p = a_[r][c];
    for (int j = 0; j < cols(); ++j) {
      if (a_[r][j] != 0) a_[r][j] /= p;
    }
    b_[r] /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const mpq_class factor = a_[i][c];
      for (int j = 0; j < cols(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= factor * a_[r][j];
      }
      b_[i] -= factor * b_[r];
    }
    if (reduced_[c] != 0) {
      const mpq_class factor = reduced_[c];
      for (int j = 0; j < cols(); ++j) {
        if (a_[r][j] != 0) reduced_[j] -= factor * a_[r][j];
      }
      objective_ += factor * b_[r];
    }
    basis_[r] = c;
    ++pivots_;
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (allowed_[j] && reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best_ratio;
      for (int i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        mpq_class ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  const mpq_class& objective() const { return objective_; }
  int pivots() const { return pivots_; }

  void drop_row(int r) {
    a_.erase(a_.begin() + r);
    b_.erase(b_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

 private:
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> b_;
  std::vector<int> basis_;
  std::vector<mpq_class> reduced_;
  std::vector<bool> allowed_;
  mpq_class objective_ = 0;
  int pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const auto& cons = lp.constraints();
  const int m = static_cast<int>(cons.size());

  // Column layout: originals, then one slack/surplus per inequality, then
  // one artificial per row that lacks a +1 slack.
  std::vector<int> slack_col(m, -1);
  std::vector<int> art_col(m, -1);
  std::vector<bool> flip(m, false);
  int cols = n;
  for (int i = 0; i < m; ++i) {
    flip[i] = cons[i].rhs.sign() < 0;
    if (cons[i].sense != Sense::kEqual) slack_col[i] = cols++;
  }
  const int first_artificial = cols;
  for (int i = 0; i < m; ++i) {
    Sense s = cons[i].sense;
    if (flip[i] && s != Sense::kEqual) s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
    if (s != Sense::kLessEqual) art_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (int i = 0; i < m; ++i) {
    const mpq_class sign = flip[i] ? -1 : 1;
    for (const auto& [var, coef] : cons[i].terms) {
      if (var < 0 || var >= n) throw Error(ErrorCode::kInvalidArgument, "constraint references unknown variable");
      t.at(i, var) += sign * coef.raw();
    }
    t.rhs(i) = sign * cons[i].rhs.raw();
    if (slack_col[i] >= 0) {
      // Original sense decides the slack sign; flipping the row flips it too.
      const int s = cons[i].sense == Sense::kLessEqual ? 1 : -1;
      t.at(i, slack_col[i]) = sign * s;
    }
    if (art_col[i] >= 0) {
      t.at(i, art_col[i]) = 1;
      t.basic(i) = art_col[i];
    } else {
      t.basic(i) = slack_col[i];
    }
  }

  LpSolution sol;
  std::vector<mpq_class> phase1(cols, 0);
  for (int j = first_artificial; j < cols; ++j) phase1[j] = 1;
  t.set_objective(phase1);
  t.optimize();
  if (t.objective() != 0) {
    sol.status = LpStatus::kInfeasible;
    sol.pivots = t.pivots();
    return sol;
  }
  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (int i = t.rows() - 1; i >= 0; --i) {
    if (t.basic(i) < first_artificial) continue;
    int enter = -1;
    for (int j = 0; j < first_artificial; ++j) {
      if (t.at(i, j) != 0) {
        enter = j;
        break;
      }
    }
    if (enter >= 0) {
      t.pivot(i, enter);
    } else {
      t.drop_row(i);
    }
  }
  for (int j = first_artificial; j < cols; ++j) t.forbid(j);

  std::vector<mpq_class> phase2(cols, 0);
  for (int j = 0; j < n; ++j) phase2[j] = lp.costs()[j].raw();
  t.set_objective(phase2);
  if (!t.optimize()) {
    sol.status = LpStatus::kUnbounded;
    sol.pivots = t.pivots();
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.values.assign(n, Rational(0));
  for (int i = 0; i < t.rows(); ++i) {
    if (t.basic(i) < n) sol.values[t.basic(i)] = Rational(t.rhs(i));
  }
  sol.objective = lp.objective(sol.values);
  sol.pivots = t.pivots();
  return sol;
}

}  // namespace densedel
