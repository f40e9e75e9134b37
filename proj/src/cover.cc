#include "densedel/cover.h"

#include <cmath>

#include "densedel/error.h"
#include "densedel/size_cap.h"

namespace densedel {

namespace {

class LambdaSubmod : public SubmodOracle {
 public:
  LambdaSubmod(VertexSet ground, std::function<Rational(const VertexSet&)> eval, std::string family)
      : ground_(std::move(ground)), eval_(std::move(eval)), family_(std::move(family)) {}
  const VertexSet& ground() const override { return ground_; }
  Rational eval(const VertexSet& s) const override { return eval_(s); }
  std::string family() const override { return family_; }

 private:
  VertexSet ground_;
  std::function<Rational(const VertexSet&)> eval_;
  std::string family_;
};

class ReducedH : public SubmodOracle {
 public:
  ReducedH(OraclePtr f, Rational rho)
      : f_(std::move(f)), rho_(std::move(rho)), g_all_(f_->excess_max(rho_, f_->ground()).value) {}

  const VertexSet& ground() const override { return f_->ground(); }
  Rational eval(const VertexSet& s) const override {
    if (s.empty()) return 0;
    return g_all_ - f_->excess_max(rho_, set_difference(f_->ground(), s)).value;
  }
  std::string family() const override { return "reduced-h(" + f_->family() + ")"; }

 private:
  OraclePtr f_;
  Rational rho_;
  Rational g_all_;
};

class ReducedF : public SupermodOracle {
 public:
  explicit ReducedF(SubmodPtr h) : h_(std::move(h)), h_all_(h_->eval(h_->ground())) {}

  const VertexSet& ground() const override { return h_->ground(); }
  Rational eval(const VertexSet& s) const override {
    if (s.empty()) return 0;
    return h_all_ - h_->eval(set_difference(h_->ground(), s)) + Rational(static_cast<long>(s.size()));
  }
  std::string family() const override { return "reduced-f(" + h_->family() + ")"; }

 private:
  SubmodPtr h_;
  Rational h_all_;
};

const Cost& cost_of(const SubmodCoverInstance& inst, VertexId v) {
  if (v < 0 || v >= static_cast<int>(inst.costs.size())) {
    throw Error(ErrorCode::kInvalidCost, "no cost for element " + std::to_string(v));
  }
  return inst.costs[v];
}

}  // namespace

SubmodPtr make_submod(VertexSet ground, std::function<Rational(const VertexSet&)> eval,
                      std::string family) {
  return std::make_shared<LambdaSubmod>(normalized(std::move(ground)), std::move(eval),
                                        std::move(family));
}

bool SubmodCoverInstance::feasible(const VertexSet& f) const {
  return h->eval(normalized(f)) >= h->eval(h->ground());
}

SubmodCoverInstance reduce_dd_to_cover(const OraclePtr& f, const Rational& rho,
                                       std::vector<Cost> costs) {
  const int cap = size_cap(18);
  if (!f->fast_excess() && f->ground_size() > cap) {
    throw Error(ErrorCode::kTooLarge, "oracle without native excess maximization has " +
                                          std::to_string(f->ground_size()) +
                                          " elements (cap " + std::to_string(cap) + ")");
  }
  if (rho.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative density target");
  return {std::make_shared<ReducedH>(f, rho), std::move(costs)};
}

CoverToDd reduce_cover_to_dd(const SubmodCoverInstance& inst) {
  return {std::make_shared<ReducedF>(inst.h), Rational(1)};
}

GreedyCoverResult greedy_cover(const SubmodCoverInstance& inst) {
  const SubmodOracle& h = *inst.h;
  const Rational target = h.eval(h.ground());
  GreedyCoverResult result;
  result.cost = Cost::zero();
  VertexSet chosen;
  Rational current = h.eval(chosen);
  while (current < target) {
    // Rank: 2 = zero cost, 1 = finite positive cost, 0 = infinite cost.
    int best_rank = -1;
    Rational best_key;
    VertexId best = -1;
    Rational best_value;
    for (VertexId v : h.ground()) {
      if (contains(chosen, v)) continue;
      const Rational value = h.eval(with(chosen, v));
      const Rational gain = value - current;
      if (gain.sign() <= 0) continue;
      const Cost& c = cost_of(inst, v);
      int rank;
      Rational key;
      if (c.is_infinite()) {
        rank = 0;
        key = gain;
      } else if (c.value().sign() == 0) {
        rank = 2;
        key = 0;
      } else {
        rank = 1;
        key = gain / c.value();
      }
      if (rank > best_rank || (rank == best_rank && key > best_key)) {
        best_rank = rank;
        best_key = key;
        best = v;
        best_value = value;
      }
    }
    if (best < 0) {
      throw Error(ErrorCode::kInvariantViolation, "no element increases h before reaching h(V)");
    }
    chosen = with(chosen, best);
    result.order.push_back(best);
    result.cost += cost_of(inst, best);
    if (best_rank == 0) result.finite_cost = false;
    current = best_value;
  }
  result.chosen = chosen;
  return result;
}

double wolsey_factor_upper(const Rational& max_single_value) {
  const double h = max_single_value.to_double();
  // log is faithfully rounded; two ulps upward covers it and the conversion.
  double ln = std::log(std::nextafter(h, INFINITY));
  ln = std::nextafter(std::nextafter(ln, INFINITY), INFINITY);
  return std::nextafter(1.0 + ln, INFINITY);
}

}  // namespace densedel
