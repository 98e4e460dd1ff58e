#pragma once

#include "csm/arith.hpp"
#include "csm/expansion.hpp"
#include "csm/partition.hpp"
#include "csm/symmetric.hpp"
#include "csm/zelevinsky.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace csm {

// A torus-fixed point of Z: one coordinate index set per step.
struct FixedPoint {
  std::vector<std::vector<int>> sets;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      out += i ? ", <" : "<";
      for (std::size_t j = 0; j < sets[i].size(); ++j) out += (j ? "," : "") + std::string("e") + std::to_string(sets[i][j]);
      out += ">";
    }
    return out + ")";
  }
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// Characters of the one-parameter subgroup on the coordinate lines of C^n.
struct WeightAssignment {
  std::vector<Integer> w;

  static WeightAssignment standard(int n) {
    WeightAssignment out;
    for (int i = 0; i < n; ++i) out.w.push_back(i);
    return out;
  }
  void check(int n) const {
    if (static_cast<int>(w.size()) != n)
      throw DomainError("need " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] <= w[i - 1]) throw DomainError("weights must be strictly increasing");
  }
  const Integer& operator()(int index) const { return w.at(index - 1); }
};

inline std::vector<int> bound_indices(const FixedPoint& fp, const BoundRef& b) {
  if (b.is_factor()) return fp.sets.at(b.value - 1);
  std::vector<int> out(b.value);
  for (int i = 0; i < b.value; ++i) out[i] = i + 1;
  return out;
}

// Index set of the subspace U in Gr(k, n) at this fixed point.
inline std::vector<int> image_indices(const ResolutionPlan& plan, const FixedPoint& fp) {
  return bound_indices(fp, plan.image);
}

inline std::vector<FixedPoint> enumerate_fixed_points(const ResolutionPlan& plan) {
  std::vector<FixedPoint> out;
  FixedPoint cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == plan.steps.size()) {
      out.push_back(cur);
      return;
    }
    const auto& st = plan.steps[i];
    std::vector<int> lower = bound_indices(cur, st.left);
    std::vector<int> upper = bound_indices(cur, st.right);
    std::vector<int> free;
    std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(), std::back_inserter(free));
    const int pick = st.l;
    std::vector<int> choice(pick);
    auto comb = [&](auto&& cself, int start, int depth) -> void {
      if (depth == pick) {
        std::vector<int> s(lower);
        for (int idx : choice) s.push_back(free[idx]);
        std::sort(s.begin(), s.end());
        cur.sets.push_back(std::move(s));
        self(self, i + 1);
        cur.sets.pop_back();
        return;
      }
      for (int t = start; t < static_cast<int>(free.size()); ++t) {
        choice[depth] = t;
        cself(cself, t + 1, depth + 1);
      }
    };
    comb(comb, 0, 0);
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Integer> tangent_weights(const ResolutionPlan& plan, const FixedPoint& fp, const WeightAssignment& w) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& st = plan.steps[i];
    std::vector<int> lower = bound_indices(fp, st.left);
    std::vector<int> upper = bound_indices(fp, st.right);
    const auto& s = fp.sets[i];
    for (int a : s) {
      if (std::binary_search(lower.begin(), lower.end(), a)) continue;
      for (int b : upper) {
        if (std::binary_search(s.begin(), s.end(), b)) continue;
        Integer x = w(b) - w(a);
        if (x == 0) throw InvariantViolation("zero tangent weight at " + fp.str());
        out.push_back(x);
      }
    }
  }
  if (static_cast<int>(out.size()) != plan.dimension())
    throw InvariantViolation("tangent space dimension mismatch at " + fp.str());
  return out;
}

// Subquotient upper/lower of spaces appearing in the plan, optionally dualized.
struct Bundle {
  BoundRef upper;
  BoundRef lower = BoundRef::flag(0);
  bool dual = false;

  // C^n / U, the universal quotient bundle on Gr(k, n).
  static Bundle quotient(const ResolutionPlan& plan) { return {BoundRef::flag(plan.n), plan.image, false}; }
  // Subbundle U_i (or a flag space) itself.
  static Bundle sub(BoundRef b, bool dual = false) { return {b, BoundRef::flag(0), dual}; }
};

inline std::vector<Integer> bundle_weights(const FixedPoint& fp, const Bundle& e, const WeightAssignment& w) {
  std::vector<int> upper = bound_indices(fp, e.upper);
  std::vector<int> lower = bound_indices(fp, e.lower);
  if (!std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()))
    throw DomainError("bundle " + e.upper.str() + "/" + e.lower.str() + " is not a subquotient");
  std::vector<Integer> out;
  for (int i : upper)
    if (!std::binary_search(lower.begin(), lower.end(), i)) out.push_back(e.dual ? Integer(-w(i)) : w(i));
  return out;
}

// One factor of an integrand evaluated by localization.
struct ClassFactor {
  enum class Kind {
    TangentTotal,  // c(TZ)
    Total,         // c(E)
    Chern,         // c_p(E)
    ChernSchur,    // det(c_{beta_i + j - i}(E))
    Schur,         // s_lambda in the Chern roots of E
  };
  Kind kind = Kind::TangentTotal;
  Bundle bundle;
  int degree = 0;
  Partition shape;

  static ClassFactor tangent_total() { return {}; }
  static ClassFactor total(Bundle e) { return {Kind::Total, e, 0, {}}; }
  static ClassFactor chern(Bundle e, int p) { return {Kind::Chern, e, p, {}}; }
  static ClassFactor chern_schur(Bundle e, Partition beta) { return {Kind::ChernSchur, e, 0, std::move(beta)}; }
  static ClassFactor schur(Bundle e, Partition lambda) { return {Kind::Schur, e, 0, std::move(lambda)}; }
};

using Integrand = std::vector<ClassFactor>;

// Mixed-degree value at a fixed point: entry d is the degree-d component.
struct GradedValue {
  std::vector<Rational> deg;

  static GradedValue one(int top) {
    GradedValue g;
    g.deg.assign(top + 1, 0);
    g.deg[0] = 1;
    return g;
  }
  static GradedValue homogeneous(int top, int d, const Integer& v) {
    GradedValue g;
    g.deg.assign(top + 1, 0);
    if (d <= top) g.deg[d] = v;
    return g;
  }
  static GradedValue from_sequence(int top, const std::vector<Integer>& seq) {
    GradedValue g;
    g.deg.assign(top + 1, 0);
    for (std::size_t d = 0; d < seq.size() && d <= static_cast<std::size_t>(top); ++d) g.deg[d] = seq[d];
    return g;
  }
  GradedValue& operator*=(const GradedValue& o) {
    const std::size_t top = deg.size() - 1;
    std::vector<Rational> out(top + 1, 0);
    for (std::size_t i = 0; i <= top; ++i) {
      if (deg[i] == 0) continue;
      for (std::size_t j = 0; i + j <= top; ++j) out[i + j] += deg[i] * o.deg[j];
    }
    deg = std::move(out);
    return *this;
  }
};

inline GradedValue evaluate_factor(const ResolutionPlan& plan, const FixedPoint& fp, const WeightAssignment& w,
                                   const ClassFactor& f) {
  const int top = plan.dimension();
  switch (f.kind) {
    case ClassFactor::Kind::TangentTotal:
      return GradedValue::from_sequence(top, elementary(tangent_weights(plan, fp, w)));
    case ClassFactor::Kind::Total:
      return GradedValue::from_sequence(top, elementary(bundle_weights(fp, f.bundle, w)));
    case ClassFactor::Kind::Chern: {
      auto e = elementary(bundle_weights(fp, f.bundle, w));
      Integer v = f.degree < static_cast<int>(e.size()) && f.degree >= 0 ? e[f.degree] : Integer(0);
      return GradedValue::homogeneous(top, f.degree, v);
    }
    case ClassFactor::Kind::ChernSchur:
      return GradedValue::homogeneous(top, f.shape.size(), chern_schur_eval(f.shape, bundle_weights(fp, f.bundle, w)));
    case ClassFactor::Kind::Schur:
      return GradedValue::homogeneous(top, f.shape.size(), schur_eval(f.shape, bundle_weights(fp, f.bundle, w)));
  }
  throw DomainError("unknown class factor");
}

// Per-fixed-point contributions of the Bott residue formula, in enumeration
// order.
inline std::vector<Rational> bott_terms(const ResolutionPlan& plan, const Integrand& integrand, const WeightAssignment& w) {
  w.check(plan.n);
  const int top = plan.dimension();
  std::vector<Rational> out;
  for (const auto& fp : enumerate_fixed_points(plan)) {
    GradedValue g = GradedValue::one(top);
    for (const auto& f : integrand) g *= evaluate_factor(plan, fp, w, f);
    Integer euler = 1;
    for (const auto& x : tangent_weights(plan, fp, w)) euler *= x;
    out.push_back(g.deg[top] / make_rational(euler, 1));
  }
  return out;
}

inline Rational bott_integral(const ResolutionPlan& plan, const Integrand& integrand, const WeightAssignment& w) {
  Rational total = 0;
  for (const auto& t : bott_terms(plan, integrand, w)) total += t;
  if (boost::multiprecision::denominator(total) != 1)
    throw InvariantViolation("Bott sum for " + plan.alpha.key() + " is not integral: " + total.str());
  return total;
}

// pi_* of the integrand, expanded in Schubert classes of Gr(k, n).
inline SchubertExpansion pushforward_class(const ResolutionPlan& plan, const Integrand& integrand,
                                           const WeightAssignment& w) {
  SchubertExpansion out(plan.k, plan.n);
  for (const auto& beta : lower_interval(plan.alpha)) {
    Integrand full(integrand);
    full.push_back(ClassFactor::chern_schur(Bundle::quotient(plan), beta));
    out.add(beta, to_integer(bott_integral(plan, full, w), "Schubert coefficient"));
  }
  return out;
}

// pi_* c_SM(Z) = pi_* (c(TZ) ∩ [Z]). Specialized version of pushforward_class
// that evaluates c(TZ) once per fixed point.
inline SchubertExpansion pushforward_csm(const ResolutionPlan& plan, const WeightAssignment& w) {
  w.check(plan.n);
  const int top = plan.dimension();
  const auto betas = lower_interval(plan.alpha);
  std::vector<Rational> sums(betas.size(), 0);
  for (const auto& fp : enumerate_fixed_points(plan)) {
    auto tw = tangent_weights(plan, fp, w);
    auto e = elementary(tw);
    const Integer& euler = e[top];
    std::vector<int> u = image_indices(plan, fp);
    std::vector<Integer> qw;
    for (int i = 1; i <= plan.n; ++i)
      if (!std::binary_search(u.begin(), u.end(), i)) qw.push_back(w(i));
    auto eq = elementary(qw);
    for (std::size_t t = 0; t < betas.size(); ++t) {
      const Partition& beta = betas[t];
      Integer num = e[top - beta.size()] * (beta.empty() ? Integer(1) : detail::jacobi_trudi(beta, eq));
      if (num != 0) sums[t] += make_rational(num, euler);
    }
  }
  SchubertExpansion out(plan.k, plan.n);
  for (std::size_t t = 0; t < betas.size(); ++t) out.add(betas[t], to_integer(sums[t], "Schubert coefficient"));
  return out;
}

inline SchubertExpansion pushforward_csm(const ResolutionPlan& plan) {
  return pushforward_csm(plan, WeightAssignment::standard(plan.n));
}

inline SchubertExpansion pushforward_fundamental(const ResolutionPlan& plan, const WeightAssignment& w) {
  return pushforward_class(plan, {}, w);
}

}  // namespace csm
