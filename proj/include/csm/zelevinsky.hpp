#pragma once

#include "csm/arith.hpp"
#include "csm/partition.hpp"
#include "csm/symmetric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace csm {

// Order in which the peaks of a partition are resolved: perm[t] is the
// (1-based, original) label of the peak removed at step t + 1.
struct PeakOrder {
  std::vector<int> perm;

  static PeakOrder identity(int m) {
    PeakOrder s;
    s.perm.resize(m);
    std::iota(s.perm.begin(), s.perm.end(), 1);
    return s;
  }
  static PeakOrder reversed(int m) {
    PeakOrder s = identity(m);
    std::reverse(s.perm.begin(), s.perm.end());
    return s;
  }
  int size() const { return static_cast<int>(perm.size()); }
  bool is_permutation() const {
    std::vector<int> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1) return false;
    return true;
  }
  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
    return os.str();
  }
  friend bool operator==(const PeakOrder&, const PeakOrder&) = default;
  friend auto operator<=>(const PeakOrder&, const PeakOrder&) = default;
};

// A bound in the incidence conditions of a resolution step: a space of the
// fixed flag (by dimension) or the subspace chosen at an earlier step.
struct BoundRef {
  enum class Kind { Flag, Factor };
  Kind kind = Kind::Flag;
  int value = 0;

  static BoundRef flag(int dim) { return {Kind::Flag, dim}; }
  static BoundRef factor(int step) { return {Kind::Factor, step}; }
  bool is_factor() const { return kind == Kind::Factor; }
  std::string str() const { return (is_factor() ? "U_" : "V_") + std::to_string(value); }
  friend bool operator==(const BoundRef&, const BoundRef&) = default;
};

// One Grassmannian bundle in the tower: U_i of dimension k with
// left ⊂ U_i ⊂ right.
struct PlanStep {
  int k = 0;
  BoundRef left;
  BoundRef right;
  int l = 0;  // k - dim(left)
  int r = 0;  // dim(right) - k
  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct ResolutionPlan {
  Partition alpha;
  PeakOrder order;
  int k = 0;
  int n = 0;
  std::vector<PlanStep> steps;
  BoundRef image;  // the subspace mapped to Gr(k, n)

  int dim_of(const BoundRef& b) const {
    return b.is_factor() ? steps.at(b.value - 1).k : b.value;
  }
  int dimension() const {
    int d = 0;
    for (auto& st : steps) d += st.l * st.r;
    return d;
  }
  // Dimension of the space V^m that contains every chosen subspace.
  int ambient_dim() const { return to_peak_form(alpha, k).flag_dim(to_peak_form(alpha, k).peaks()); }
  // Bounds of step i+1 form a chain U_i ⊂ U_{i-1} ⊂ ... ⊂ V^m.
  bool is_order_reversing() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& st = steps[i];
      if (st.left.is_factor()) return false;
      if (i == 0 ? st.right != BoundRef::flag(ambient_dim()) : st.right != BoundRef::factor(static_cast<int>(i)))
        return false;
    }
    return true;
  }
};

namespace detail {

// Evolving state of the peak-removal recursion.
struct PeakState {
  PeakForm pf;
  std::vector<BoundRef> flag;  // F^0 .. F^m
  std::vector<int> dims;       // dim F^i
};

inline std::vector<int> shift_order(const std::vector<int>& rest, int removed) {
  std::vector<int> out;
  out.reserve(rest.size());
  for (int p : rest) out.push_back(p > removed ? p - 1 : p);
  return out;
}

}  // namespace detail

inline ResolutionPlan build_plan(const Partition& alpha, const PeakOrder& s, int k, int n) {
  if (!alpha.fits(k, n - k)) throw DomainError("partition " + alpha.key() + " outside the box");
  PeakForm pf = to_peak_form(alpha, k);
  const int m = pf.peaks();
  if (s.size() != m || !s.is_permutation())
    throw DomainError("peak order (" + s.str() + ") is not a permutation of 1.." + std::to_string(m));

  ResolutionPlan plan;
  plan.alpha = alpha;
  plan.order = s;
  plan.k = k;
  plan.n = n;

  detail::PeakState st{pf, {}, {}};
  for (int i = 0; i <= m; ++i) {
    st.dims.push_back(pf.flag_dim(i));
    st.flag.push_back(BoundRef::flag(pf.flag_dim(i)));
  }

  std::vector<int> positions(s.perm);
  while (!positions.empty()) {
    const int j = positions.front();
    positions = detail::shift_order(std::vector<int>(positions.begin() + 1, positions.end()), j);
    const int kk = st.dims[j - 1] + st.pf.a[j - 1];
    const int r = st.dims[j] - kk;
    BoundRef chosen;
    if (r == 0) {
      // Only the fake peak of a partition with zero parts gets here: U_i is
      // forced to equal the right bound, so no step is recorded.
      chosen = st.flag[j];
    } else {
      PlanStep step{kk, st.flag[j - 1], st.flag[j], st.pf.a[j - 1], r};
      plan.steps.push_back(step);
      chosen = BoundRef::factor(static_cast<int>(plan.steps.size()));
    }
    st.flag.erase(st.flag.begin() + (j - 1), st.flag.begin() + (j + 1));
    st.flag.insert(st.flag.begin() + (j - 1), chosen);
    st.dims.erase(st.dims.begin() + (j - 1), st.dims.begin() + (j + 1));
    st.dims.insert(st.dims.begin() + (j - 1), kk);
    st.pf = remove_peak(st.pf, j);
  }
  plan.image = st.flag.front();

  int total = 0;
  for (auto& step : plan.steps) {
    if (step.l < 1 || step.r < 1) throw InvariantViolation("degenerate step in plan for " + alpha.key());
    total += step.l * step.r;
  }
  if (total != alpha.size()) throw InvariantViolation("plan dimension differs from |alpha|");
  if (plan.dim_of(plan.image) != k) throw InvariantViolation("plan does not end in Gr(k, n)");
  return plan;
}

inline ResolutionPlan build_plan(const Partition& alpha, int k, int n, bool reversed) {
  int m = to_peak_form(alpha, k).peaks();
  return build_plan(alpha, reversed ? PeakOrder::reversed(m) : PeakOrder::identity(m), k, n);
}

namespace detail {

struct FiberKey {
  std::vector<int> a, b, c, order;
  friend auto operator<=>(const FiberKey&, const FiberKey&) = default;
};

struct FiberMemo {
  std::mutex mu;
  std::map<FiberKey, Integer> euler;
  std::map<FiberKey, QPolynomial> poincare;
  std::map<FiberKey, int> dim;
};

inline FiberMemo& fiber_memo() {
  static FiberMemo memo;
  return memo;
}

template <class Map, class Compute>
auto memoized(Map& map, const FiberKey& key, Compute&& compute) {
  auto& memo = fiber_memo();
  {
    std::lock_guard lock(memo.mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = compute();
  std::lock_guard lock(memo.mu);
  map.emplace(key, value);
  return value;
}

// Calls f(d, next_key) for each admissible new depth d when removing the
// first peak of the order.
template <class F>
void for_each_branch(const FiberKey& key, F&& f) {
  const int j = key.order.front();
  const int m = static_cast<int>(key.a.size());
  PeakForm next_pf = remove_peak(PeakForm{key.a, key.b}, j);
  std::vector<int> rest = shift_order(std::vector<int>(key.order.begin() + 1, key.order.end()), j);
  const int cl = key.c[j - 1], cr = key.c[j];
  for (int d = 0; d <= std::min(cl, cr); ++d) {
    FiberKey next{next_pf.a, next_pf.b, {}, rest};
    for (int t = 0; t <= m; ++t) {
      if (t == j - 1) next.c.push_back(d);
      else if (t != j) next.c.push_back(key.c[t]);
    }
    f(d, next);
  }
}

inline Integer euler_rec(const FiberKey& key) {
  if (key.order.empty()) return 1;
  return memoized(fiber_memo().euler, key, [&] {
    const int j = key.order.front();
    const int cl = key.c[j - 1], cr = key.c[j];
    const int a = key.a[j - 1], b = key.b[j - 1];
    Integer total = 0;
    for_each_branch(key, [&](int d, const FiberKey& next) {
      Integer w = binomial(a + cr - cl, cr - d) * binomial(b - cr + cl, cl - d);
      if (w != 0) total += w * euler_rec(next);
    });
    return total;
  });
}

inline QPolynomial poincare_rec(const FiberKey& key) {
  if (key.order.empty()) return QPolynomial::monomial(0);
  return memoized(fiber_memo().poincare, key, [&] {
    const int j = key.order.front();
    const int cl = key.c[j - 1], cr = key.c[j];
    const int a = key.a[j - 1], b = key.b[j - 1];
    QPolynomial total;
    for_each_branch(key, [&](int d, const FiberKey& next) {
      QPolynomial w = gaussian_binomial(a + cr - cl, cr - d) * gaussian_binomial(b - cr + cl, cl - d);
      if (w.is_zero()) return;
      total += w * QPolynomial::monomial((cl - d) * (cr - d)) * poincare_rec(next);
    });
    return total;
  });
}

// -1 marks an empty fiber.
inline int dimension_rec(const FiberKey& key) {
  if (key.order.empty()) return 0;
  return memoized(fiber_memo().dim, key, [&] {
    const int j = key.order.front();
    const int cl = key.c[j - 1], cr = key.c[j];
    const int a = key.a[j - 1], b = key.b[j - 1];
    int best = -1;
    for_each_branch(key, [&](int d, const FiberKey& next) {
      if (binomial(a + cr - cl, cr - d) == 0 || binomial(b - cr + cl, cl - d) == 0) return;
      int rest = dimension_rec(next);
      if (rest < 0) return;
      // Grassmannian of the new intersection, Grassmannian of its complement
      // in the lower bound, and an affine part.
      int here = (cr - d) * (a - cl + d) + (cl - d) * (b - cr + d) + (cl - d) * (cr - d);
      best = std::max(best, here + rest);
    });
    return best;
  });
}

inline FiberKey initial_key(const Partition& alpha, const PeakOrder& s, const Partition& beta, int k) {
  if (!leq(beta, alpha)) throw DomainError(beta.key() + " is not below " + alpha.key());
  PeakForm pf = to_peak_form(alpha, k);
  if (s.size() != pf.peaks() || !s.is_permutation())
    throw DomainError("peak order (" + s.str() + ") is not a permutation of 1.." + std::to_string(pf.peaks()));
  int n = k + std::max(alpha.first(), 0);
  return FiberKey{pf.a, pf.b, depth_vector(alpha, beta, k, n), s.perm};
}

}  // namespace detail

// Euler characteristic of the fiber of Z_{alpha,s} -> X_alpha over X°_beta.
inline Integer euler_fiber(const Partition& alpha, const PeakOrder& s, const Partition& beta, int k) {
  return detail::euler_rec(detail::initial_key(alpha, s, beta, k));
}

// Poincaré polynomial of the same fiber, in q = t^2.
inline QPolynomial fiber_poincare(const Partition& alpha, const PeakOrder& s, const Partition& beta, int k) {
  return detail::poincare_rec(detail::initial_key(alpha, s, beta, k));
}

// Complex dimension of the fiber, from the max-over-strata recursion.
inline int fiber_dimension(const Partition& alpha, const PeakOrder& s, const Partition& beta, int k) {
  int d = detail::dimension_rec(detail::initial_key(alpha, s, beta, k));
  if (d < 0) throw InvariantViolation("empty fiber over " + beta.key() + " in " + alpha.key());
  return d;
}

inline bool is_small(const Partition& alpha, const PeakOrder& s, int k) {
  for (const auto& beta : lower_interval(alpha)) {
    int f = fiber_dimension(alpha, s, beta, k);
    if (f > 0 && alpha.size() - beta.size() <= 2 * f) return false;
  }
  return true;
}

inline PeakOrder find_small_order(const Partition& alpha, int k) {
  PeakOrder s = PeakOrder::identity(to_peak_form(alpha, k).peaks());
  do {
    if (is_small(alpha, s, k)) return s;
  } while (std::next_permutation(s.perm.begin(), s.perm.end()));
  throw InvariantViolation("no small resolution order found for " + alpha.key());
}

// Maximal beta <= alpha over which the small resolution has a non-trivial
// fiber; their Schubert varieties are the components of Sing(X_alpha).
inline std::vector<Partition> singular_locus(const Partition& alpha, int k) {
  PeakOrder s = find_small_order(alpha, k);
  std::vector<Partition> bad;
  for (const auto& beta : lower_interval(alpha))
    if (euler_fiber(alpha, s, beta, k) > 1) bad.push_back(beta);
  std::vector<Partition> maximal;
  for (const auto& beta : bad) {
    bool dominated = false;
    for (const auto& other : bad)
      if (other != beta && leq(beta, other)) dominated = true;
    if (!dominated) maximal.push_back(beta);
  }
  return maximal;
}

inline std::string plan_to_dot(const ResolutionPlan& plan) {
  std::ostringstream os;
  os << "digraph \"Z_" << plan.alpha.key() << "_" << plan.order.str() << "\" {\n";
  std::vector<int> flag_dims;
  for (const auto& st : plan.steps)
    for (const auto& b : {st.left, st.right})
      if (!b.is_factor()) flag_dims.push_back(b.value);
  if (!plan.image.is_factor()) flag_dims.push_back(plan.image.value);
  std::sort(flag_dims.begin(), flag_dims.end());
  flag_dims.erase(std::unique(flag_dims.begin(), flag_dims.end()), flag_dims.end());
  for (int d : flag_dims) os << "  \"V_" << d << "\" [shape=box];\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i)
    os << "  \"U_" << i + 1 << "\" [label=\"U_" << i + 1 << " (dim " << plan.steps[i].k << ")\"];\n";
  for (std::size_t i = 1; i < flag_dims.size(); ++i)
    os << "  \"V_" << flag_dims[i - 1] << "\" -> \"V_" << flag_dims[i] << "\" [style=dashed];\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& st = plan.steps[i];
    os << "  \"" << st.left.str() << "\" -> \"U_" << i + 1 << "\";\n";
    os << "  \"U_" << i + 1 << "\" -> \"" << st.right.str() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace csm
