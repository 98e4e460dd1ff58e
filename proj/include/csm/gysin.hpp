#pragma once

// Symbolic pushforward for order-reversing plans. Z then sits inside the
// partial flag variety Fl = {U_m ⊂ ... ⊂ U_1 ⊂ V}, V = V^m, and every class
// is written in the Chern roots of the quotients F_i = U_{i-1}/U_i
// (U_0 = V), which are pushed to Gr(k, V) one Grassmannian bundle at a time.

#include "csm/arith.hpp"
#include "csm/expansion.hpp"
#include "csm/localization.hpp"
#include "csm/partition.hpp"
#include "csm/symmetric.hpp"
#include "csm/zelevinsky.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace csm {

// Integer combination of monomials prod_i s_{lambda(i)}(F_i).
class FlagClassExpr {
 public:
  using Monomial = std::vector<Partition>;

  FlagClassExpr() = default;
  // ranks[i] = rank of F_{i+1}; max_degree bounds the degree of surviving
  // monomials (the dimension of the flag variety).
  FlagClassExpr(std::vector<int> ranks, int max_degree) : ranks_(std::move(ranks)), max_degree_(max_degree) {}

  static FlagClassExpr one(std::vector<int> ranks, int max_degree) {
    FlagClassExpr e(std::move(ranks), max_degree);
    e.add(Monomial(e.ranks_.size()), 1);
    return e;
  }

  const std::vector<int>& ranks() const { return ranks_; }
  int max_degree() const { return max_degree_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& mono, const Integer& c) {
    if (c == 0) return;
    if (mono.size() != ranks_.size()) throw DomainError("monomial has the wrong number of alphabets");
    int deg = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i].length() > ranks_[i]) return;
      deg += mono[i].size();
    }
    if (deg > max_degree_) return;
    auto& slot = terms_[mono];
    slot += c;
    if (slot == 0) terms_.erase(mono);
  }
  void add(const FlagClassExpr& other, const Integer& scale = 1) {
    for (const auto& [mono, c] : other.terms_) add(mono, c * scale);
  }

  friend FlagClassExpr operator*(const FlagClassExpr& x, const FlagClassExpr& y) {
    if (x.ranks_ != y.ranks_) throw DomainError("multiplying classes on different flag varieties");
    FlagClassExpr out(x.ranks_, std::min(x.max_degree_, y.max_degree_));
    const std::size_t m = x.ranks_.size();
    for (const auto& [mx, cx] : x.terms_) {
      int dx = 0;
      for (const auto& p : mx) dx += p.size();
      for (const auto& [my, cy] : y.terms_) {
        int dy = 0;
        for (const auto& p : my) dy += p.size();
        if (dx + dy > out.max_degree_) continue;
        // expand alphabet by alphabet
        std::vector<std::pair<Monomial, Integer>> partial{{Monomial(), cx * cy}};
        for (std::size_t i = 0; i < m && !partial.empty(); ++i) {
          std::vector<std::pair<Monomial, Integer>> next;
          for (const auto& [nu, c] : lr_coefficients(mx[i], my[i])) {
            if (nu.length() > x.ranks_[i]) continue;
            for (const auto& [mono, pc] : partial) {
              Monomial grown(mono);
              grown.push_back(nu);
              next.emplace_back(std::move(grown), pc * c);
            }
          }
          partial = std::move(next);
        }
        for (const auto& [mono, c] : partial) out.add(mono, c);
      }
    }
    return out;
  }

 private:
  std::vector<int> ranks_;
  int max_degree_ = 0;
  std::map<Monomial, Integer> terms_;
};

// Virtual bundle sum_i coeff[i] * F_{i+1}, possibly dualized. Trivial
// summands are dropped since they do not affect characteristic classes.
struct KClass {
  std::vector<int> coeff;
  bool dual = false;
};

namespace detail {

// s_nu(sum of signed alphabets starting at position i).
inline void expand_schur_sum(const Partition& nu, const KClass& kc, std::size_t i, FlagClassExpr::Monomial& cur,
                             const Integer& c, FlagClassExpr& out) {
  if (i == kc.coeff.size()) {
    if (nu.empty()) out.add(cur, c);
    return;
  }
  if (kc.coeff[i] == 0) {
    cur.push_back(Partition{});
    expand_schur_sum(nu, kc, i + 1, cur, c, out);
    cur.pop_back();
    return;
  }
  if (kc.coeff[i] != 1 && kc.coeff[i] != -1) throw DomainError("K-class coefficients must be 0 or +-1");
  // s_nu(X + Y) = sum_kappa s_kappa(X) s_{nu/kappa}(Y)
  for (const auto& kappa : lower_interval(nu)) {
    Partition here = kc.coeff[i] == 1 ? kappa : conjugate(kappa);
    Integer sign = (kc.coeff[i] == -1 && kappa.size() % 2 == 1) ? -1 : 1;
    if (here.length() > out.ranks()[i]) continue;
    for (const auto& [rho, lr] : lr_skew(nu, kappa)) {
      cur.push_back(here);
      expand_schur_sum(rho, kc, i + 1, cur, c * sign * lr, out);
      cur.pop_back();
    }
  }
}

}  // namespace detail

// s_nu of a virtual bundle, in the quotient alphabets.
inline FlagClassExpr schur_of(const Partition& nu, const KClass& kc, const std::vector<int>& ranks, int max_degree) {
  FlagClassExpr out(ranks, max_degree);
  if (kc.coeff.size() != ranks.size()) throw DomainError("K-class has the wrong number of alphabets");
  if (nu.size() > max_degree) return out;
  FlagClassExpr::Monomial cur;
  Integer sign = (kc.dual && nu.size() % 2 == 1) ? -1 : 1;
  detail::expand_schur_sum(nu, kc, 0, cur, sign, out);
  return out;
}

// Flag variety and alphabet data attached to an order-reversing plan.
struct FlagFrame {
  int N = 0;               // dim V
  std::vector<int> ranks;  // r_i = rank F_i
  int max_degree = 0;      // dim Fl

  explicit FlagFrame(const ResolutionPlan& plan) {
    if (!plan.is_order_reversing())
      throw DomainError("the Gysin engine needs an order-reversing plan for " + plan.alpha.key());
    N = plan.ambient_dim();
    int prev = N;
    for (const auto& st : plan.steps) {
      ranks.push_back(prev - st.k);
      prev = st.k;
    }
    // dim Fl = sum over pairs of blocks of the product of their sizes
    std::vector<int> blocks(ranks);
    blocks.push_back(plan.k);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j) max_degree += blocks[i] * blocks[j];
  }

  // K-class of a space of the plan: flag spaces are trivial, U_i = V - F_1 - ... - F_i.
  KClass kclass(const BoundRef& b) const {
    KClass kc{std::vector<int>(ranks.size(), 0), false};
    if (b.is_factor())
      for (int j = 0; j < b.value; ++j) kc.coeff[j] = -1;
    return kc;
  }
  KClass kclass(const Bundle& e) const {
    KClass up = kclass(e.upper), lo = kclass(e.lower);
    for (std::size_t j = 0; j < up.coeff.size(); ++j) up.coeff[j] -= lo.coeff[j];
    up.dual = e.dual;
    return up;
  }
  FlagClassExpr one() const { return FlagClassExpr::one(ranks, max_degree); }
  FlagClassExpr schur(const Partition& nu, const KClass& kc) const { return schur_of(nu, kc, ranks, max_degree); }
  // s_lambda(F_i), i 1-based
  FlagClassExpr on_quotient(int i, const Partition& lambda) const {
    FlagClassExpr out(ranks, max_degree);
    FlagClassExpr::Monomial mono(ranks.size());
    mono[i - 1] = lambda;
    out.add(mono, 1);
    return out;
  }
};

inline FlagClassExpr fundamental_class_w0(const ResolutionPlan& plan) {
  FlagFrame frame(plan);
  FlagClassExpr out(frame.ranks, frame.max_degree);
  FlagClassExpr::Monomial mono;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const int q = plan.steps[i].k - plan.steps[i].l;  // dim of the left bound
    mono.push_back(Partition(std::vector<int>(frame.ranks[i], q)));
  }
  out.add(mono, 1);
  return out;
}

// One summand of c((U_i/W)^∨ ⊗ F_i): D^{l}_{lambda,mu} s_mu((U_i/W)^∨) s_{D~(lambda)}(F_i).
struct TangentTerm {
  Partition lambda;
  Partition mu;
  Integer coeff;
};

// The non-zero summands of the expansion of c(E^∨ ⊗ F), rank E = e and
// rank F = f, indexed by mu ⊆ lambda ⊆ (e rows x f columns).
inline std::vector<TangentTerm> tangent_terms(int e, int f) {
  std::vector<TangentTerm> out;
  for (const auto& lambda : enumerate_box(e, f))
    for (const auto& mu : lower_interval(lambda)) {
      Integer d = binomial_det(lambda, mu, e);
      if (d != 0) out.push_back({lambda, mu, d});
    }
  return out;
}

inline Partition tangent_dual(const Partition& lambda, int e, int f) { return conjugate(dual_in_box(lambda, e, f)); }

// c((U_i/left)^∨ ⊗ (right/U_i)) for step i (1-based).
inline FlagClassExpr tangent_factor(const ResolutionPlan& plan, const FlagFrame& frame, int i) {
  const auto& st = plan.steps[i - 1];
  FlagClassExpr out(frame.ranks, frame.max_degree);
  KClass sub = frame.kclass(Bundle{BoundRef::factor(i), st.left, true});
  for (const auto& t : tangent_terms(st.l, st.r)) {
    FlagClassExpr term = frame.schur(t.mu, sub) * frame.on_quotient(i, tangent_dual(t.lambda, st.l, st.r));
    out.add(term, t.coeff);
  }
  return out;
}

// Rewrites a class factor on the plan's bundles in the quotient alphabets.
inline FlagClassExpr expand_in_quotient_alphabets(const ResolutionPlan& plan, const ClassFactor& f) {
  FlagFrame frame(plan);
  switch (f.kind) {
    case ClassFactor::Kind::TangentTotal: {
      FlagClassExpr out = frame.one();
      for (int i = 1; i <= static_cast<int>(plan.steps.size()); ++i) out = out * tangent_factor(plan, frame, i);
      return out;
    }
    case ClassFactor::Kind::Total: {
      FlagClassExpr out(frame.ranks, frame.max_degree);
      KClass kc = frame.kclass(f.bundle);
      for (int p = 0; p <= frame.max_degree; ++p) out.add(frame.schur(Partition(std::vector<int>(p, 1)), kc));
      return out;
    }
    case ClassFactor::Kind::Chern:
      if (f.degree < 0) return FlagClassExpr(frame.ranks, frame.max_degree);
      return frame.schur(Partition(std::vector<int>(f.degree, 1)), frame.kclass(f.bundle));
    case ClassFactor::Kind::ChernSchur:
      return frame.schur(conjugate(f.shape), frame.kclass(f.bundle));
    case ClassFactor::Kind::Schur:
      return frame.schur(f.shape, frame.kclass(f.bundle));
  }
  throw DomainError("unsupported class factor");
}

// Gysin map of one Grassmannian bundle: for Q of rank q_rank and S of rank
// s_rank, s_lambda(Q) s_mu(S) pushes to s_Lambda of the base quotient with
// Lambda = (lambda_1 - s, ..., lambda_q - s, mu_1, ..., mu_s).
inline std::vector<int> fp_pushforward(const std::vector<int>& lambda, const std::vector<int>& mu, int s_rank, int q_rank) {
  if (static_cast<int>(lambda.size()) != q_rank || static_cast<int>(mu.size()) != s_rank)
    throw DomainError("index lengths do not match the bundle ranks");
  std::vector<int> out;
  for (int x : lambda) out.push_back(x - s_rank);
  out.insert(out.end(), mu.begin(), mu.end());
  return out;
}

// Pushes a class on Fl to Gr(k_m, V); keys are partitions indexing
// s_nu(V/U_m).
inline std::map<Partition, Integer> flag_to_grassmannian_push(const FlagClassExpr& expr) {
  const auto& ranks = expr.ranks();
  const int m = static_cast<int>(ranks.size());
  std::map<Partition, Integer> out;
  for (const auto& [mono, c] : expr.terms()) {
    std::vector<int> seq;
    int tail = std::accumulate(ranks.begin(), ranks.end(), 0);
    for (int i = 0; i < m; ++i) {
      tail -= ranks[i];
      std::vector<int> block = mono[i].padded(ranks[i]);
      for (int x : block) seq.push_back(x - tail);
    }
    Straightened st = straighten(seq);
    if (st.sign == 0) continue;
    auto& slot = out[st.shape];
    slot += c * st.sign;
    if (slot == 0) out.erase(st.shape);
  }
  return out;
}

// s_lambda(V/U) on Gr(k, N) in the Schubert basis: [X_beta] with beta the
// box dual of lambda'. Classes outside the box vanish.
inline SchubertExpansion to_schubert_expansion(const std::map<Partition, Integer>& classes, int k, int N) {
  SchubertExpansion out(k, N);
  for (const auto& [lambda, c] : classes) {
    Partition t = conjugate(lambda);
    if (!t.fits(k, N - k)) continue;
    out.add(dual_in_box(t, k, N - k), c);
  }
  return out;
}

// Views an expansion on Gr(k, N) inside Gr(k, n), N <= n.
inline SchubertExpansion reembed(const SchubertExpansion& e, int n) {
  SchubertExpansion out(e.k, n);
  out.add(e);
  return out;
}

inline SchubertExpansion gysin_pushforward(const ResolutionPlan& plan, const FlagClassExpr& cls) {
  FlagFrame frame(plan);
  return reembed(to_schubert_expansion(flag_to_grassmannian_push(cls), plan.k, frame.N), plan.n);
}

// pi_* of an integrand, computed symbolically.
inline SchubertExpansion gysin_pushforward(const ResolutionPlan& plan, const Integrand& integrand) {
  FlagClassExpr cls = fundamental_class_w0(plan);
  for (const auto& f : integrand) cls = cls * expand_in_quotient_alphabets(plan, f);
  return gysin_pushforward(plan, cls);
}

inline SchubertExpansion pushforward_csm_w0(const ResolutionPlan& plan) {
  return gysin_pushforward(plan, Integrand{ClassFactor::tangent_total()});
}

// Visits every term of i_* c_SM(Z) obtained by choosing one summand of each
// tangent factor; f receives the chosen summands and the term's pushforward.
template <class F>
void for_each_tangent_term(const ResolutionPlan& plan, F&& f) {
  FlagFrame frame(plan);
  const int m = static_cast<int>(plan.steps.size());
  std::vector<std::vector<TangentTerm>> options;
  for (const auto& st : plan.steps) options.push_back(tangent_terms(st.l, st.r));
  std::vector<TangentTerm> chosen;
  auto rec = [&](auto&& self, int i, const FlagClassExpr& acc) -> void {
    if (i == m) {
      f(chosen, gysin_pushforward(plan, acc));
      return;
    }
    const auto& st = plan.steps[i];
    KClass sub = frame.kclass(Bundle{BoundRef::factor(i + 1), st.left, true});
    for (const auto& t : options[i]) {
      FlagClassExpr factor = frame.schur(t.mu, sub) * frame.on_quotient(i + 1, tangent_dual(t.lambda, st.l, st.r));
      FlagClassExpr scaled(frame.ranks, frame.max_degree);
      scaled.add(factor, t.coeff);
      chosen.push_back(t);
      self(self, i + 1, acc * scaled);
      chosen.pop_back();
    }
  };
  rec(rec, 0, fundamental_class_w0(plan));
}

}  // namespace csm
