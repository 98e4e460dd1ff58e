#pragma once

#include "csm/arith.hpp"
#include "csm/expansion.hpp"
#include "csm/gysin.hpp"
#include "csm/localization.hpp"
#include "csm/partition.hpp"
#include "csm/symmetric.hpp"
#include "csm/zelevinsky.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace csm {

// Picks the peak order used to resolve each Schubert variety.
struct OrderStrategy {
  enum class Kind { Small, Identity, Reversed, Explicit };
  Kind kind = Kind::Small;
  PeakOrder explicit_order;

  static OrderStrategy small() { return {}; }
  static OrderStrategy identity() { return {Kind::Identity, {}}; }
  static OrderStrategy reversed() { return {Kind::Reversed, {}}; }
  static OrderStrategy fixed(PeakOrder s) { return {Kind::Explicit, std::move(s)}; }

  // "small", "id", "w0" or "perm:2,1,3"
  static OrderStrategy parse(const std::string& text) {
    if (text == "small") return small();
    if (text == "id") return identity();
    if (text == "w0") return reversed();
    if (text.rfind("perm:", 0) == 0) {
      PeakOrder s;
      std::string body = text.substr(5);
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t next = body.find(',', pos);
        std::string tok = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
          std::size_t used = 0;
          s.perm.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw DomainError("");
        } catch (const std::exception&) {
          throw DomainError("bad permutation entry '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
      }
      if (!s.is_permutation()) throw DomainError("'" + body + "' is not a permutation");
      return fixed(std::move(s));
    }
    throw DomainError("unknown order strategy '" + text + "' (expected small, id, w0 or perm:...)");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Small: return "small";
      case Kind::Identity: return "id";
      case Kind::Reversed: return "w0";
      case Kind::Explicit: return "perm:" + explicit_order.str();
    }
    return "?";
  }

  PeakOrder choose(const Partition& alpha, int k) const {
    const int m = to_peak_form(alpha, k).peaks();
    switch (kind) {
      case Kind::Small: return find_small_order(alpha, k);
      case Kind::Identity: return PeakOrder::identity(m);
      case Kind::Reversed: return PeakOrder::reversed(m);
      case Kind::Explicit:
        if (explicit_order.size() != m)
          throw DomainError("order " + explicit_order.str() + " does not match the " + std::to_string(m) +
                            " peaks of " + alpha.key());
        return explicit_order;
    }
    throw DomainError("unknown order strategy");
  }
};

enum class EngineKind { Localization, Gysin, Both };

inline EngineKind parse_engine(const std::string& text) {
  if (text == "localization") return EngineKind::Localization;
  if (text == "gysin") return EngineKind::Gysin;
  if (text == "both") return EngineKind::Both;
  throw DomainError("unknown engine '" + text + "' (expected localization, gysin or both)");
}

inline std::string engine_name(EngineKind e) {
  switch (e) {
    case EngineKind::Localization: return "localization";
    case EngineKind::Gysin: return "gysin";
    case EngineKind::Both: return "both";
  }
  return "?";
}

enum class TableKind { Cell, Variety, Mather, EulerObstruction, DMatrix };

inline TableKind parse_table_kind(const std::string& text) {
  if (text == "cell") return TableKind::Cell;
  if (text == "variety") return TableKind::Variety;
  if (text == "mather") return TableKind::Mather;
  if (text == "euler-obs") return TableKind::EulerObstruction;
  if (text == "d-matrix") return TableKind::DMatrix;
  throw DomainError("unknown table kind '" + text + "' (expected cell, variety, mather, euler-obs or d-matrix)");
}

inline std::string table_kind_name(TableKind t) {
  switch (t) {
    case TableKind::Cell: return "cell";
    case TableKind::Variety: return "variety";
    case TableKind::Mather: return "mather";
    case TableKind::EulerObstruction: return "euler-obs";
    case TableKind::DMatrix: return "d-matrix";
  }
  return "?";
}

// Square table over an ordered list of cells; row alpha maps beta to an
// integer (a Schubert coefficient or a d/Eu value).
struct CsmTable {
  int k = 0;
  int n = 0;
  TableKind kind = TableKind::Cell;
  std::vector<Partition> cells;
  std::vector<SchubertExpansion> rows;

  const SchubertExpansion& row(const Partition& alpha) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i] == alpha) return rows[i];
    throw DomainError("partition " + alpha.key() + " is not a row of the table");
  }
};

struct NegativeEntry {
  std::string kind;
  Partition alpha;
  Partition beta;
  Integer value;
};

struct PositivityReport {
  int k = 0;
  int n = 0;
  struct Row {
    Partition alpha;
    Integer min_cell, min_variety, min_mather;
  };
  std::vector<Row> rows;
  std::vector<NegativeEntry> negatives;
  bool all_nonnegative() const { return negatives.empty(); }
};

struct WeakPositivityResult {
  Partition alpha;
  Partition beta;
  bool identity_holds = false;
  bool positive = false;
  SchubertExpansion variety;    // c_SM(X_alpha)
  SchubertExpansion predicted;  // pi_* c_SM(Z_alpha) - b c_SM(X_beta)
};

// Computes and memoizes everything for one Grassmannian Gr(k, n).
// Safe to share between threads.
class CsmEngine {
 public:
  CsmEngine(int k, int n, OrderStrategy strategy = OrderStrategy::small(),
            EngineKind engine = EngineKind::Localization, std::optional<WeightAssignment> weights = std::nullopt)
      : k_(k), n_(n), strategy_(std::move(strategy)), engine_(engine),
        weights_(weights ? *weights : WeightAssignment::standard(n)) {
    if (k < 1 || n <= k) throw DomainError("need 0 < k < n");
    weights_.check(n);
    cells_ = enumerate_box(k, n - k);
  }

  int k() const { return k_; }
  int n() const { return n_; }
  const OrderStrategy& strategy() const { return strategy_; }
  EngineKind engine() const { return engine_; }
  const std::vector<Partition>& cells() const { return cells_; }

  void check_cell(const Partition& alpha) const {
    if (!alpha.fits(k_, n_ - k_))
      throw DomainError("partition " + alpha.key() + " does not fit in the " + std::to_string(k_) + "x" +
                        std::to_string(n_ - k_) + " box");
  }

  PeakOrder order_for(const Partition& alpha) {
    check_cell(alpha);
    {
      std::lock_guard lock(mu_);
      auto it = orders_.find(alpha);
      if (it != orders_.end()) return it->second;
    }
    PeakOrder s = strategy_.choose(alpha, k_);
    std::lock_guard lock(mu_);
    orders_.emplace(alpha, s);
    return s;
  }

  ResolutionPlan plan_for(const Partition& alpha) { return build_plan(alpha, order_for(alpha), k_, n_); }

  bool order_is_small(const Partition& alpha) {
    if (strategy_.kind == OrderStrategy::Kind::Small) return true;
    return is_small(alpha, order_for(alpha), k_);
  }

  Integer d(const Partition& alpha, const Partition& beta) {
    check_cell(alpha);
    return euler_fiber(alpha, order_for(alpha), beta, k_);
  }

  // pi_* c_SM(Z_alpha) for the chosen resolution of X_alpha.
  SchubertExpansion resolution_pushforward(const Partition& alpha) {
    check_cell(alpha);
    {
      std::lock_guard lock(mu_);
      auto it = pushforwards_.find(alpha);
      if (it != pushforwards_.end()) return it->second;
    }
    ResolutionPlan plan = plan_for(alpha);
    SchubertExpansion value;
    if (engine_ == EngineKind::Gysin) {
      if (!plan.is_order_reversing())
        throw DomainError("the gysin engine only handles order-reversing plans; use --order w0 (" + alpha.key() +
                          " resolved with order " + plan.order.str() + ")");
      value = pushforward_csm_w0(plan);
    } else {
      value = pushforward_csm(plan, weights_);
      if (engine_ == EngineKind::Both) cross_check(alpha);
    }
    if (value.coefficient(alpha) != 1)
      throw InvariantViolation("leading coefficient of the pushforward for " + alpha.key() + " is not 1");
    std::lock_guard lock(mu_);
    pushforwards_.emplace(alpha, value);
    return value;
  }

  // Compares the two engines on the order-reversing plan of alpha.
  void cross_check(const Partition& alpha) {
    ResolutionPlan w0 = build_plan(alpha, PeakOrder::reversed(to_peak_form(alpha, k_).peaks()), k_, n_);
    SchubertExpansion loc = pushforward_csm(w0, weights_);
    SchubertExpansion sym = pushforward_csm_w0(w0);
    if (!(loc == sym))
      throw InvariantViolation("engines disagree on " + alpha.key() + ": localization " + loc.str() + ", gysin " +
                               sym.str());
  }

  // Computes the pushforwards of all cells on `jobs` threads.
  void precompute(int jobs = 1) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      for (std::size_t i = next++; i < cells_.size(); i = next++) {
        try {
          resolution_pushforward(cells_[i]);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
  }

  const UnipotentMatrix& d_matrix() {
    std::call_once(d_once_, [&] {
      const std::size_t c = cells_.size();
      d_matrix_ = UnipotentMatrix{cells_, std::vector<std::vector<Integer>>(c, std::vector<Integer>(c, 0))};
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i; j < c; ++j)
          if (leq(cells_[j], cells_[i])) d_matrix_.entries[i][j] = d(cells_[i], cells_[j]);
      d_matrix_.check();
      e_matrix_ = invert_unipotent(d_matrix_);
    });
    return d_matrix_;
  }

  const UnipotentMatrix& e_matrix() {
    d_matrix();
    return e_matrix_;
  }

  SchubertExpansion csm_cell(const Partition& alpha) {
    check_cell(alpha);
    const auto& e = e_matrix();
    std::size_t row = e.position(alpha);
    SchubertExpansion out(k_, n_);
    for (std::size_t j = row; j < cells_.size(); ++j) {
      const Integer& coeff = e.entries[row][j];
      if (coeff != 0) out.add(resolution_pushforward(cells_[j]), coeff);
    }
    if (out.coefficient(alpha) != 1) throw InvariantViolation("leading coefficient of c_SM(cell " + alpha.key() + ") is not 1");
    if (out.point_coefficient() != 1)
      throw InvariantViolation("Euler characteristic of cell " + alpha.key() + " is not 1");
    return out;
  }

  SchubertExpansion csm_variety(const Partition& alpha) {
    check_cell(alpha);
    SchubertExpansion out(k_, n_);
    for (const auto& beta : lower_interval(alpha)) out.add(csm_cell(beta));
    return out;
  }

  SchubertExpansion chern_mather(const Partition& alpha) {
    require_small(alpha);
    return resolution_pushforward(alpha);
  }

  Integer euler_obstruction(const Partition& alpha, const Partition& beta) {
    require_small(alpha);
    if (!leq(beta, alpha)) throw DomainError(beta.key() + " is not below " + alpha.key());
    return d(alpha, beta);
  }

  CsmTable table(TableKind kind, int jobs = 1) {
    if (kind == TableKind::Cell || kind == TableKind::Variety || kind == TableKind::Mather) precompute(jobs);
    CsmTable t{k_, n_, kind, cells_, {}};
    for (const auto& alpha : cells_) {
      switch (kind) {
        case TableKind::Cell: t.rows.push_back(csm_cell(alpha)); break;
        case TableKind::Variety: t.rows.push_back(csm_variety(alpha)); break;
        case TableKind::Mather: t.rows.push_back(chern_mather(alpha)); break;
        case TableKind::EulerObstruction:
        case TableKind::DMatrix: {
          if (kind == TableKind::EulerObstruction) require_small(alpha);
          SchubertExpansion row(k_, n_);
          for (const auto& beta : lower_interval(alpha)) row.add(beta, d(alpha, beta));
          t.rows.push_back(row);
          break;
        }
      }
    }
    return t;
  }

 private:
  void require_small(const Partition& alpha) {
    if (!order_is_small(alpha))
      throw DomainError("order " + order_for(alpha).str() + " does not give a small resolution of X_" + alpha.key());
  }

  int k_, n_;
  OrderStrategy strategy_;
  EngineKind engine_;
  WeightAssignment weights_;
  std::vector<Partition> cells_;

  std::mutex mu_;
  std::map<Partition, PeakOrder> orders_;
  std::map<Partition, SchubertExpansion> pushforwards_;
  std::once_flag d_once_;
  UnipotentMatrix d_matrix_;
  UnipotentMatrix e_matrix_;
};

inline UnipotentMatrix d_matrix(int k, int n, const OrderStrategy& strategy = OrderStrategy::small()) {
  CsmEngine engine(k, n, strategy);
  return engine.d_matrix();
}

inline SchubertExpansion csm_cell(const Partition& alpha, int k, int n) { return CsmEngine(k, n).csm_cell(alpha); }

inline SchubertExpansion csm_variety(const Partition& alpha, int k, int n) {
  return CsmEngine(k, n).csm_variety(alpha);
}

inline SchubertExpansion chern_mather(const Partition& alpha, int k, int n) {
  return CsmEngine(k, n).chern_mather(alpha);
}

inline Integer euler_obstruction(const Partition& alpha, const Partition& beta, int k, int n) {
  return CsmEngine(k, n).euler_obstruction(alpha, beta);
}

// Partition obtained by deleting the corner box of peak i (1-based).
inline Partition codim1_neighbor(const Partition& alpha, int i, int k) {
  PeakForm pf = to_peak_form(alpha, k);
  if (i < 1 || i > pf.peaks() || pf.b[i - 1] == 0)
    throw DomainError("partition " + alpha.key() + " has no peak " + std::to_string(i));
  int row = 0;
  for (int t = i; t <= pf.peaks(); ++t) row += pf.a[t - 1];
  std::vector<int> parts = alpha.padded(k);
  --parts[row - 1];
  return Partition(std::move(parts));
}

// Coefficient of [X_beta(i)] in c_SM of the cell X°_alpha: the number of
// boxes in the anti-hook of the removed box.
inline Integer codim1_coefficient(const Partition& alpha, int i, int k, int n) {
  if (!alpha.fits(k, n - k)) throw DomainError("partition " + alpha.key() + " outside the box");
  codim1_neighbor(alpha, i, k);
  PeakForm pf = to_peak_form(alpha, k);
  int rows = 0, cols = 0;
  for (int t = i; t <= pf.peaks(); ++t) rows += pf.a[t - 1];
  for (int t = 0; t < i; ++t) cols += pf.b[t];
  return rows + cols - 1;
}

// Peaks of alpha that have a removable corner box.
inline std::vector<int> codim1_peaks(const Partition& alpha, int k) {
  PeakForm pf = to_peak_form(alpha, k);
  std::vector<int> out;
  for (int i = 1; i <= pf.peaks(); ++i)
    if (pf.b[i - 1] > 0) out.push_back(i);
  return out;
}

inline PositivityReport positivity_report(CsmEngine& engine) {
  PositivityReport rep;
  rep.k = engine.k();
  rep.n = engine.n();
  for (const auto& alpha : engine.cells()) {
    SchubertExpansion cell = engine.csm_cell(alpha);
    SchubertExpansion var = engine.csm_variety(alpha);
    SchubertExpansion mather = engine.chern_mather(alpha);
    rep.rows.push_back({alpha, cell.min_coefficient(), var.min_coefficient(), mather.min_coefficient()});
    auto scan = [&](const char* kind, const SchubertExpansion& e) {
      for (const auto& [beta, c] : e.coeffs)
        if (c < 0) rep.negatives.push_back({kind, alpha, beta, c});
    };
    scan("cell", cell);
    scan("variety", var);
    scan("mather", mather);
  }
  return rep;
}

inline PositivityReport positivity_report(int k, int n) {
  CsmEngine engine(k, n);
  return positivity_report(engine);
}

// alpha = (b+p, p^a), beta = ((p-1)^(a+1)). The order-reversing resolution of
// X_alpha has fiber P^b over X_beta and is an isomorphism elsewhere, so
// c_SM(X_alpha) = pi_* c_SM(Z_alpha) - b c_SM(X_beta).
inline WeakPositivityResult weak_positivity_check(int a, int b, int p, int k, int n) {
  if (a < 1 || b < 1 || p < 1) throw DomainError("need a, b, p >= 1");
  std::vector<int> parts{b + p};
  parts.insert(parts.end(), a, p);
  Partition alpha(parts);
  if (!alpha.fits(k, n - k)) throw DomainError("partition " + alpha.key() + " outside the box");
  Partition beta(std::vector<int>(a + 1, p - 1));
  CsmEngine engine(k, n);
  ResolutionPlan w0 = build_plan(alpha, PeakOrder::reversed(to_peak_form(alpha, k).peaks()), k, n);
  WeakPositivityResult res;
  res.alpha = alpha;
  res.beta = beta;
  res.variety = engine.csm_variety(alpha);
  res.predicted = pushforward_csm(w0);
  res.predicted.add(engine.csm_variety(beta), -b);
  res.identity_holds = res.variety == res.predicted;
  res.positive = res.variety.min_coefficient() >= 0;
  return res;
}

}  // namespace csm
