#pragma once

#include "csm/arith.hpp"
#include "csm/partition.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace csm {

using WeightMultiset = std::vector<Integer>;

// e_0, ..., e_r of the given values.
inline std::vector<Integer> elementary(const WeightMultiset& w) {
  std::vector<Integer> e(w.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += w[i] * e[j - 1];
  return e;
}

// h_0, ..., h_d of the given values.
inline std::vector<Integer> complete(const WeightMultiset& w, int d) {
  std::vector<Integer> h(d + 1, 0);
  h[0] = 1;
  for (const auto& x : w)
    for (int j = 1; j <= d; ++j) h[j] += x * h[j - 1];
  return h;
}

namespace detail {

inline Integer jacobi_trudi(const Partition& lambda, const std::vector<Integer>& seq) {
  const int l = lambda.length();
  std::vector<std::vector<Integer>> m(l, std::vector<Integer>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int idx = lambda[i] + j - i;
      m[i][j] = (idx < 0 || idx >= static_cast<int>(seq.size())) ? Integer(0) : seq[idx];
    }
  return determinant(std::move(m));
}

}  // namespace detail

// Schur polynomial s_lambda evaluated at the given values, via det(h).
inline Integer schur_eval(const Partition& lambda, const WeightMultiset& w) {
  if (lambda.empty()) return 1;
  return detail::jacobi_trudi(lambda, complete(w, lambda.first() + lambda.length()));
}

// det(e_{beta_i + j - i}) at the given values, i.e. the Chern-Schur class
// c_beta of a bundle with those Chern roots. Equals s_{beta'}.
inline Integer chern_schur_eval(const Partition& beta, const WeightMultiset& w) {
  if (beta.empty()) return 1;
  return detail::jacobi_trudi(beta, elementary(w));
}

// det(binom(lambda_i + N - i, mu_j + N - j)), both padded to N parts.
inline Integer binomial_det(const Partition& lambda, const Partition& mu, int N) {
  if (lambda.length() > N || mu.length() > N) throw DomainError("partition longer than N");
  std::vector<std::vector<Integer>> m(N, std::vector<Integer>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m[i][j] = binomial(lambda[i] + N - 1 - i, mu[j] + N - 1 - j);
  return determinant(std::move(m));
}

struct Straightened {
  int sign = 0;  // 0 when the Schur function vanishes
  Partition shape;
};

// Rewrites s_I for an arbitrary integer sequence I as +-s_lambda or 0, using
// s_I = det(h_{I_i + j - i}).
inline Straightened straighten(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> shifted(n);
  for (int i = 0; i < n; ++i) shifted[i] = seq[i] + n - 1 - i;
  int sign = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n - i; ++j)
      if (shifted[j] < shifted[j + 1]) {
        std::swap(shifted[j], shifted[j + 1]);
        sign = -sign;
      }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n && shifted[i] == shifted[i + 1]) return {};
    out[i] = shifted[i] - (n - 1 - i);
    if (out[i] < 0) return {};
  }
  return {sign, Partition(std::move(out))};
}

namespace detail {

// Enumerates Littlewood-Richardson fillings of outer/inner. If outer is
// null the outer shape is free; if content is null the content is free.
// The callback receives (outer shape, content) for every filling.
template <class Visit>
void lr_fillings(const Partition& inner, const Partition* outer, const Partition* content, Visit&& visit) {
  const int total_boxes = content ? content->size() : outer->size() - inner.size();
  if (total_boxes < 0) return;
  const int rows = outer ? outer->length() : inner.length() + content->length();
  const int max_letter = content ? content->length() : rows;
  std::vector<std::vector<int>> tab(rows + 1);  // tab[r][c]: letter at row r, column c (0 = inner)
  std::vector<int> shape(rows + 1, 0);
  std::vector<int> counts(max_letter + 2, 0);
  int placed = 0;

  auto inner_at = [&](int r) { return r >= 1 ? inner[r - 1] : 0; };
  auto above = [&](int r, int c) {
    if (r <= 1) return 0;
    if (c <= inner_at(r - 1)) return 0;
    return tab[r - 1][c];
  };

  auto row_rec = [&](auto&& self, int r) -> void {
    if (r > rows) {
      if (placed != total_boxes) return;
      std::vector<int> o(shape.begin() + 1, shape.end());
      std::vector<int> ct(counts.begin() + 1, counts.begin() + 1 + max_letter);
      visit(Partition(o), Partition(ct));
      return;
    }
    const int lo = inner_at(r);
    int hi = r == 1 ? lo + (total_boxes - placed) : std::min(shape[r - 1], lo + (total_boxes - placed));
    if (outer) {
      if ((*outer)[r - 1] < lo) return;
      hi = (*outer)[r - 1];
      if (r > 1 && hi > shape[r - 1]) return;
    }
    if (hi < lo) return;
    tab[r].assign(hi + 2, 0);
    for (int len = outer ? hi : lo; len <= hi; ++len) {
      shape[r] = len;
      // fill cells len, len-1, ..., lo+1 right to left
      auto cell_rec = [&](auto&& cself, int c, int right_val) -> void {
        if (c == lo) {
          self(self, r + 1);
          return;
        }
        int min_v = above(r, c) + 1;
        for (int v = std::min(right_val, max_letter); v >= min_v; --v) {
          if (content && counts[v] >= (*content)[v - 1]) continue;
          if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;
          ++counts[v];
          ++placed;
          tab[r][c] = v;
          cself(cself, c - 1, v);
          tab[r][c] = 0;
          --placed;
          --counts[v];
        }
      };
      if (len - lo <= total_boxes - placed) cell_rec(cell_rec, len, max_letter);
    }
    shape[r] = 0;
  };
  row_rec(row_rec, 1);
}

struct LrCache {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, std::map<Partition, Integer>> product;
  std::map<std::pair<Partition, Partition>, std::map<Partition, Integer>> skew;
};

inline LrCache& lr_cache() {
  static LrCache cache;
  return cache;
}

}  // namespace detail

// s_lambda * s_mu = sum_nu c^nu_{lambda mu} s_nu.
inline std::map<Partition, Integer> lr_coefficients(const Partition& lambda, const Partition& mu) {
  auto key = std::make_pair(std::min(lambda, mu), std::max(lambda, mu));
  auto& cache = detail::lr_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.product.find(key);
    if (it != cache.product.end()) return it->second;
  }
  std::map<Partition, Integer> out;
  detail::lr_fillings(key.first, nullptr, &key.second,
                      [&](const Partition& nu, const Partition&) { out[nu] += 1; });
  std::lock_guard lock(cache.mu);
  cache.product.emplace(key, out);
  return out;
}

// s_{nu/kappa} = sum_rho c^nu_{kappa rho} s_rho.
inline std::map<Partition, Integer> lr_skew(const Partition& nu, const Partition& kappa) {
  if (!leq(kappa, nu)) return {};
  auto key = std::make_pair(nu, kappa);
  auto& cache = detail::lr_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.skew.find(key);
    if (it != cache.skew.end()) return it->second;
  }
  std::map<Partition, Integer> out;
  detail::lr_fillings(kappa, &nu, nullptr,
                      [&](const Partition&, const Partition& rho) { out[rho] += 1; });
  std::lock_guard lock(cache.mu);
  cache.skew.emplace(key, out);
  return out;
}

// Polynomial in q with integer coefficients, coefficient of q^i at index i.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  static QPolynomial monomial(int deg, Integer coeff = 1) {
    std::vector<Integer> c(deg + 1, 0);
    c[deg] = std::move(coeff);
    return QPolynomial(std::move(c));
  }

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer at_one() const {
    Integer s = 0;
    for (auto& x : c_) s += x;
    return s;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  friend QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<Integer> c(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
    return QPolynomial(std::move(c));
  }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
      else if (c_[i] < 0) out += "-";
      Integer a = abs(c_[i]);
      if (i == 0 || a != 1) out += a.str();
      if (i >= 1) out += "q";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
inline QPolynomial gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::vector<QPolynomial>> t(n + 1, std::vector<QPolynomial>(k + 1));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = QPolynomial::monomial(0);
    for (int j = 1; j <= std::min(i, k); ++j) {
      QPolynomial v = t[i - 1][j - 1];
      if (j <= i - 1) v += QPolynomial::monomial(j) * t[i - 1][j];
      t[i][j] = v;
    }
  }
  return t[n][k];
}

// Square matrix indexed by an ordered list of partitions, upper triangular
// with ones on the diagonal. Entry (row, col) is stored at [row][col].
struct UnipotentMatrix {
  std::vector<Partition> index;
  std::vector<std::vector<Integer>> entries;

  std::size_t size() const { return index.size(); }
  std::size_t position(const Partition& p) const {
    for (std::size_t i = 0; i < index.size(); ++i)
      if (index[i] == p) return i;
    throw DomainError("partition " + p.key() + " is not an index of the matrix");
  }
  const Integer& at(const Partition& row, const Partition& col) const {
    return entries[position(row)][position(col)];
  }
  void check() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (entries[i][i] != 1) throw InvariantViolation("diagonal entry is not 1");
      for (std::size_t j = 0; j < i; ++j)
        if (entries[i][j] != 0) throw InvariantViolation("matrix is not upper triangular");
    }
  }
};

inline UnipotentMatrix invert_unipotent(const UnipotentMatrix& d) {
  d.check();
  const std::size_t n = d.size();
  UnipotentMatrix e{d.index, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n, 0))};
  // solve e * d = 1 row by row from the right
  for (std::size_t i = 0; i < n; ++i) {
    e.entries[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer s = 0;
      for (std::size_t t = i; t < j; ++t) s += e.entries[i][t] * d.entries[t][j];
      e.entries[i][j] = -s;
    }
  }
  return e;
}

inline UnipotentMatrix multiply(const UnipotentMatrix& x, const UnipotentMatrix& y) {
  if (x.index != y.index) throw DomainError("matrices have different indices");
  const std::size_t n = x.size();
  UnipotentMatrix out{x.index, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t) {
      if (x.entries[i][t] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.entries[i][j] += x.entries[i][t] * y.entries[t][j];
    }
  return out;
}

}  // namespace csm
