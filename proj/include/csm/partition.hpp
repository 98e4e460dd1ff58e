#pragma once

#include "csm/arith.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace csm {

// Weakly decreasing sequence of non-negative integers. Trailing zeros are
// dropped, so (2,1,0) and (2,1) compare equal. The empty partition is
// printed as "0".
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw DomainError("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  std::vector<int> padded(int k) const {
    std::vector<int> out(parts_);
    out.resize(std::max<std::size_t>(out.size(), static_cast<std::size_t>(k)), 0);
    return out;
  }

  // True when the Young diagram fits in a rows x cols rectangle.
  bool fits(int rows, int cols) const { return length() <= rows && first() <= cols; }

  std::string key() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
  }

  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty()) throw DomainError("empty part in partition '" + text + "'");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw DomainError("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw DomainError("not an integer: '" + tok + "'");
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Enumeration order for cells of a box: decreasing size, ties broken by
// lexicographically decreasing parts. So (2) comes before (1,1).
struct BoxOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
  }
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.first(), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c) ++out[c];
  return Partition(std::move(out));
}

// Complement of lambda in the rows x cols rectangle, read backwards.
inline Partition dual_in_box(const Partition& lambda, int rows, int cols) {
  if (!lambda.fits(rows, cols))
    throw DomainError("partition " + lambda.key() + " does not fit in the box");
  std::vector<int> out(rows);
  for (int i = 0; i < rows; ++i) out[i] = cols - lambda[rows - 1 - i];
  return Partition(std::move(out));
}

// Containment of Young diagrams; equals Bruhat order on Schubert cells.
inline bool leq(const Partition& beta, const Partition& alpha) {
  if (beta.length() > alpha.length()) return false;
  for (int i = 0; i < beta.length(); ++i)
    if (beta[i] > alpha[i]) return false;
  return true;
}

// All partitions in the rows x cols box, in BoxOrder.
inline std::vector<Partition> enumerate_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative box dimensions");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int bound) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, cols);
  std::sort(out.begin(), out.end(), BoxOrder{});
  return out;
}

// Partitions beta <= alpha, in BoxOrder.
inline std::vector<Partition> lower_interval(const Partition& alpha) {
  std::vector<Partition> out;
  for (auto& p : enumerate_box(alpha.length(), alpha.first()))
    if (leq(p, alpha)) out.push_back(p);
  return out;
}

// Run-length description of a partition padded to k parts. Reading distinct
// values v_1 < ... < v_m from the bottom row up, a_i is the multiplicity of
// v_i, b_0 = v_1 (zero when the partition has fewer than k parts) and
// b_i = v_{i+1} - v_i.
struct PeakForm {
  std::vector<int> a;
  std::vector<int> b;

  int peaks() const { return static_cast<int>(a.size()); }
  int k() const { return std::accumulate(a.begin(), a.end(), 0); }

  // dim V^i = a_1 + ... + a_i + b_0 + ... + b_{i-1}; dim V^0 = 0.
  int flag_dim(int i) const {
    int d = 0;
    for (int t = 0; t < i; ++t) d += a[t] + b[t];
    return d;
  }
  // a_1 + ... + a_i
  int rank_bound(int i) const {
    int d = 0;
    for (int t = 0; t < i; ++t) d += a[t];
    return d;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << '|';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ']';
    return os.str();
  }

  friend bool operator==(const PeakForm&, const PeakForm&) = default;
  friend auto operator<=>(const PeakForm&, const PeakForm&) = default;
};

inline PeakForm to_peak_form(const Partition& alpha, int k) {
  if (k < 1) throw DomainError("k must be positive");
  if (alpha.length() > k)
    throw DomainError("partition " + alpha.key() + " has more than k parts");
  std::vector<int> p = alpha.padded(k);
  std::reverse(p.begin(), p.end());
  PeakForm pf;
  int prev = 0;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    pf.a.push_back(static_cast<int>(j - i));
    pf.b.push_back(p[i] - prev);
    prev = p[i];
    i = j;
  }
  return pf;
}

inline Partition from_peak_form(const PeakForm& pf) {
  if (pf.a.size() != pf.b.size() || pf.a.empty())
    throw DomainError("peak form needs matching, non-empty a and b");
  std::vector<int> parts;
  int v = 0;
  for (std::size_t i = 0; i < pf.a.size(); ++i) {
    if (pf.a[i] < 1) throw DomainError("peak multiplicities must be positive");
    if (pf.b[i] < (i == 0 ? 0 : 1)) throw DomainError("peak gaps must be positive");
    v += pf.b[i];
    parts.insert(parts.end(), pf.a[i], v);
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

// Peak form obtained by removing peak j (1-based): the flag entry V^j is
// dropped, merging the neighbouring runs.
inline PeakForm remove_peak(const PeakForm& pf, int j) {
  const int m = pf.peaks();
  if (j < 1 || j > m) throw DomainError("peak index out of range");
  PeakForm out{pf.a, pf.b};
  if (j == 1) {
    out.a.erase(out.a.begin());
    out.b.erase(out.b.begin());
    if (!out.b.empty()) out.b[0] += pf.b[0];
    return out;
  }
  out.a[j - 2] += pf.a[j - 1];
  out.a.erase(out.a.begin() + (j - 1));
  if (j < m) out.b[j - 1] += pf.b[j];
  out.b.erase(out.b.begin() + (j < m ? j : j - 1));
  return out;
}

// 1-based indices of the coordinate subspace at the centre of the cell
// X_beta^o in Gr(k, n).
inline std::vector<int> cell_center(const Partition& beta, int k, int n) {
  if (!beta.fits(k, n - k)) throw DomainError("partition " + beta.key() + " outside the box");
  std::vector<int> out(k);
  for (int t = 1; t <= k; ++t) out[t - 1] = t + beta[k - t];
  return out;
}

// c_i = dim(U_beta ∩ V^i) - (a_1 + ... + a_i), i = 0..m, for beta <= alpha.
inline std::vector<int> depth_vector(const Partition& alpha, const Partition& beta, int k, int n) {
  if (!alpha.fits(k, n - k)) throw DomainError("partition " + alpha.key() + " outside the box");
  if (!leq(beta, alpha)) throw DomainError(beta.key() + " is not below " + alpha.key());
  PeakForm pf = to_peak_form(alpha, k);
  std::vector<int> center = cell_center(beta, k, n);
  std::vector<int> c(pf.peaks() + 1, 0);
  for (int i = 1; i <= pf.peaks(); ++i) {
    int dim = pf.flag_dim(i);
    int meet = static_cast<int>(std::count_if(center.begin(), center.end(), [&](int e) { return e <= dim; }));
    c[i] = meet - pf.rank_bound(i);
    if (c[i] < 0) throw InvariantViolation("negative depth for " + beta.key() + " in " + alpha.key());
  }
  return c;
}

}  // namespace csm
