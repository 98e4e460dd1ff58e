#pragma once

#include "csm/arith.hpp"
#include "csm/partition.hpp"

#include <map>
#include <string>

namespace csm {

// Integer combination of Schubert classes [X_beta] in Gr(k, n).
struct SchubertExpansion {
  int k = 0;
  int n = 0;
  std::map<Partition, Integer, BoxOrder> coeffs;  // zero entries omitted

  SchubertExpansion() = default;
  SchubertExpansion(int k_, int n_) : k(k_), n(n_) {}

  Integer coefficient(const Partition& beta) const {
    auto it = coeffs.find(beta);
    return it == coeffs.end() ? Integer(0) : it->second;
  }
  Integer point_coefficient() const { return coefficient(Partition{}); }

  void add(const Partition& beta, const Integer& c) {
    if (c == 0) return;
    if (!beta.fits(k, n - k)) throw DomainError("partition " + beta.key() + " outside the box");
    auto& slot = coeffs[beta];
    slot += c;
    if (slot == 0) coeffs.erase(beta);
  }
  void add(const SchubertExpansion& other, const Integer& scale = 1) {
    for (const auto& [beta, c] : other.coeffs) add(beta, c * scale);
  }
  Integer min_coefficient() const {
    Integer lo = 0;
    bool first = true;
    for (const auto& [beta, c] : coeffs)
      if (first || c < lo) {
        lo = c;
        first = false;
      }
    return lo;
  }

  friend bool operator==(const SchubertExpansion& x, const SchubertExpansion& y) {
    return x.k == y.k && x.n == y.n && x.coeffs == y.coeffs;
  }

  std::string str() const {
    std::string out;
    for (const auto& [beta, c] : coeffs) {
      if (!out.empty()) out += " + ";
      out += c.str() + "[" + beta.key() + "]";
    }
    return out.empty() ? "0" : out;
  }
};

}  // namespace csm
