#pragma once

// JSON, CSV and plain-text renderings. Layouts are described in
// docs/formats.md.

#include "csm/engine.hpp"
#include "csm/expansion.hpp"
#include "csm/gysin.hpp"
#include "csm/partition.hpp"
#include "csm/symmetric.hpp"
#include "csm/zelevinsky.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace csm {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw DomainError("expected an integer in JSON");
}

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

inline Json to_json(const PeakForm& pf) { return Json{{"a", pf.a}, {"b", pf.b}}; }

inline PeakForm peak_form_from_json(const Json& j) {
  return PeakForm{j.at("a").get<std::vector<int>>(), j.at("b").get<std::vector<int>>()};
}

inline Json to_json(const SchubertExpansion& e) {
  Json out = Json::object();
  for (const auto& [beta, c] : e.coeffs) out[beta.key()] = to_json(c);
  return out;
}

inline SchubertExpansion expansion_from_json(const Json& j, int k, int n) {
  SchubertExpansion out(k, n);
  for (const auto& [key, value] : j.items()) out.add(Partition::parse(key), integer_from_json(value));
  return out;
}

// Map of maps: row key -> {column key -> value}.
inline Json to_json(const CsmTable& t) {
  Json out = Json::object();
  for (std::size_t i = 0; i < t.cells.size(); ++i) out[t.cells[i].key()] = to_json(t.rows[i]);
  return out;
}

inline CsmTable table_from_json(const Json& j, int k, int n, TableKind kind) {
  CsmTable t{k, n, kind, {}, {}};
  for (const auto& [key, row] : j.items()) {
    t.cells.push_back(Partition::parse(key));
    t.rows.push_back(expansion_from_json(row, k, n));
  }
  return t;
}

inline Json to_json(const UnipotentMatrix& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::object();
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.entries[i][j] != 0) row[m.index[j].key()] = to_json(m.entries[i][j]);
    out[m.index[i].key()] = row;
  }
  return out;
}

inline Json to_json(const BoundRef& b) { return Json{{b.is_factor() ? "factor" : "flag", b.value}}; }

inline Json to_json(const ResolutionPlan& plan) {
  Json steps = Json::array();
  for (const auto& st : plan.steps)
    steps.push_back(Json{{"k", st.k}, {"left", to_json(st.left)}, {"right", to_json(st.right)}, {"l", st.l}, {"r", st.r}});
  return Json{{"alpha", to_json(plan.alpha)},
              {"k", plan.k},
              {"n", plan.n},
              {"peak_form", to_json(to_peak_form(plan.alpha, plan.k))},
              {"order", plan.order.perm},
              {"steps", steps},
              {"image", to_json(plan.image)},
              {"dimension", plan.dimension()}};
}

inline Json to_json(const FlagClassExpr& e) {
  Json terms = Json::array();
  for (const auto& [mono, c] : e.terms()) {
    Json m = Json::array();
    for (const auto& p : mono) m.push_back(to_json(p));
    terms.push_back(Json{{"monomial", m}, {"coeff", to_json(c)}});
  }
  return Json{{"ranks", e.ranks()}, {"max_degree", e.max_degree()}, {"terms", terms}};
}

inline Json to_json(const PositivityReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back(Json{{"alpha", r.alpha.key()},
                        {"min_cell", to_json(r.min_cell)},
                        {"min_variety", to_json(r.min_variety)},
                        {"min_mather", to_json(r.min_mather)}});
  Json neg = Json::array();
  for (const auto& e : rep.negatives)
    neg.push_back(Json{{"kind", e.kind}, {"alpha", e.alpha.key()}, {"beta", e.beta.key()}, {"value", to_json(e.value)}});
  return Json{{"k", rep.k}, {"n", rep.n}, {"all_nonnegative", rep.all_nonnegative()}, {"rows", rows}, {"negatives", neg}};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Header "alpha" followed by the column keys; one line per row.
inline std::string to_csv(const std::vector<Partition>& columns, const std::vector<Partition>& row_keys,
                          const std::vector<SchubertExpansion>& rows) {
  std::ostringstream os;
  os << "alpha";
  for (const auto& c : columns) os << ',' << csv_field(c.key());
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << csv_field(row_keys[i].key());
    for (const auto& c : columns) os << ',' << rows[i].coefficient(c).str();
    os << '\n';
  }
  return os.str();
}

inline std::string to_csv(const CsmTable& t) { return to_csv(t.cells, t.cells, t.rows); }

inline std::string to_csv(const Partition& alpha, const SchubertExpansion& e) {
  return to_csv(enumerate_box(e.k, e.n - e.k), {alpha}, {e});
}

inline std::string to_pretty(const SchubertExpansion& e) {
  std::ostringstream os;
  std::size_t width = 1;
  for (const auto& [beta, c] : e.coeffs) width = std::max(width, beta.key().size() + 2);
  for (const auto& [beta, c] : e.coeffs)
    os << std::left << std::setw(static_cast<int>(width)) << "[" + beta.key() + "]" << "  " << c.str() << '\n';
  return os.str();
}

inline std::string to_pretty(const CsmTable& t) {
  std::vector<std::string> head{""};
  for (const auto& c : t.cells) head.push_back(c.key());
  std::vector<std::vector<std::string>> grid{head};
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    std::vector<std::string> line{t.cells[i].key()};
    for (const auto& c : t.cells) {
      Integer v = t.rows[i].coefficient(c);
      line.push_back(v == 0 ? "." : v.str());
    }
    grid.push_back(line);
  }
  std::vector<std::size_t> width(head.size(), 1);
  for (const auto& line : grid)
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  std::ostringstream os;
  for (const auto& line : grid) {
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j == 0) os << std::left << std::setw(static_cast<int>(width[j])) << line[j];
      else os << "  " << std::right << std::setw(static_cast<int>(width[j])) << line[j];
    }
    os << '\n';
  }
  return os.str();
}

inline std::string to_pretty(const ResolutionPlan& plan) {
  std::ostringstream os;
  os << "X_" << plan.alpha.key() << " in Gr(" << plan.k << "," << plan.n << "), peaks "
     << to_peak_form(plan.alpha, plan.k).str() << ", order (" << plan.order.str() << ")\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& st = plan.steps[i];
    os << "  U_" << i + 1 << ": " << st.left.str() << " ⊂ U_" << i + 1 << " ⊂ " << st.right.str() << ", dim " << st.k
       << " (l=" << st.l << ", r=" << st.r << ")\n";
  }
  os << "  image " << plan.image.str() << ", dim Z = " << plan.dimension() << '\n';
  return os.str();
}

}  // namespace csm
