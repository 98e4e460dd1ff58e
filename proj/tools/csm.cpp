// Command-line front end: CSM classes, Chern-Mather classes and Euler
// obstructions of Schubert cells and varieties in Gr(k, n).

#include "csm/cache.hpp"
#include "csm/csm.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace csm;

struct Options {
  int k = 0;
  int n = 0;
  std::string alpha;
  std::string beta;
  std::string order = "small";
  std::string engine = "localization";
  std::string format = "pretty";
  std::string weights;
  std::string cache_dir;
  std::string kind = "cell";
  int jobs = 1;
  int peak = 0;
  bool verify = false;
};

std::optional<WeightAssignment> parse_weights(const std::string& text, int n) {
  if (text.empty()) return std::nullopt;
  WeightAssignment w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.w.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("bad weight '" + tok + "'");
    }
  }
  w.check(n);
  return w;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw DomainError("format '" + o.format + "' is not available for this command");
}

CsmEngine make_engine(const Options& o) {
  EngineKind engine = parse_engine(o.engine);
  if (o.verify) engine = EngineKind::Both;
  return CsmEngine(o.k, o.n, OrderStrategy::parse(o.order), engine, parse_weights(o.weights, o.n));
}

Partition alpha_of(const Options& o) {
  if (o.alpha.empty()) throw DomainError("--alpha is required");
  return Partition::parse(o.alpha);
}

void print_expansion(const Options& o, const Partition& alpha, const SchubertExpansion& e) {
  require_format(o, {"pretty", "json", "csv"});
  if (o.format == "json") std::cout << to_json(e).dump() << '\n';
  else if (o.format == "csv") std::cout << to_csv(alpha, e);
  else std::cout << to_pretty(e);
}

void print_table(const Options& o, const CsmTable& t) {
  require_format(o, {"pretty", "json", "csv"});
  if (o.format == "json") std::cout << to_json(t).dump() << '\n';
  else if (o.format == "csv") std::cout << to_csv(t);
  else std::cout << to_pretty(t);
}

int run_expansion(const Options& o, TableKind kind) {
  CsmEngine engine = make_engine(o);
  Partition alpha = alpha_of(o);
  engine.check_cell(alpha);
  SchubertExpansion e;
  if (kind == TableKind::Cell) e = engine.csm_cell(alpha);
  else if (kind == TableKind::Variety) e = engine.csm_variety(alpha);
  else e = engine.chern_mather(alpha);
  print_expansion(o, alpha, e);
  return 0;
}

int run_euler(const Options& o) {
  CsmEngine engine = make_engine(o);
  Partition alpha = alpha_of(o);
  engine.check_cell(alpha);
  if (!o.beta.empty()) {
    require_format(o, {"pretty", "json"});
    Integer eu = engine.euler_obstruction(alpha, Partition::parse(o.beta));
    std::cout << (o.format == "json" ? to_json(eu).dump() : eu.str()) << '\n';
    return 0;
  }
  SchubertExpansion row(o.k, o.n);
  for (const auto& beta : lower_interval(alpha)) row.add(beta, engine.euler_obstruction(alpha, beta));
  print_expansion(o, alpha, row);
  return 0;
}

int run_d_matrix(const Options& o) {
  CsmEngine engine = make_engine(o);
  print_table(o, engine.table(TableKind::DMatrix, o.jobs));
  return 0;
}

int run_table(const Options& o) {
  TableKind kind = parse_table_kind(o.kind);
  CsmEngine engine = make_engine(o);
  std::optional<TableCache> cache;
  if (!o.cache_dir.empty()) cache.emplace(o.cache_dir);
  Json key = TableCache::make_key(o.k, o.n, table_kind_name(kind), engine.strategy().str(),
                                  engine_name(engine.engine()), o.weights);
  // a --verify run recomputes so that the check actually happens
  std::optional<std::string> payload;
  if (cache && !o.verify) payload = cache->load(key);
  if (!payload) {
    payload = to_json(engine.table(kind, o.jobs)).dump();
    if (cache) cache->store(key, *payload);
  }
  if (o.format == "json") {
    std::cout << *payload << '\n';
    return 0;
  }
  print_table(o, table_from_json(Json::parse(*payload), o.k, o.n, kind));
  return 0;
}

int run_smallness(const Options& o) {
  require_format(o, {"pretty", "json"});
  std::vector<Partition> alphas;
  if (o.alpha.empty()) alphas = enumerate_box(o.k, o.n - o.k);
  else alphas.push_back(alpha_of(o));
  Json out = Json::array();
  std::ostringstream text;
  for (const auto& alpha : alphas) {
    if (!alpha.fits(o.k, o.n - o.k)) throw DomainError("partition " + alpha.key() + " outside the box");
    PeakForm pf = to_peak_form(alpha, o.k);
    const int m = pf.peaks();
    bool id_small = is_small(alpha, PeakOrder::identity(m), o.k);
    bool w0_small = is_small(alpha, PeakOrder::reversed(m), o.k);
    PeakOrder chosen = OrderStrategy::parse(o.order).choose(alpha, o.k);
    bool chosen_small = is_small(alpha, chosen, o.k);
    out.push_back(Json{{"alpha", alpha.key()},
                       {"peak_form", to_json(pf)},
                       {"id_small", id_small},
                       {"w0_small", w0_small},
                       {"order", chosen.perm},
                       {"small", chosen_small},
                       {"singular_locus", [&] {
                          Json s = Json::array();
                          for (const auto& b : singular_locus(alpha, o.k)) s.push_back(b.key());
                          return s;
                        }()}});
    text << alpha.key() << "  " << pf.str() << "  id:" << (id_small ? "small" : "-") << "  w0:"
         << (w0_small ? "small" : "-") << "  (" << chosen.str() << "):" << (chosen_small ? "small" : "not small")
         << '\n';
  }
  if (o.format == "json") std::cout << out.dump() << '\n';
  else std::cout << text.str();
  return 0;
}

int run_positivity(const Options& o) {
  require_format(o, {"pretty", "json"});
  CsmEngine engine = make_engine(o);
  engine.precompute(o.jobs);
  PositivityReport rep = positivity_report(engine);
  Json weak = Json::array();
  std::ostringstream text;
  text << "Gr(" << o.k << "," << o.n << "): " << rep.rows.size() << " cells, "
       << (rep.all_nonnegative() ? "all coefficients non-negative" : "NEGATIVE coefficients found") << '\n';
  for (const auto& neg : rep.negatives)
    text << "  " << neg.kind << " " << neg.alpha.key() << " at " << neg.beta.key() << ": " << neg.value.str() << '\n';
  for (int a = 1; a < o.k; ++a)
    for (int p = 1; p < o.n - o.k; ++p)
      for (int b = 1; b + p <= o.n - o.k; ++b) {
        WeakPositivityResult r = weak_positivity_check(a, b, p, o.k, o.n);
        weak.push_back(Json{{"a", a}, {"b", b}, {"p", p}, {"alpha", r.alpha.key()}, {"beta", r.beta.key()},
                            {"identity_holds", r.identity_holds}, {"positive", r.positive}});
        text << "  (b+p,p^a) = " << r.alpha.key() << ": identity " << (r.identity_holds ? "holds" : "FAILS")
             << ", " << (r.positive ? "positive" : "NOT positive") << '\n';
      }
  if (o.format == "json") std::cout << Json{{"report", to_json(rep)}, {"weak_positivity", weak}}.dump() << '\n';
  else std::cout << text.str();
  return 0;
}

int run_resolve(const Options& o) {
  require_format(o, {"pretty", "json", "dot"});
  CsmEngine engine = make_engine(o);
  ResolutionPlan plan = engine.plan_for(alpha_of(o));
  if (o.format == "json") std::cout << to_json(plan).dump() << '\n';
  else if (o.format == "dot") std::cout << plan_to_dot(plan);
  else std::cout << to_pretty(plan) << '\n' << plan_to_dot(plan);
  return 0;
}

int run_codim1(const Options& o) {
  require_format(o, {"pretty", "json"});
  Partition alpha = alpha_of(o);
  CsmEngine engine = make_engine(o);
  engine.check_cell(alpha);
  std::vector<int> peaks = o.peak ? std::vector<int>{o.peak} : codim1_peaks(alpha, o.k);
  Json out = Json::array();
  std::ostringstream text;
  for (int i : peaks) {
    Partition beta = codim1_neighbor(alpha, i, o.k);
    Integer c = codim1_coefficient(alpha, i, o.k, o.n);
    if (o.verify) {
      Integer full = engine.csm_cell(alpha).coefficient(beta);
      if (full != c)
        throw InvariantViolation("codimension-one formula gives " + c.str() + " but the full computation gives " +
                                 full.str() + " at " + beta.key());
    }
    out.push_back(Json{{"peak", i}, {"beta", beta.key()}, {"coefficient", to_json(c)}, {"pushforward", to_json(Integer(c + 1))}});
    text << "peak " << i << ": [" << beta.key() << "] coefficient " << c.str() << " (resolution pushforward "
         << Integer(c + 1).str() << ")\n";
  }
  if (o.format == "json") std::cout << out.dump() << '\n';
  else std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern-Schwartz-MacPherson and Chern-Mather classes of Schubert cells and varieties in Gr(k, n)"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("CSM_CACHE_DIR")) o.cache_dir = env;

  auto common = [&](CLI::App* sub, bool needs_alpha) {
    sub->add_option("--k", o.k, "dimension of the subspaces")->required();
    sub->add_option("--n", o.n, "dimension of the ambient space")->required();
    auto* a = sub->add_option("--alpha", o.alpha, "partition, comma separated (e.g. 2,1)");
    if (needs_alpha) a->required();
    sub->add_option("--order", o.order, "peak order: small, id, w0 or perm:i,j,...")->capture_default_str();
    sub->add_option("--engine", o.engine, "pushforward engine: localization, gysin or both")->capture_default_str();
    sub->add_option("--format", o.format, "output format: pretty, json, csv or dot")->capture_default_str();
    sub->add_option("--weights", o.weights, "strictly increasing torus weights, comma separated");
    sub->add_option("--cache-dir", o.cache_dir, "table cache directory (default $CSM_CACHE_DIR)");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_flag("--verify", o.verify, "cross-check the localization and Gysin engines");
  };

  auto* cell = app.add_subcommand("cell", "CSM class of the Schubert cell X°_alpha");
  common(cell, true);
  auto* variety = app.add_subcommand("variety", "CSM class of the Schubert variety X_alpha");
  common(variety, true);
  auto* mather = app.add_subcommand("mather", "Chern-Mather class of X_alpha");
  common(mather, true);
  auto* euler = app.add_subcommand("euler-obs", "local Euler obstructions of X_alpha along the cells below it");
  common(euler, true);
  euler->add_option("--beta", o.beta, "single cell to evaluate at");
  auto* dm = app.add_subcommand("d-matrix", "fiber Euler characteristics d_{alpha,beta}");
  common(dm, false);
  auto* table = app.add_subcommand("table", "full table over the box");
  common(table, false);
  table->add_option("--kind", o.kind, "cell, variety, mather, euler-obs or d-matrix")->capture_default_str();
  auto* smallness = app.add_subcommand("smallness", "which peak orders give small resolutions");
  common(smallness, false);
  auto* positivity = app.add_subcommand("positivity", "sign audit of all classes in Gr(k, n)");
  common(positivity, false);
  auto* resolve = app.add_subcommand("resolve", "resolution plan of X_alpha and its incidence graph");
  common(resolve, true);
  auto* codim1 = app.add_subcommand("codim1", "codimension-one coefficients of c_SM(X°_alpha)");
  common(codim1, true);
  codim1->add_option("--peak", o.peak, "only this peak (1-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (o.k < 1 || o.n <= o.k) throw DomainError("need 0 < k < n");
    if (*cell) return run_expansion(o, TableKind::Cell);
    if (*variety) return run_expansion(o, TableKind::Variety);
    if (*mather) return run_expansion(o, TableKind::Mather);
    if (*euler) return run_euler(o);
    if (*dm) return run_d_matrix(o);
    if (*table) return run_table(o);
    if (*smallness) return run_smallness(o);
    if (*positivity) return run_positivity(o);
    if (*resolve) return run_resolve(o);
    if (*codim1) return run_codim1(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
