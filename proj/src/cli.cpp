#include "maxalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <type_traits>

#include "maxalg/asymptotics.hpp"
#include "maxalg/balancing.hpp"
#include "maxalg/commuting.hpp"
#include "maxalg/matrix_file.hpp"
#include "maxalg/scaling.hpp"
#include "maxalg/spectral.hpp"

namespace maxalg::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool exact = false;
  bool flt = false;
  bool json = false;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  bool has_tol = false;
  bool has_seed = false;
  bool has_budget = false;
  std::string kind;
  std::string theta;
  bool has_theta = false;
  std::vector<std::string> files;
};

struct Ctx {
  const Options& opt;
  AnalysisReport& report;
  int exit = kOk;

  Json& res() { return report.results; }
  void warn(std::string w) { report.warnings.push_back(std::move(w)); }
  void negative(const std::string& status = "negative") {
    report.status = status;
    exit = kNegative;
  }
  std::optional<std::size_t> budget() const {
    return opt.has_budget ? std::optional<std::size_t>(opt.budget) : std::nullopt;
  }
};

// ---- JSON encoding of library values; nodes are 1-based ----

template <class S>
Json scalar(const S& v) {
  if constexpr (Num<S>::exact) {
    return Num<S>::str(v);
  } else if constexpr (Num<S>::additive) {
    if (!v.finite()) return "-inf";
    return v.exponent();
  } else {
    return v;
  }
}

template <class S>
Json vec(const Vector<S>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar(x));
  return out;
}

template <class S>
Json mat(const Matrix<S>& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(vec(a.row(i)));
  return out;
}

Json nodes(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

Json nodes(const std::vector<bool>& mask) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) v.push_back(i);
  return nodes(v);
}

Json edges(const Graph& g) {
  Json out = Json::array();
  for (const auto& [i, j] : g.edges()) out.push_back(std::to_string(i + 1) + "->" + std::to_string(j + 1));
  return out;
}

Json components(const SccDecomposition& d) {
  Json out = Json::array();
  for (std::size_t c = 0; c < d.count(); ++c) {
    out.push_back({{"nodes", nodes(d.components[c])}, {"cyclic", static_cast<bool>(d.nontrivial[c])}});
  }
  return out;
}

template <class S>
Json witness(const Obstruction<S>& o) {
  return {{"cycle", format_path(o.cycle)}, {"weight", scalar(o.weight)}};
}

// lambda as a scalar when representable, otherwise "(w)^(1/l)".
template <class S>
Json lambda_json(const CycleMean<S>& m) {
  if (auto v = m.value()) return scalar(*v);
  return "(" + Num<S>::str(m.weight) + ")^(1/" + std::to_string(m.length) + ")";
}

template <class S>
Json mean_json(const CycleMean<S>& m) {
  Json out;
  out["lambda"] = lambda_json(m);
  if (m.acyclic()) {
    out["cycle"] = nullptr;
  } else {
    out["cycle"] = format_path(m.witness);
    out["cycle_weight"] = scalar(m.weight);
    out["cycle_length"] = m.length;
  }
  return out;
}

// Positive vectors in reports are scaled so their smallest entry is the unit.
template <class S>
Vector<S> min_normalized(Vector<S> x) {
  S lo = x.front();
  for (const S& v : x)
    if (Num<S>::raw_less(v, lo)) lo = v;
  for (auto& v : x) v = Num<S>::div(v, lo);
  return x;
}

// Sample vector u for a scaling family: all ones, or with --seed entries 2^k,
// k uniform in [-4, 4], drawn from mt19937_64 (portable across platforms).
template <class S>
Vector<S> sample_vector(const Ctx& ctx, std::size_t n) {
  if (!ctx.opt.has_seed) return ones<S>(n);
  std::mt19937_64 rng(ctx.opt.seed);
  Vector<S> u;
  for (std::size_t i = 0; i < n; ++i) {
    const int k = static_cast<int>(rng() % 9) - 4;
    if constexpr (Num<S>::additive) {
      using E = std::decay_t<decltype(std::declval<S>().exponent())>;
      if constexpr (Num<E>::exact) {
        u.push_back(S(E(k)));
      } else {
        u.push_back(S(k * std::log(2.0)));
      }
    } else if constexpr (Num<S>::exact) {
      u.push_back(k >= 0 ? Rational(1L << k) : Rational(1, 1L << -k));
    } else {
      u.push_back(std::ldexp(1.0, k));
    }
  }
  return u;
}

// ---- input ----

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::optional<Mode> forced_mode(const Options& opt) {
  if (opt.exact) return Mode::Exact;
  if (opt.flt) return Mode::Float;
  return std::nullopt;
}

const char* domain_name(Domain d) { return d == Domain::MaxTimes ? "maxtimes" : "maxplus"; }
const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

MatrixFile load(Ctx& ctx, const std::string& path) {
  const std::string text = read_file(path);
  MatrixFile f;
  try {
    const auto mode = forced_mode(ctx.opt);
    f = mode ? parse_matrix(text, *mode, ctx.opt.tol) : parse_matrix(text, ctx.opt.tol);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  ctx.report.inputs.push_back({{"file", path},
                               {"domain", domain_name(f.domain)},
                               {"mode", mode_name(f.mode)},
                               {"n", f.n()},
                               {"digest", digest(text)}});
  if (f.mode == Mode::Exact && ctx.opt.has_tol) ctx.warn("--tol has no effect in exact mode");
  if (f.mode == Mode::Float) {
    std::ostringstream t;
    t << "float mode: comparisons within relative tolerance " << ctx.opt.tol;
    if (std::find(ctx.report.warnings.begin(), ctx.report.warnings.end(), t.str()) == ctx.report.warnings.end())
      ctx.warn(t.str());
  }
  return f;
}

template <class S>
const Matrix<S>& same_kind(const MatrixFile& f) {
  if (const auto* m = std::get_if<Matrix<S>>(&f.matrix)) return *m;
  throw ModeMismatch("input files differ in domain or mode");
}

template <class S>
S parse_scalar(const std::string& token, const Ctx& ctx) {
  std::string header;
  if constexpr (Num<S>::additive) header = "maxplus 1 ";
  else header = "maxtimes 1 ";
  header += Num<S>::exact ? "exact\n" : "float\n";
  try {
    const MatrixFile f = parse_matrix(header + token + "\n", ctx.opt.tol);
    return std::get<Matrix<S>>(f.matrix)(0, 0);
  } catch (const ParseError&) {
    throw UsageError("bad scalar '" + token + "'");
  }
}

// ---- subcommands ----

template <class S>
void cmd_info(Ctx& ctx, const Matrix<S>& a) {
  const Graph g = structure_of(a);
  const SccDecomposition d = scc(g);
  ctx.res()["n"] = a.n();
  ctx.res()["edges"] = g.edge_count();
  ctx.res()["irreducible"] = strongly_connected(g);
  ctx.res()["components"] = components(d);
  ctx.res()["max_cycle_mean"] = mean_json(max_cycle_gmean(a));
}

template <class S>
void cmd_star(Ctx& ctx, const Matrix<S>& a) {
  const auto star = kleene_star(a);
  ctx.res()["convergent"] = star.ok();
  if (star) {
    ctx.res()["star"] = mat(star.value());
  } else {
    ctx.res()["witness"] = witness(star.obstruction());
    ctx.negative();
  }
}

template <class S>
void cmd_eigen(Ctx& ctx, const Matrix<S>& a) {
  const CycleMean<S> mean = max_cycle_gmean(a);
  ctx.res()["lambda"] = lambda_json(mean);
  if (mean.acyclic()) throw AcyclicMatrix("lambda(A) = 0: no eigenvector with positive entries");
  ctx.res()["critical_cycle"] = format_path(mean.witness);
  const CriticalGraph<S> crit = critical_graph(a);
  ctx.res()["critical_nodes"] = nodes(crit.nodes);
  ctx.res()["critical_edges"] = edges(crit.edges);
  ctx.res()["cyclicity"] = crit.cyclicity;
  lambda_value(mean);  // ExactnessError before any vector work
  ctx.res()["eigenvector"] = vec(min_normalized(principal_eigenvector(a)));
  Json basis = Json::array();
  for (const auto& v : eigenspace_basis(a)) basis.push_back(vec(v));
  ctx.res()["basis"] = basis;
}

template <class S>
void report_scaling(Ctx& ctx, const Matrix<S>& a, const Solvable<Vector<S>, S>& x) {
  ctx.res()["exists"] = x.ok();
  if (!x) {
    ctx.res()["witness"] = witness(x.obstruction());
    ctx.negative();
    return;
  }
  ctx.res()["scaling"] = vec(x.value());
  ctx.res()["scaled"] = mat(apply_scaling(a, x.value()));
}

template <class S>
void report_balance(Ctx& ctx, const BalancingCertificate<S>& cert) {
  ctx.res()["scaling"] = vec(cert.scaling);
  ctx.res()["balanced"] = mat(cert.balanced);
  ctx.res()["levels"] = vec(cert.levels);
  Json checked = Json::array();
  for (BalanceCheck c : cert.checked) checked.push_back(c == BalanceCheck::CycleCover ? "cycle-cover" : "cut");
  ctx.res()["checked"] = checked;
}

template <class S>
void cmd_scale(Ctx& ctx, const Matrix<S>& a) {
  const std::string& kind = ctx.opt.kind;
  ctx.res()["kind"] = kind;
  if (kind == "fp") {
    report_scaling(ctx, a, fp_scaling(a));
  } else if (kind == "strong") {
    report_scaling(ctx, a, strong_fp_scaling(a));
  } else if (kind == "eig") {
    // Visualization: an FP scaling of A / lambda(A).
    const auto [unit, mean] = normalize_to_unit(a);
    ctx.res()["lambda"] = lambda_json(mean);
    const Vector<S> x = fp_scaling(unit).value();
    ctx.res()["scaling"] = vec(x);
    ctx.res()["visualized"] = mat(apply_scaling(unit, x));
    ctx.res()["saturation_edges"] = edges(saturation_graph(unit, x).structure());
  } else if (kind == "rowcol") {
    const auto family = row_col_maxima_scalings(a);
    ctx.res()["exists"] = family.ok();
    if (!family) {
      ctx.res()["witness"] = witness(family.obstruction());
      ctx.negative();
      return;
    }
    const Vector<S> x = family.value().sample(sample_vector<S>(ctx, a.n()));
    ctx.res()["q"] = mat(family.value().q);
    ctx.res()["scaling"] = vec(x);
    ctx.res()["scaled"] = mat(apply_scaling(a, x));
  } else {
    if constexpr (std::is_same_v<S, Rational>) {
      try {
        report_balance(ctx, max_balance(a));
      } catch (const ExactnessError& e) {
        ctx.warn(std::string(e.what()) + "; recomputed in float mode");
        report_balance(ctx, max_balance(convert_numeric<double>(a)));
      }
    } else {
      report_balance(ctx, max_balance(a));
    }
  }
}

template <class S>
void cmd_sandwich(Ctx& ctx, const std::vector<MatrixFile>& files) {
  std::vector<SandwichTriple<S>> triples;
  for (std::size_t k = 0; k < files.size(); k += 3) {
    triples.push_back({same_kind<S>(files[k]), same_kind<S>(files[k + 1]), same_kind<S>(files[k + 2])});
  }
  const auto family = sandwich_scalings(triples);
  ctx.res()["exists"] = family.ok();
  if (!family) {
    ctx.res()["witness"] = witness(family.obstruction());
    ctx.negative();
    return;
  }
  const Vector<S> x = family.value().sample(sample_vector<S>(ctx, family.value().q.n()));
  ctx.res()["q"] = mat(family.value().q);
  ctx.res()["scaling"] = vec(x);
  Json scaled = Json::array();
  for (const auto& t : triples) scaled.push_back(mat(apply_scaling(t.middle, x)));
  ctx.res()["scaled_middle"] = scaled;
}

template <class F>
void cmd_hadamard(Ctx& ctx, const RealMatrix<F>& b) {
  const auto d = hadamard_scaling_test(b, ctx.opt.tol);
  ctx.res()["exists"] = d.ok();
  if (!d) {
    ctx.res()["witness"] = witness(d.obstruction());
    ctx.negative();
    return;
  }
  const auto& x = d.value();
  ctx.res()["d"] = vec(x);
  Json c = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < b.size(); ++j) row.push_back(scalar(F(b[i][j] * x[j] / x[i])));
    c.push_back(row);
  }
  ctx.res()["scaled"] = c;
}

// Powers are studied for A / lambda(A); lambda is reported alongside.
template <class S>
void cmd_powers(Ctx& ctx, const Matrix<S>& a) {
  const auto [unit, mean] = normalize_to_unit(a);
  ctx.res()["lambda"] = lambda_json(mean);
  const auto prof = transient_and_period(unit, ctx.budget());
  ctx.res()["transient"] = prof.transient;
  ctx.res()["period"] = prof.period;
  ctx.res()["critical_cyclicity"] = prof.predicted_period;
  Json powers = Json::array();
  for (std::size_t k = 0; k < prof.period; ++k) powers.push_back(mat(prof.powers[k]));
  ctx.res()["periodic_powers"] = powers;
}

template <class S>
void cmd_csr(Ctx& ctx, const Matrix<S>& a) {
  const auto t = csr_decompose(a, ctx.budget());
  ctx.res()["lambda"] = scalar(t.lambda);
  ctx.res()["gamma"] = t.gamma;
  ctx.res()["critical_nodes"] = nodes(t.critical_nodes);
  ctx.res()["scaling"] = vec(t.x);
  ctx.res()["visualized"] = mat(t.visualized);
  ctx.res()["C"] = mat(t.c);
  ctx.res()["S"] = mat(t.s);
  ctx.res()["R"] = mat(t.r);
  ctx.res()["transient"] = t.transient;
  ctx.res()["csr_onset"] = t.csr_onset;
}

template <class S>
void cmd_nachtigall(Ctx& ctx, const Matrix<S>& a) {
  const auto e = nachtigall_expansion(a, ctx.budget());
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    terms.push_back({{"lambda", scalar(t.lambda)}, {"support", nodes(t.support)}, {"gamma", t.gamma}});
  }
  ctx.res()["terms"] = terms;
  if (e.validity_start) {
    ctx.res()["validity_start"] = *e.validity_start;
  } else {
    ctx.res()["validity_start"] = nullptr;
    ctx.warn("expansion not confirmed within " + std::to_string(e.budget) + " powers; raise --budget");
  }
}

template <class S>
void cmd_bound(Ctx& ctx, const Matrix<S>& a) {
  const auto bound = transient_bound(a);
  if (!bound) {
    ctx.res()["bound"] = nullptr;
    ctx.res()["reason"] = "needs two expansion terms with lambda_1 > lambda_2";
    ctx.negative("inapplicable");
    return;
  }
  ctx.res()["bound"] = *bound;
  // Irreducible input: the CSR transient (larger of the periodicity transient
  // and the C S^t R onset). Otherwise the onset of the Nachtigall expansion.
  if (irreducible(a)) {
    const auto t = csr_decompose(a, ctx.budget());
    ctx.res()["measured_transient"] = std::max(t.transient, t.csr_onset);
  } else {
    const auto e = nachtigall_expansion(a, ctx.budget());
    if (e.validity_start) {
      ctx.res()["measured_transient"] = *e.validity_start;
    } else {
      ctx.res()["measured_transient"] = nullptr;
      ctx.warn("transient not reached within " + std::to_string(e.budget) + " powers");
    }
  }
}

template <class S>
void cmd_commute(Ctx& ctx, const Matrix<S>& a, const Matrix<S>& b) {
  const bool c = commutes(a, b);
  ctx.res()["commuting"] = c;
  if (!c) {
    ctx.negative();
    return;
  }
  const auto e = common_eigenvector(a, b, ctx.budget());
  const Vector<S> x = min_normalized(e.x);
  ctx.res()["eigenvector"] = vec(x);
  ctx.res()["lambda_a"] = scalar(e.lambda_a);
  ctx.res()["lambda_b"] = scalar(e.lambda_b);
  const auto pair = boolean_saturation_pair(a, b, x);
  ctx.res()["saturation_a"] = edges(pair.g1);
  ctx.res()["saturation_b"] = edges(pair.g2);
  ctx.res()["boolean_commuting"] = pair.commuting;
  const auto [c1, c2] = commuting_cycle_witness(pair);
  ctx.res()["cycle_a"] = format_path(c1);
  ctx.res()["cycle_b"] = format_path(c2);
}

template <class S>
void cmd_threshold(Ctx& ctx, const Matrix<S>& a) {
  if (ctx.opt.has_theta) {
    const S theta = parse_scalar<S>(ctx.opt.theta, ctx);
    const Graph g = threshold_digraph(a, theta).structure();
    ctx.res()["theta"] = scalar(theta);
    ctx.res()["edges"] = edges(g);
    ctx.res()["components"] = components(scc(g));
    return;
  }
  Json levels = Json::array();
  for (const auto& level : threshold_spectrum(a)) {
    levels.push_back({{"theta", scalar(level.theta)}, {"components", components(level.components)}});
  }
  ctx.res()["levels"] = levels;
}

// ---- argument parsing ----

const std::vector<std::pair<std::string, std::string>>& single_file_commands() {
  static const std::vector<std::pair<std::string, std::string>> cmds = {
      {"info", "dimension, strong components, maximum cycle mean"},
      {"star", "Kleene star A* = I + A + A^2 + ..., or a divergence witness"},
      {"eigen", "eigenvalue, critical graph, principal eigenvector, eigenspace basis"},
      {"hadamard", "diagonal similarity making a signed matrix diagonally dominant"},
      {"powers", "transient and period of the powers of A/lambda(A)"},
      {"csr", "CSR decomposition of high powers"},
      {"nachtigall", "Nachtigall expansion of high powers"},
      {"bound", "transient bound from the first two expansion coefficients"},
      {"threshold", "threshold digraph at --theta, or the whole threshold spectrum"},
  };
  return cmds;
}

void build_app(CLI::App& app, Options& opt) {
  app.description("Max-algebra analysis of nonnegative matrices.");
  app.name("maxalg");
  app.require_subcommand(1);
  app.fallthrough();
  auto* ex = app.add_flag("--exact", opt.exact, "exact rational arithmetic (overrides the file header)");
  auto* fl = app.add_flag("--float", opt.flt, "floating point with tolerance (overrides the file header)");
  ex->excludes(fl);
  app.add_option("--tol", opt.tol, "relative tolerance in float mode")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "print one JSON document");
  app.add_option("--seed", opt.seed, "seed for sampled scalings (rowcol, sandwich)");
  app.add_option("--budget", opt.budget, "cap on matrix powers for powers/csr/nachtigall/bound/commute")
      ->check(CLI::PositiveNumber);

  for (const auto& [name, help] : single_file_commands()) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.files, "matrix file")->required()->expected(1);
    if (name == "threshold") sub->add_option("--theta", opt.theta, "threshold value, in the file's domain");
  }
  auto* scale = app.add_subcommand("scale", "diagonal scalings: fp, strong, eig, rowcol, balance");
  scale->add_option("kind", opt.kind, "fp | strong | eig | rowcol | balance")
      ->required()
      ->check(CLI::IsMember({"fp", "strong", "eig", "rowcol", "balance"}));
  scale->add_option("file", opt.files, "matrix file")->required()->expected(1);
  auto* sandwich = app.add_subcommand("sandwich", "X with A_i <= X^-1 B_i X <= C_i for all triples");
  sandwich->add_option("files", opt.files, "A1 B1 C1 [A2 B2 C2 ...]")->required()->expected(3, 3000);
  auto* commute = app.add_subcommand("commute", "common eigenvector and saturation digraphs of a commuting pair");
  commute->add_option("files", opt.files, "A B")->required()->expected(2);
}

void dispatch(Ctx& ctx, const std::string& name) {
  const auto& files = ctx.opt.files;
  if (name == "hadamard") {
    const std::string text = read_file(files[0]);
    AnyRealMatrix b;
    try {
      b = parse_real_matrix(text, forced_mode(ctx.opt));
    } catch (const ParseError& e) {
      throw UsageError(files[0] + ": " + e.what());
    }
    const bool exact = std::holds_alternative<RealMatrix<Rational>>(b);
    const std::size_t n = std::visit([](const auto& m) { return m.size(); }, b);
    ctx.report.inputs.push_back({{"file", files[0]},
                                 {"domain", "maxtimes"},
                                 {"mode", exact ? "exact" : "float"},
                                 {"n", n},
                                 {"digest", digest(text)}});
    std::visit([&](const auto& m) { cmd_hadamard(ctx, m); }, b);
    return;
  }
  if (name == "sandwich") {
    if (files.size() % 3 != 0) throw UsageError("sandwich takes files in groups of three (A B C)");
    std::vector<MatrixFile> loaded;
    for (const auto& f : files) loaded.push_back(load(ctx, f));
    std::visit([&](const auto& m) { cmd_sandwich<typename std::decay_t<decltype(m)>::value_type>(ctx, loaded); },
               loaded.front().matrix);
    return;
  }
  if (name == "commute") {
    const MatrixFile a = load(ctx, files[0]);
    const MatrixFile b = load(ctx, files[1]);
    std::visit(
        [&](const auto& m) {
          using S = typename std::decay_t<decltype(m)>::value_type;
          cmd_commute(ctx, m, same_kind<S>(b));
        },
        a.matrix);
    return;
  }
  const MatrixFile f = load(ctx, files[0]);
  std::visit(
      [&](const auto& m) {
        if (name == "info") cmd_info(ctx, m);
        else if (name == "star") cmd_star(ctx, m);
        else if (name == "eigen") cmd_eigen(ctx, m);
        else if (name == "scale") cmd_scale(ctx, m);
        else if (name == "powers") cmd_powers(ctx, m);
        else if (name == "csr") cmd_csr(ctx, m);
        else if (name == "nachtigall") cmd_nachtigall(ctx, m);
        else if (name == "bound") cmd_bound(ctx, m);
        else if (name == "threshold") cmd_threshold(ctx, m);
      },
      f.matrix);
}

// ---- text rendering ----

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool scalar_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

bool matrix_like(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& r) {
           return scalar_array(r) && !r.empty();
         });
}

void render(std::ostream& os, const Json& obj, std::size_t indent);

void render_value(std::ostream& os, const std::string& key, const Json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (v.is_primitive()) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (matrix_like(v)) {
    os << pad << key << ":\n";
    std::vector<std::size_t> width;
    for (const auto& row : v)
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (width.size() <= j) width.push_back(0);
        width[j] = std::max(width[j], scalar_text(row[j]).size());
      }
    for (const auto& row : v) {
      os << pad << "  ";
      for (std::size_t j = 0; j < row.size(); ++j) {
        const std::string cell = scalar_text(row[j]);
        os << std::string(width[j] - cell.size(), ' ') << cell << (j + 1 < row.size() ? "  " : "");
      }
      os << '\n';
    }
  } else if (scalar_array(v)) {
    os << pad << key << ":";
    if (v.empty()) os << " (none)";
    for (const auto& x : v) os << ' ' << scalar_text(x);
    os << '\n';
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  } else {
    os << pad << key << ":\n";
    std::size_t k = 0;
    for (const auto& item : v) {
      ++k;
      if (item.is_object()) {
        os << pad << "  [" << k << "]\n";
        render(os, item, indent + 4);
      } else {
        render_value(os, "[" + std::to_string(k) + "]", item, indent + 2);
      }
    }
  }
}

void render(std::ostream& os, const Json& obj, std::size_t indent) {
  for (const auto& [key, v] : obj.items()) render_value(os, key, v, indent);
}

}  // namespace

Json AnalysisReport::to_json() const {
  Json out;
  out["command"] = command;
  out["inputs"] = inputs;
  out["status"] = status;
  out["results"] = results;
  out["warnings"] = warnings;
  if (!error.empty()) out["error"] = error;
  return out;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  for (const auto& in : inputs) {
    os << "input: " << in["file"].get<std::string>();
    os << " (" << in["domain"].get<std::string>() << ' ' << in["n"].get<std::size_t>() << ' '
       << in["mode"].get<std::string>() << ')';
    os << " digest " << in["digest"].get<std::string>() << '\n';
  }
  os << "status: " << status << '\n';
  render(os, results, 0);
  for (const auto& w : warnings) os << "warning: " << w << '\n';
  if (!error.empty()) os << "error: " << error << '\n';
  return os.str();
}

std::string usage() {
  Options opt;
  CLI::App app;
  build_app(app, opt);
  return app.help();
}

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  AnalysisReport& report = result.report;
  for (const auto& a : args) report.command += (report.command.empty() ? "" : " ") + a;

  Options opt;
  CLI::App app;
  build_app(app, opt);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    if (code != 0) {
      report.status = "error";
      report.error = e.what();
    }
    return result;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  opt.has_tol = app.get_option("--tol")->count() > 0;
  opt.has_seed = app.get_option("--seed")->count() > 0;
  opt.has_budget = app.get_option("--budget")->count() > 0;
  opt.has_theta = app.get_subcommand("threshold")->get_option("--theta")->count() > 0;
  Ctx ctx{opt, report};
  auto fail = [&](int code, const std::string& status, const std::string& message) {
    ctx.exit = code;
    report.status = status;
    if (status != "error") {
      report.results["reason"] = message;
    } else {
      report.error = message;
      result.err += "maxalg: " + message + '\n';
    }
  };
  try {
    dispatch(ctx, name);
  } catch (const UsageError& e) {
    fail(kUsage, "error", e.what());
  } catch (const ParseError& e) {
    fail(kUsage, "error", e.what());
  } catch (const ExactnessError& e) {
    fail(kExactness, "error", e.what());
  } catch (const ModeMismatch& e) {
    fail(kExactness, "error", e.what());
  } catch (const NotIrreducible& e) {
    fail(kNegative, "inapplicable", e.what());
  } catch (const AcyclicMatrix& e) {
    fail(kNegative, "inapplicable", e.what());
  } catch (const NotCommuting& e) {
    fail(kNegative, "inapplicable", e.what());
  } catch (const NotNormalized& e) {
    fail(kNegative, "inapplicable", e.what());
  } catch (const ZeroDiagonal& e) {
    fail(kNegative, "negative", e.what());
  } catch (const PatternViolation& e) {
    fail(kNegative, "negative", e.what());
  } catch (const CertificationFailure& e) {
    fail(kInternal, "error", e.what());
  } catch (const WitnessNotFound& e) {
    fail(kInternal, "error", e.what());
  } catch (const Error& e) {
    fail(kUsage, "error", e.what());
  }
  result.exit_code = ctx.exit;
  result.out = opt.json ? report.to_json().dump(2) + "\n" : report.to_text();
  return result;
}

}  // namespace maxalg::cli
