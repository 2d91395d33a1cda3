#include "cli.hpp"

#include "phaselab/algebra/conjecture.hpp"
#include "phaselab/algebra/hilbert.hpp"
#include "phaselab/algebra/incidence.hpp"
#include "phaselab/ambiguity.hpp"
#include "phaselab/combinat.hpp"
#include "phaselab/io.hpp"
#include "phaselab/measure.hpp"
#include "phaselab/numerics.hpp"
#include "phaselab/selftest.hpp"
#include "phaselab/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace phaselab::cli {
namespace {

using nlohmann::json;
constexpr const char* kSchema = "phaselab/1";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Outcome() = default;
  Outcome(json doc, int exit_code = 0) : document(std::move(doc)), code(exit_code) {}  // NOLINT

  json document;
  int code = 0;
  std::string csv;  ///< used instead of document when non-empty
};

struct Config {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  double eq_tol = 1e-9;
  double rank_tol = 1e-8;
  unsigned workers = 0;

  Tolerances tolerances() const {
    Tolerances t{eq_tol, rank_tol};
    t.validate();
    return t;
  }
};

std::optional<std::chrono::steady_clock::time_point> env_deadline() {
  const char* raw = std::getenv("PHASELAB_BUDGET_MS");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const long long ms = std::strtoll(raw, &end, 10);
  if (*end != '\0' || ms < 0) throw UsageError("PHASELAB_BUDGET_MS must be a non-negative integer");
  return std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
}

json complex_matrix_json(const Eigen::MatrixXcd& m) {
  auto out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(io::signal_to_json(m.row(r).transpose()));
  return out;
}

FrogIndexing parse_indexing(const std::string& s) {
  if (s == "periodic") return FrogIndexing::Periodic;
  if (s == "aperiodic") return FrogIndexing::Aperiodic;
  throw UsageError("--indexing must be periodic or aperiodic");
}

StftConfig stft_config(const std::string& window_path, int n, int hop) {
  if (window_path.empty()) throw UsageError("--window is required for this model");
  StftConfig cfg{io::read_signal(window_path), n, hop};
  cfg.validate();
  return cfg;
}

// measure ------------------------------------------------------------------

struct MeasureArgs {
  std::string model;
  std::string input;
  std::string matrix;
  std::string window;
  int hop = 1;
  double theta = 0.0;
  std::string indexing = "periodic";
};

Outcome run_measure(const MeasureArgs& a) {
  const Signal x = io::read_signal(a.input);
  const int n = static_cast<int>(x.size());
  json result;
  if (a.model == "linear") {
    if (a.matrix.empty()) throw UsageError("--matrix is required for --model linear");
    result = io::signal_to_json(phaseless_linear(io::read_matrix(a.matrix), x).cast<Complex>());
  } else if (a.model == "pac") {
    result = io::signal_to_json(periodic_autocorr(x));
  } else if (a.model == "apac") {
    result = io::signal_to_json(aperiodic_autocorr(x));
  } else if (a.model == "intensity") {
    result = fourier_intensity(x, a.theta);
  } else if (a.model == "stft") {
    result = io::matrix_to_json(stft_phaseless(x, stft_config(a.window, n, a.hop)));
  } else if (a.model == "blindstft") {
    const auto cfg = stft_config(a.window, n, a.hop);
    result = complex_matrix_json(blind_stft(x, cfg.window, cfg));
  } else if (a.model == "gabor") {
    if (a.window.empty()) throw UsageError("--window is required for --model gabor");
    result = io::signal_to_json((gabor_sensing_matrix(io::read_signal(a.window)) * x).cwiseAbs().cast<Complex>());
  } else if (a.model == "frog") {
    result = io::matrix_to_json(frog(x, a.hop, parse_indexing(a.indexing)));
  } else {
    throw UsageError("unknown model '" + a.model + "'");
  }
  return {{{"model", a.model}, {"result", result}}};
}

// orbit / ambiguities --------------------------------------------------------

Outcome run_orbit(const std::string& x_path, const std::string& y_path, const std::string& group, double tol) {
  const auto tag = parse_group_tag(group);
  const auto m = orbit_equivalent(io::read_signal(x_path), io::read_signal(y_path), tag, tol);
  json doc{{"group", to_string(tag)},
           {"equivalent", m.equivalent},
           {"residual", m.residual},
           {"witness", m.equivalent ? json(m.witness.describe()) : json(nullptr)}};
  return {doc, m.equivalent ? 0 : 1};
}

Outcome run_ambiguities(const std::string& input, std::size_t max_classes, double tol) {
  AmbiguityOptions opts;
  opts.max_classes = max_classes;
  opts.dedup_tol = tol;
  const auto report = enumerate_ambiguities(io::read_signal(input), opts);
  auto reps = json::array();
  for (std::size_t i = 0; i < report.representatives.size(); ++i)
    reps.push_back({{"signal", io::signal_to_json(report.representatives[i])}, {"flipped", report.flip_sets[i]}});
  Signal roots(static_cast<Eigen::Index>(report.roots.size()));
  for (std::size_t i = 0; i < report.roots.size(); ++i) roots(static_cast<Eigen::Index>(i)) = report.roots[i];
  return {{{"representatives", reps},
           {"count", report.representatives.size()},
           {"roots", io::signal_to_json(roots)},
           {"degenerate", report.degenerate},
           {"truncated", report.truncated},
           {"notes", report.notes}}};
}

// combinatorics --------------------------------------------------------------

Outcome run_diffset(const std::string& s_text, int n) {
  const SupportSet s = io::parse_support(s_text, n);
  const auto d = difference_multiset(s);
  return {{{"S", io::support_to_json(s)},
           {"N", n},
           {"counts", d.counts},
           {"multiset", d.to_string()},
           {"distinct", d.distinct()},
           {"canonical", io::support_to_json(dihedral_canonical(s))},
           {"stabilizer", stabilizer_order(s)}}};
}

std::string classes_cell(const std::vector<SupportSet>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < classes[i].indices().size(); ++j)
      s += (j ? " " : "") + std::to_string(classes[i].indices()[j]);
  }
  return s;
}

Outcome run_census(int n, int k, std::size_t max_classes, const std::string& format) {
  const auto report = collision_census(n, k, max_classes);
  Outcome o;
  if (format == "csv") {
    std::ostringstream os;
    os << "multiset,num_classes,classes\n";
    for (const auto& g : report.groups)
      os << '"' << g.multiset.to_string() << "\"," << g.classes.size() << ",\"" << classes_cell(g.classes) << "\"\n";
    o.csv = os.str();
  }
  auto groups = json::array();
  for (const auto& g : report.groups) {
    auto classes = json::array();
    for (const auto& c : g.classes) classes.push_back(io::support_to_json(c));
    groups.push_back({{"multiset", g.multiset.to_string()}, {"counts", g.multiset.counts}, {"classes", classes}});
  }
  o.document = {{"N", n},
                {"K", k},
                {"num_classes", report.num_classes},
                {"num_colliding_pairs", report.num_colliding_pairs},
                {"num_colliding_classes", report.num_colliding_classes},
                {"proportion", report.proportion},
                {"partial", report.partial},
                {"groups", groups}};
  if (report.partial) o.code = 1;
  return o;
}

Outcome run_complement(const std::string& path, const Tolerances& tol) {
  const SensingMatrix a = io::read_matrix(path);
  if (a.field != Field::Real) throw std::invalid_argument("complement: matrix must be real");
  const auto r = complement_property(a.real_part(), tol);
  return {{{"pass", r.holds}, {"witness", r.holds ? json(nullptr) : json(r.witness)}, {"exact", r.exact}}};
}

// conjecture ------------------------------------------------------------------

json pair_json(const algebra::SupportPairReport& p) {
  json j{{"S", io::support_to_json(p.first)}, {"S'", io::support_to_json(p.second)}};
  if (!p.error.empty()) {
    j["error"] = p.error;
    return j;
  }
  j["hilbert_coeffs"] = p.hilbert.coeffs;
  j["hilbert"] = p.hilbert.to_string();
  j["dim"] = p.affine_dim;
  j["degree"] = p.degree;
  j["pass"] = p.pass;
  return j;
}

json signal_json(const algebra::SignalConjectureReport& r) {
  json j{{"S", io::support_to_json(r.support)}, {"skipped", r.skipped}};
  if (r.skipped) {
    j["reason"] = r.reason;
    return j;
  }
  j["hilbert_coeffs"] = r.hilbert.coeffs;
  j["hilbert"] = r.hilbert.to_string();
  j["dim"] = r.affine_dim;
  j["degree"] = r.degree;
  j["stabilizer"] = r.stabilizer;
  j["expected_degree"] = r.expected_degree;
  j["pass"] = r.pass;
  return j;
}

struct ConjectureArgs {
  std::string mode;
  int n = 0;
  int k = 0;
  std::string s;
  std::string s2;
  std::size_t budget = 0;
  bool strict = false;
};

Outcome run_conjecture(const ConjectureArgs& a, const Config& cfg) {
  if (a.n < 1) throw UsageError("--N is required");
  algebra::SweepBudget budget;
  budget.max_items = a.budget;
  budget.deadline = env_deadline();
  budget.groebner.deadline = budget.deadline;
  budget.workers = cfg.workers;

  if (a.mode == "signal") {
    if (!a.s.empty()) {
      const auto r = algebra::check_signal_conjecture(io::parse_support(a.s, a.n), budget.groebner);
      json doc = signal_json(r);
      doc["mode"] = "signal";
      doc["N"] = a.n;
      return {doc, r.skipped || r.pass ? 0 : 1};
    }
    if (a.k < 1) throw UsageError("--mode signal needs --S or --K");
    const auto r = algebra::check_signal_sweep(a.n, a.k, budget);
    auto sets = json::array();
    for (const auto& s : r.sets) sets.push_back(signal_json(s));
    json doc{{"mode", "signal"}, {"N", a.n},         {"K", a.k},          {"sets", sets},
             {"skipped", r.skipped}, {"partial", r.partial}, {"all_pass", r.all_pass}};
    return {doc, r.partial || !r.all_pass ? 1 : 0};
  }
  if (a.mode == "support") {
    if (!a.s.empty() || !a.s2.empty()) {
      if (a.s.empty() || a.s2.empty()) throw UsageError("--mode support with sets needs both --S and --S2");
      const SupportSet s = io::parse_support(a.s, a.n);
      const SupportSet s2 = io::parse_support(a.s2, a.n);
      algebra::SupportPairReport p;
      p.first = s;
      p.second = s2;
      p.hilbert = algebra::hilbert_polynomial(algebra::incidence_ideal(s, s2), budget.groebner);
      p.affine_dim = p.hilbert.affine_dimension();
      p.degree = p.hilbert.degree();
      p.pass = p.affine_dim < static_cast<int>(s.size());
      json doc = pair_json(p);
      doc["mode"] = "support";
      doc["N"] = a.n;
      return {doc, p.pass ? 0 : 1};
    }
    if (a.k < 1) throw UsageError("--mode support needs --K or --S/--S2");
    const auto r = algebra::check_support_conjecture(
        a.n, a.k, budget, a.strict ? algebra::SupportQualifier::MoreThanK : algebra::SupportQualifier::AtLeastK);
    auto pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back(pair_json(p));
    json doc{{"mode", "support"},
             {"N", a.n},
             {"K", a.k},
             {"qualifier", a.strict ? "|S-S| > K" : "|S-S| >= K"},
             {"classes", r.classes},
             {"qualifying_classes", r.qualifying_classes},
             {"pairs", pairs},
             {"partial", r.partial},
             {"all_pass", r.all_pass}};
    return {doc, r.partial || !r.all_pass ? 1 : 0};
  }
  throw UsageError("--mode must be support or signal");
}

// probe -------------------------------------------------------------------------

struct ProbeArgs {
  std::string model = "linear";
  std::string input;
  std::string matrix;
  std::string window;
  int hop = 1;
  std::string indexing = "periodic";
  std::string field;
  std::string group;
  int restarts = 200;
};

Outcome run_probe(const ProbeArgs& a, const Config& cfg) {
  const Signal x = io::read_signal(a.input);
  const bool real_ref = (x.imag().array() == 0.0).all();
  std::optional<Field> field;
  if (a.field == "real") field = Field::Real;
  else if (a.field == "complex") field = Field::Complex;
  else if (!a.field.empty()) throw UsageError("--field must be real or complex");

  auto pick = [&](Field fallback) { return field.value_or(fallback); };
  std::optional<ResidualMap> map;
  if (a.model == "linear") {
    if (a.matrix.empty()) throw UsageError("--matrix is required for --model linear");
    SensingMatrix m = io::read_matrix(a.matrix);
    m.field = pick(m.field == Field::Real && real_ref ? Field::Real : Field::Complex);
    map = ResidualMap::linear(m, x);
  } else if (a.model == "stft") {
    map = ResidualMap::stft(stft_config(a.window, static_cast<int>(x.size()), a.hop), x, pick(Field::Complex));
  } else if (a.model == "gabor") {
    if (a.window.empty()) throw UsageError("--window is required for --model gabor");
    map = ResidualMap::gabor(io::read_signal(a.window), x, pick(Field::Complex));
  } else if (a.model == "frog") {
    map = ResidualMap::frog(a.hop, x, pick(Field::Complex), parse_indexing(a.indexing));
  } else {
    throw UsageError("unknown probe model '" + a.model + "'");
  }
  if (map->unknowns() == Field::Real && !real_ref) throw UsageError("real unknowns need a real reference signal");

  GroupTag tag;
  if (!a.group.empty())
    tag = parse_group_tag(a.group);
  else if (a.model == "frog")
    tag = GroupTag::PhaseConjReflect;
  else
    tag = map->unknowns() == Field::Real ? GroupTag::Sign : GroupTag::Phase;

  CollisionOptions opts;
  opts.restarts = a.restarts;
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  const auto r = collision_search(*map, x, tag, opts);
  return {{{"model", a.model},
           {"group", to_string(tag)},
           {"restarts", a.restarts},
           {"found", r.found},
           {"candidate", r.found ? io::signal_to_json(r.candidate) : json(nullptr)},
           {"residual", r.found ? json(r.residual) : json(nullptr)},
           {"orbit_equivalent", r.orbit_equivalent},
           {"restart", r.restart},
           {"converged", r.converged},
           {"equivalent", r.equivalent},
           {"best_residual", r.best_residual}}};
}

Outcome run_selftest_cmd(const Tolerances& tol) {
  const auto cases = run_selftest(tol);
  auto arr = json::array();
  bool all = true;
  for (const auto& c : cases) {
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    all = all && c.pass;
  }
  return {{{"cases", arr}, {"pass", all}}, all ? 0 : 1};
}

json error_json(const std::string& kind, const std::string& message, std::uint64_t seed) {
  return {{"schema", kSchema}, {"seed", seed}, {"error", {{"kind", kind}, {"message", message}}}};
}

int emit(const Outcome& o, const Config& cfg, std::ostream& out) {
  std::string text;
  if (!o.csv.empty()) {
    text = "# schema=" + std::string(kSchema) + " seed=" + std::to_string(cfg.seed) + "\n" + o.csv;
  } else {
    json doc = o.document;
    doc["schema"] = kSchema;
    doc["seed"] = cfg.seed;
    text = doc.dump(2) + "\n";
  }
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw io::InputError("cannot write " + cfg.out);
    f << text;
  }
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase retrieval toolkit: measurement models, ambiguities, supports and incidence ideals.", "phaselab"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomized procedures")->capture_default_str();
  app.add_option("--out", cfg.out, "Write the result to this file instead of standard output");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--eq-tol", cfg.eq_tol, "Equality tolerance")->capture_default_str();
  app.add_option("--rank-tol", cfg.rank_tol, "Relative rank tolerance")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (0 = hardware concurrency)");

  std::function<Outcome()> action;

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Evaluate a measurement model on a signal");
  m->add_option("--model", measure.model)
      ->required()
      ->check(CLI::IsMember({"linear", "pac", "apac", "intensity", "stft", "blindstft", "gabor", "frog"}));
  m->add_option("--input", measure.input, "Signal JSON")->required();
  m->add_option("--matrix", measure.matrix, "Sensing matrix (CSV or .json)");
  m->add_option("--window", measure.window, "Window signal JSON (stft, blindstft, gabor)");
  m->add_option("--hop", measure.hop, "Hop L (stft, blindstft, frog)")->capture_default_str();
  m->add_option("--theta", measure.theta, "Angle for intensity")->capture_default_str();
  m->add_option("--indexing", measure.indexing, "FROG indexing")->capture_default_str();
  m->callback([&] { action = [&] { return run_measure(measure); }; });

  std::string ox, oy, group = "sign";
  double otol = 1e-9;
  auto* o = app.add_subcommand("orbit", "Test whether two signals are related by a group element");
  o->add_option("--x", ox, "First signal JSON")->required();
  o->add_option("--y", oy, "Second signal JSON")->required();
  o->add_option("--group", group, "sign | phase | sign-dihedral | phase-conjreflect")->capture_default_str();
  o->add_option("--tol", otol, "Relative residual tolerance")->capture_default_str();
  o->callback([&] { action = [&] { return run_orbit(ox, oy, group, otol); }; });

  std::string amb_input;
  std::size_t amb_max = 0;
  double amb_tol = 1e-7;
  auto* am = app.add_subcommand("ambiguities", "Enumerate root-flip ambiguity classes of a signal");
  am->add_option("--input", amb_input, "Signal JSON")->required();
  am->add_option("--max-classes", amb_max, "Cap on classes (0 = none)")->capture_default_str();
  am->add_option("--tol", amb_tol, "Deduplication tolerance")->capture_default_str();
  am->callback([&] { action = [&] { return run_ambiguities(amb_input, amb_max, amb_tol); }; });

  std::string ds;
  int dn = 0;
  auto* d = app.add_subcommand("diffset", "Cyclic difference multiset of a support set");
  d->add_option("--S", ds, "Comma-separated indices")->required();
  d->add_option("--N", dn, "Ambient length")->required();
  d->callback([&] { action = [&] { return run_diffset(ds, dn); }; });

  int cn = 0, ck = 0;
  std::size_t cmax = 0;
  auto* c = app.add_subcommand("census", "Difference-multiset collisions among dihedral classes");
  c->add_option("--N", cn)->required();
  c->add_option("--K", ck)->required();
  c->add_option("--max-classes", cmax, "Cap on classes (0 = none)")->capture_default_str();
  c->callback([&] { action = [&] { return run_census(cn, ck, cmax, cfg.format); }; });

  std::string cm;
  auto* cp = app.add_subcommand("complement", "Complement property of a real matrix");
  cp->add_option("--matrix", cm, "Matrix (CSV or .json)")->required();
  cp->callback([&] { action = [&] { return run_complement(cm, cfg.tolerances()); }; });

  ConjectureArgs conj;
  auto* cj = app.add_subcommand("conjecture", "Incidence-ideal dimension checks");
  cj->add_option("--mode", conj.mode)->required()->check(CLI::IsMember({"support", "signal"}));
  cj->add_option("--N", conj.n)->required();
  cj->add_option("--K", conj.k, "Sweep all K-subsets");
  cj->add_option("--S", conj.s, "Single support set");
  cj->add_option("--S2", conj.s2, "Second support set (support mode)");
  cj->add_option("--budget", conj.budget, "Cap on pairs or sets tested (0 = none)")->capture_default_str();
  cj->add_flag("--strict", conj.strict, "Support mode: test only pairs with |S-S| > K");
  cj->callback([&] { action = [&] { return run_conjecture(conj, cfg); }; });

  ProbeArgs probe;
  auto* p = app.add_subcommand("probe", "Search for non-equivalent collisions by damped least squares");
  p->add_option("--model", probe.model)->check(CLI::IsMember({"linear", "stft", "gabor", "frog"}))->capture_default_str();
  p->add_option("--input", probe.input, "Reference signal JSON")->required();
  p->add_option("--matrix", probe.matrix, "Sensing matrix (linear)");
  p->add_option("--window", probe.window, "Window signal JSON (stft, gabor)");
  p->add_option("--hop", probe.hop)->capture_default_str();
  p->add_option("--indexing", probe.indexing, "FROG indexing")->capture_default_str();
  p->add_option("--field", probe.field, "real | complex unknowns");
  p->add_option("--group", probe.group, "Group for the equivalence filter");
  p->add_option("--restarts", probe.restarts)->capture_default_str();
  p->callback([&] { action = [&] { return run_probe(probe, cfg); }; });

  auto* st = app.add_subcommand("selftest", "Run the worked-example regression suite");
  st->callback([&] { action = [&] { return run_selftest_cmd(cfg.tolerances()); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_json("usage", e.what(), cfg.seed).dump(2) << "\n";
    return 2;
  }

  try {
    return emit(action(), cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    out << error_json("usage", e.what(), cfg.seed).dump(2) << "\n";
    return 2;
  } catch (const io::InputError& e) {
    err << "input error: " << e.what() << "\n";
    out << error_json("input", e.what(), cfg.seed).dump(2) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    out << error_json("usage", e.what(), cfg.seed).dump(2) << "\n";
    return 2;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << "\n";
    out << error_json("computation", e.what(), cfg.seed).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << error_json("internal", e.what(), cfg.seed).dump(2) << "\n";
    return 1;
  }
}

}  // namespace phaselab::cli
