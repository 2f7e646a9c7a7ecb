#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcorr/boxes.hpp"
#include "qcorr/eig.hpp"
#include "qcorr/free_algebra.hpp"
#include "qcorr/interference.hpp"
#include "qcorr/nonlocality.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/random.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitScientific = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

// 17 significant digits round-trip doubles exactly, keeping reports
// byte-reproducible.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

// Insertion-ordered JSON object rendered on one line.
class JsonObject {
public:
  JsonObject& raw(const std::string& key, const std::string& rendered) {
    items_.emplace_back(key, rendered);
    return *this;
  }
  JsonObject& num(const std::string& key, double v) { return raw(key, fmt(v)); }
  JsonObject& num(const std::string& key, std::uint64_t v) {
    return raw(key, std::to_string(v));
  }
  JsonObject& num(const std::string& key, int v) {
    return raw(key, std::to_string(v));
  }
  JsonObject& boolean(const std::string& key, bool v) {
    return raw(key, v ? "true" : "false");
  }
  JsonObject& text(const std::string& key, const std::string& v) {
    return raw(key, json_quote(v));
  }
  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ',';
      out += json_quote(items_[i].first) + ":" + items_[i].second;
    }
    out += '}';
    return out;
  }

private:
  std::vector<std::pair<std::string, std::string>> items_;
};

std::string json_number_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt(v[i]);
  }
  out += ']';
  return out;
}

bool emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file " << path << "\n";
    return false;
  }
  f << text;
  return f.good();
}

std::string behavior_key(int k, int l, int x, int y) {
  const auto sgn = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
  return sgn(x) + "," + sgn(y) + "|" + std::to_string(k) + "," +
         std::to_string(l);
}

std::string behavior_json(const qcorr::BehaviorTable& t) {
  std::string out = "{";
  bool first = true;
  for (const int k : {1, 2})
    for (const int l : {1, 2})
      for (const int x : {1, -1})
        for (const int y : {1, -1}) {
          if (!first) out += ',';
          first = false;
          out += json_quote(behavior_key(k, l, x, y)) + ":" +
                 fmt(t.p(k, l, x, y));
        }
  out += '}';
  return out;
}

struct InterferenceArgs {
  std::size_t order = 3;
  std::size_t dim = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string sweep;
  double tol = -1.0;  // negative means per-order default
  std::string output;
};

int run_interference(const InterferenceArgs& args) {
  if (args.dim < args.order) {
    std::cerr << "interference: --dim must be at least --order (need "
              << args.order << " orthogonal nonzero slits)\n";
    return kExitUsage;
  }
  const double tol =
      args.tol >= 0.0 ? args.tol : (args.order == 3 ? 1e-10 : 1e-9);

  std::ostringstream out;
  double max_abs = 0.0;
  if (!args.sweep.empty()) {
    const std::vector<double> grid = qcorr::phase_grid();
    const qcorr::SlitFamily family = [&](double phi) {
      return qcorr::phase_slit_configuration(args.order, args.dim, phi);
    };
    const std::vector<qcorr::SweepPoint> rows =
        qcorr::interference_sweep(family, grid, args.order);
    out << "parameter,value\n";
    for (const qcorr::SweepPoint& row : rows) {
      out << fmt(row.parameter) << ',' << fmt(row.value) << '\n';
      max_abs = std::max(max_abs, std::abs(row.value));
    }
  } else {
    std::vector<double> vals(args.samples, 0.0);
    qcorr::parallel_for(args.samples, [&](std::size_t i) {
      qcorr::Stream g = qcorr::Stream::for_sample(args.seed, i);
      const qcorr::SlitConfiguration cfg =
          qcorr::random_slit_configuration(args.dim, args.order, g);
      vals[i] = qcorr::sorkin_term(cfg, args.order);
    });
    out << "sample,value\n";
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const double v = std::abs(vals[i]);
      out << i << ',' << fmt(v) << '\n';
      max_abs = std::max(max_abs, v);
    }
  }

  if (!emit(out.str(), args.output)) return kExitUsage;
  if (args.order >= 3 && max_abs > tol) {
    std::cerr << "interference: max |I_" << args.order << "| = " << fmt(max_abs)
              << " exceeds tolerance " << fmt(tol) << "\n";
    return kExitScientific;
  }
  return kExitOk;
}

struct ChshArgs {
  std::string mode;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t max_iters = 500;
  std::size_t samples = 1000;
  std::string output;
};

int run_chsh(const ChshArgs& args) {
  if (args.mode == "classical") {
    const qcorr::ClassicalMax m = qcorr::classical_max();
    JsonObject strategy;
    strategy.num("a1", m.strategy.a1)
        .num("a2", m.strategy.a2)
        .num("b1", m.strategy.b1)
        .num("b2", m.strategy.b2);
    JsonObject report;
    report.text("mode", "classical")
        .num("value", m.value)
        .raw("strategy", strategy.str())
        .num("strategies_searched", 16);
    if (!emit(report.str() + "\n", args.output)) return kExitUsage;
    return kExitOk;
  }

  if (args.mode == "seesaw") {
    const qcorr::SeesawResult res = qcorr::seesaw_optimize(
        args.dim, args.dim, args.seed, args.tol, args.max_iters);
    JsonObject report;
    report.text("mode", "seesaw")
        .num("dim_a", args.dim)
        .num("dim_b", args.dim)
        .num("seed", args.seed)
        .num("tol", args.tol)
        .num("max_iters", args.max_iters)
        .num("value", res.value)
        .num("iterations", res.iterations)
        .boolean("converged", res.converged)
        .raw("value_trace", json_number_array(res.trace))
        .num("tsirelson_bound", qcorr::kTsirelsonBound);
    if (!emit(report.str() + "\n", args.output)) return kExitUsage;
    return res.converged ? kExitOk : kExitNoConvergence;
  }

  // scan
  const qcorr::ScanReport res =
      qcorr::scan_scenarios(args.samples, args.dim, args.dim, args.seed);
  JsonObject report;
  report.text("mode", "scan")
      .num("seed", res.seed)
      .num("samples", res.samples)
      .num("dim_a", res.dim_a)
      .num("dim_b", res.dim_b)
      .num("max_witnessed", res.max_value)
      .num("bound", res.bound)
      .boolean("pass", res.pass);
  if (!emit(report.str() + "\n", args.output)) return kExitUsage;
  return res.pass ? kExitOk : kExitScientific;
}

struct IdentityArgs {
  std::string mode = "both";
  std::size_t dim = 4;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::string output;
};

void render_sos_report(std::ostream& out, const qcorr::SosReport& report,
                       bool flipped) {
  out << "sum-of-squares identity, "
      << (flipped ? "sign-flipped orientation (a1 -> -a1, a2 -> -a2)"
                  : "standard orientation")
      << "\n";
  for (const qcorr::SosSlot& slot : report.slots) {
    out << "  " << slot.monomial.to_string() << ": lhs = "
        << slot.lhs.to_string() << ", rhs = " << slot.rhs.to_string()
        << ", diff = " << slot.diff.to_string() << "\n";
  }
  out << "  identity holds: " << (report.identity_holds ? "yes" : "no")
      << "\n";
}

int run_identity(const IdentityArgs& args) {
  std::ostringstream out;
  bool failed = false;

  if (args.mode == "exact" || args.mode == "both") {
    for (const bool flip : {false, true}) {
      const qcorr::SosReport report = qcorr::verify_sos_identity(flip);
      render_sos_report(out, report, flip);
      if (!report.identity_holds) failed = true;
    }
  }

  if (args.mode == "numeric" || args.mode == "both") {
    const qcorr::InequalityReport report =
        qcorr::verify_inequality_numeric(args.samples, args.dim, args.seed);

    // The embedded optimal qubit observables saturate the bound; their
    // symmetrized operator doubles the Bell operator's top eigenvalue.
    const qcorr::ObservableQuad quad =
        qcorr::embedded_optimal_qubit_observables();
    const qcorr::HermitianMatrix t =
        qcorr::symmetrized_chsh_operator(quad.a1, quad.a2, quad.b1, quad.b2);
    const double witness = qcorr::max_eigenvalue(t);
    const bool witness_ok = std::abs(witness - report.bound) <= 1e-6;

    JsonObject j;
    j.text("mode", "numeric")
        .num("seed", report.seed)
        .num("samples", report.samples)
        .num("dim", report.dim)
        .num("max_witnessed", report.max_witnessed)
        .num("bound", report.bound)
        .num("saturation_witness", witness)
        .boolean("pass", report.pass && witness_ok);
    out << j.str() << "\n";
    if (!report.pass || !witness_ok) failed = true;
  }

  if (!emit(out.str(), args.output)) return kExitUsage;
  return failed ? kExitScientific : kExitOk;
}

struct BoxesArgs {
  std::string box;
  std::string output;
};

std::optional<qcorr::BehaviorTable> load_box_file(const std::string& path,
                                                  std::string& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err = "cannot read " + path;
    return std::nullopt;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    err = std::string("JSON parse error: ") + e.what();
    return std::nullopt;
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_object()) {
    err = "table file must be an object with a \"p\" object";
    return std::nullopt;
  }
  const nlohmann::json& p = doc["p"];
  std::array<double, 16> raw{};
  std::set<std::string> expected;
  for (const int k : {1, 2})
    for (const int l : {1, 2})
      for (const int x : {1, -1})
        for (const int y : {1, -1}) {
          const std::string key = behavior_key(k, l, x, y);
          expected.insert(key);
          if (!p.contains(key)) {
            err = "missing entry \"" + key + "\"";
            return std::nullopt;
          }
          if (!p[key].is_number()) {
            err = "entry \"" + key + "\" is not a number";
            return std::nullopt;
          }
          raw[qcorr::BehaviorTable::index(k, l, x, y)] = p[key].get<double>();
        }
  for (const auto& [key, value] : p.items())
    if (!expected.count(key)) {
      err = "unknown entry \"" + key + "\"";
      return std::nullopt;
    }
  try {
    return qcorr::BehaviorTable::from_array(raw);
  } catch (const std::exception& e) {
    err = e.what();
    return std::nullopt;
  }
}

int run_boxes(const BoxesArgs& args) {
  std::optional<qcorr::BehaviorTable> table;
  std::string label = args.box;
  if (args.box == "pr") {
    table = qcorr::BehaviorTable::pr_box();
  } else if (args.box == "local") {
    table = qcorr::BehaviorTable::deterministic({+1, +1, +1, +1});
  } else if (args.box.rfind("mixed:", 0) == 0) {
    double lambda = -1.0;
    try {
      std::size_t used = 0;
      const std::string arg = args.box.substr(6);
      lambda = std::stod(arg, &used);
      if (used != arg.size()) lambda = -1.0;
    } catch (const std::exception&) {
      lambda = -1.0;
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      std::cerr << "boxes: mixed:LAMBDA needs a weight in [0, 1]\n";
      return kExitUsage;
    }
    table = qcorr::BehaviorTable::mix(qcorr::BehaviorTable::pr_box(),
                                      qcorr::BehaviorTable::uniform(), lambda);
  } else if (args.box.rfind("file:", 0) == 0) {
    std::string err;
    table = load_box_file(args.box.substr(5), err);
    if (!table) {
      std::cerr << "boxes: invalid table: " << err << "\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "boxes: --box must be pr, local, mixed:LAMBDA, or file:PATH\n";
    return kExitUsage;
  }

  JsonObject correlators;
  correlators.num("E11", table->correlator(1, 1))
      .num("E12", table->correlator(1, 2))
      .num("E21", table->correlator(2, 1))
      .num("E22", table->correlator(2, 2));
  JsonObject report;
  report.text("box", label)
      .raw("p", behavior_json(*table))
      .raw("correlators", correlators.str())
      .num("chsh", qcorr::behavior_chsh(*table))
      .boolean("no_signaling", true)
      .text("classification",
            qcorr::to_string(qcorr::classify_behavior(*table)));
  if (!emit(report.str() + "\n", args.output)) return kExitUsage;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional quantum correlation workbench"};
  app.require_subcommand(1);

  InterferenceArgs iargs;
  CLI::App* interference =
      app.add_subcommand("interference", "Sorkin interference terms I_n");
  interference->add_option("--order", iargs.order, "interference order n")
      ->required()
      ->check(CLI::IsMember({2, 3, 4, 5}));
  interference->add_option("--dim", iargs.dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  interference->add_option("--samples", iargs.samples,
                           "random configurations to sample");
  interference->add_option("--seed", iargs.seed, "RNG seed");
  interference->add_option("--sweep", iargs.sweep, "sweep a parametrized family")
      ->check(CLI::IsMember({"phase"}));
  interference->add_option("--tol", iargs.tol,
                           "nullity tolerance for orders >= 3");
  interference->add_option("--output", iargs.output,
                           "write to file instead of stdout");

  ChshArgs cargs;
  CLI::App* chsh = app.add_subcommand("chsh", "CHSH correlation models");
  chsh->add_option("--mode", cargs.mode, "classical | seesaw | scan")
      ->required()
      ->check(CLI::IsMember({"classical", "seesaw", "scan"}));
  chsh->add_option("--dim", cargs.dim, "local dimension for both parties")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  chsh->add_option("--seed", cargs.seed, "RNG seed");
  chsh->add_option("--tol", cargs.tol, "seesaw improvement tolerance");
  chsh->add_option("--max-iters", cargs.max_iters, "seesaw iteration cap");
  chsh->add_option("--samples", cargs.samples, "scenarios for scan mode");
  chsh->add_option("--output", cargs.output, "write to file instead of stdout");

  IdentityArgs idargs;
  CLI::App* identity =
      app.add_subcommand("identity", "operator inequality verification");
  identity->add_option("--mode", idargs.mode, "exact | numeric | both")
      ->check(CLI::IsMember({"exact", "numeric", "both"}));
  identity->add_option("--dim", idargs.dim, "matrix dimension for sampling")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  identity->add_option("--samples", idargs.samples, "random quadruples");
  identity->add_option("--seed", idargs.seed, "RNG seed");
  identity->add_option("--output", idargs.output,
                       "write to file instead of stdout");

  BoxesArgs bargs;
  CLI::App* boxes = app.add_subcommand("boxes", "behavior tables");
  boxes->add_option("--box", bargs.box, "pr | local | mixed:LAMBDA | file:PATH")
      ->required();
  boxes->add_option("--output", bargs.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*interference) return run_interference(iargs);
    if (*chsh) return run_chsh(cargs);
    if (*identity) return run_identity(idargs);
    if (*boxes) return run_boxes(bargs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScientific;
  }
  return kExitUsage;
}
