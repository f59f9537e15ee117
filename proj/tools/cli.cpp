#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <tuple>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "limitcheeger/gallery.hpp"
#include "limitcheeger/graphing.hpp"
#include "limitcheeger/io.hpp"
#include "limitcheeger/rng.hpp"
#include "limitcheeger/spectral.hpp"

namespace limitcheeger::cli {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIMIT_CHEEGER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw input_error("LIMIT_CHEEGER_SEED is not an integer");
    }
  }
  return 0;
}

struct GraphonInput {
  std::string graph_path;
  std::string graphon_path;
  std::string gallery;
  int level = 8;

  void attach(CLI::App* cmd, bool with_graph = true) {
    if (with_graph) cmd->add_option("--graph", graph_path, "weighted graph text file");
    cmd->add_option("--graphon", graphon_path, "step graphon JSON file");
    cmd->add_option("--gallery", gallery,
                    "gallery name: constant:p | k2 | wn:n | sqrt-leaf | vanishing:D");
    cmd->add_option("--level", level,
                    "dyadic approximation level for analytic gallery graphons");
  }
};

// Resolves a gallery name to either an exact step graphon or an analytic
// graphon to be step-approximated.
struct GalleryEntry {
  std::optional<StepGraphon> step;
  std::optional<AnalyticGraphon> analytic;
};

GalleryEntry parse_gallery(const std::string& name) {
  GalleryEntry out;
  auto num_after = [&](const std::string& prefix) {
    const std::string tail = name.substr(prefix.size());
    try {
      return std::stod(tail);
    } catch (const std::exception&) {
      throw input_error("gallery: bad parameter in '" + name + "'");
    }
  };
  if (name == "k2") {
    out.step = k2_graphon();
  } else if (name.rfind("constant:", 0) == 0) {
    out.step = constant_graphon(num_after("constant:"));
  } else if (name.rfind("wn:", 0) == 0) {
    out.step = counterexample_wn(static_cast<int>(num_after("wn:")));
  } else if (name == "sqrt-leaf") {
    out.analytic = sqrt_neighborhood();
  } else if (name.rfind("vanishing:", 0) == 0) {
    out.analytic = vanishing_cheeger(static_cast<int>(num_after("vanishing:")));
  } else {
    throw input_error("gallery: unknown name '" + name + "'");
  }
  return out;
}

StepGraphon resolve_graphon(const GraphonInput& in, json* meta) {
  int sources = 0;
  sources += !in.graphon_path.empty();
  sources += !in.gallery.empty();
  if (sources != 1)
    throw input_error("need exactly one of --graphon or --gallery");
  if (!in.graphon_path.empty()) {
    (*meta)["source"] = in.graphon_path;
    return parse_graphon_json(load_file(in.graphon_path));
  }
  (*meta)["gallery"] = in.gallery;
  const GalleryEntry entry = parse_gallery(in.gallery);
  if (entry.step) return *entry.step;
  (*meta)["level"] = in.level;
  const AnalyticOracle oracle(*entry.analytic);
  return conditional_step(oracle, in.level);
}

json witness_json(const CheegerReport& r) {
  json w;
  w["rho"] = r.rho;
  if (r.witness_set) w["set"] = format_interval_set(*r.witness_set);
  return w;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int run_cheeger(const GraphonInput& in, const std::string& mode, std::uint64_t seed,
                int starts, bool require_certified, int doubling,
                const std::string& set_text, const std::string& format,
                std::ostream& out) {
  CheegerOptions opt;
  opt.seed = seed;
  opt.starts = starts;
  json j;
  j["command"] = "cheeger";
  j["seed"] = seed;
  j["starts"] = starts;

  auto enforce_certified = [&](const CheegerReport& rep) {
    if (require_certified && !rep.certified)
      throw input_error(
          "--certify: result is not certifiable (exact enumeration or a grid "
          "oracle covers at most 24 vertices / 4 fractional variables)");
  };

  if (!in.graph_path.empty()) {
    const WeightedGraph g = parse_graph_text(load_file(in.graph_path));
    j["source"] = in.graph_path;
    CheegerReport rep;
    if (mode == "integral")
      rep = integral_cheeger(g);
    else if (mode == "symmetric")
      rep = symmetric_cheeger_graph(g, opt);
    else
      rep = fractional_cheeger(g, opt);
    enforce_certified(rep);
    j["mode"] = mode;
    j["value"] = rep.value;
    j["witness"] = witness_json(rep);
    j["method"] = rep.method;
    j["certified"] = rep.certified;
    emit(out, j);
    return kExitOk;
  }

  const StepGraphon w = resolve_graphon(in, &j);
  if (doubling >= 0) {
    IntervalSet a0 = set_text.empty() ? parse_interval_set("0:0.5")
                                      : parse_interval_set(set_text);
    const auto rows = doubling_demo(w, a0, doubling);
    if (format == "csv") {
      out << "n,ratio\n";
      for (const auto& [n, ratio] : rows)
        out << n << "," << json(ratio).dump() << "\n";
    } else {
      json arr = json::array();
      for (const auto& [n, ratio] : rows) arr.push_back({{"n", n}, {"ratio", ratio}});
      j["doubling"] = arr;
      emit(out, j);
    }
    return kExitOk;
  }

  CheegerReport rep;
  if (mode == "integral")
    rep = integral_cheeger(induced_graph(w));
  else if (mode == "symmetric")
    rep = symmetric_cheeger(w, opt);
  else
    rep = graphon_cheeger(w, opt);
  enforce_certified(rep);
  j["mode"] = mode;
  j["value"] = rep.value;
  j["witness"] = witness_json(rep);
  j["method"] = rep.method;
  j["certified"] = rep.certified;
  emit(out, j);
  return kExitOk;
}

int run_lambda(const GraphonInput& in, std::ostream& out) {
  json j;
  j["command"] = "lambda";
  if (!in.graph_path.empty()) {
    const WeightedGraph g = parse_graph_text(load_file(in.graph_path));
    j["source"] = in.graph_path;
    j["lambda"] = lambda_graph(g);
    j["method"] = "jacobi";
    emit(out, j);
    return kExitOk;
  }
  const StepGraphon w = resolve_graphon(in, &j);
  j["lambda"] = lambda_graphon(w);
  j["method"] = "min(jacobi, 1)";
  j["convention_note"] = kLambdaConventionNote;
  emit(out, j);
  return kExitOk;
}

StepFunction parse_block_function(const StepGraphon& w, const std::string& text) {
  StepFunction f;
  f.cuts = w.cuts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    try {
      f.values.push_back(std::stod(piece));
    } catch (const std::exception&) {
      throw input_error("--function: bad number '" + piece + "'");
    }
  }
  if (f.values.size() != w.n)
    throw input_error("--function needs exactly one value per graphon block");
  return f;
}

int run_verify(const GraphonInput& in, const std::string& which,
               const std::string& function_text, int trials, std::uint64_t seed,
               std::ostream& out) {
  json j;
  j["command"] = "verify";
  j["which"] = which;
  const StepGraphon w = resolve_graphon(in, &j);

  if (which == "sandwich") {
    const CheegerOptions opt{seed, 64};
    const SpectralReport rep = verify_sandwich(w, opt);
    j["lambda"] = rep.lambda;
    j["h"] = rep.h;
    j["g"] = rep.g;
    j["h_certified"] = rep.h_certified;
    j["buser_ok"] = rep.buser_ok;
    j["buser_sym_ok"] = rep.buser_sym_ok;
    j["cheeger_ok"] = rep.cheeger_ok;
    j["slack"] = {{"buser", rep.buser_slack},
                  {"buser_sym", rep.buser_sym_slack},
                  {"cheeger", rep.cheeger_slack}};
    j["convention_note"] = rep.convention_note;
    const bool ok = rep.buser_ok && rep.buser_sym_ok && rep.cheeger_ok;
    j["ok"] = ok;
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (which == "adjoint") {
    Rng rng(seed);
    double max_gap = 0.0;
    bool norm_ok = true;
    for (int t = 0; t < trials; ++t) {
      Rng sub = rng.fork(static_cast<std::uint64_t>(t));
      StepFunction f;
      f.cuts = w.cuts;
      for (std::size_t k = 0; k < w.n; ++k) f.values.push_back(sub.uniform(-2.0, 2.0));
      EdgeStepFunction phi;
      phi.cuts = w.cuts;
      phi.n = w.n;
      phi.phi.resize(w.n * (w.n - 1) / 2);
      for (double& v : phi.phi) v = sub.uniform(-2.0, 2.0);
      const EdgeStepFunction df = apply_d(w, f);
      const StepFunction dstar = apply_dstar(w, phi);
      const double lhs = edge_inner(w, df, phi);
      const double rhs = vertex_inner(w, f, dstar);
      const double nf = std::sqrt(std::max(0.0, vertex_inner(w, f, f)));
      const double nphi = std::sqrt(std::max(0.0, edge_inner(w, phi, phi)));
      const double gap = std::abs(lhs - rhs) / (1.0 + nf * nphi);
      max_gap = std::max(max_gap, gap);
      const double ndf = std::sqrt(std::max(0.0, edge_inner(w, df, df)));
      if (ndf > 2.0 * nf + 1e-12) norm_ok = false;
    }
    j["trials"] = trials;
    j["max_adjoint_gap"] = max_gap;
    j["d_norm_bound_ok"] = norm_ok;
    const bool ok = max_gap <= 1e-12 && norm_ok;
    j["ok"] = ok;
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (which == "coarea") {
    if (function_text.empty())
      throw input_error("verify --which coarea needs --function \"v1,v2,...\"");
    const StepFunction f = parse_block_function(w, function_text);
    const CoareaReport rep = coarea_graphon(w, f);
    j["lhs_plus"] = rep.lhs_plus;
    j["rhs_plus"] = rep.rhs_plus;
    j["lhs_minus"] = rep.lhs_minus;
    j["rhs_minus"] = rep.rhs_minus;
    j["lhs_simple"] = rep.lhs_simple;
    j["rhs_simple"] = rep.rhs_simple;
    j["max_abs_gap"] = rep.max_abs_gap;
    const bool ok = rep.max_abs_gap <= 1e-9;
    j["ok"] = ok;
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
  }

  throw input_error("verify: unknown --which '" + which + "'");
}

int run_compare(const std::string& graph_path, std::uint64_t seed, std::ostream& out) {
  const WeightedGraph g = parse_graph_text(load_file(graph_path));
  if (!graph_connected(g)) throw input_error("compare: input graph is disconnected");
  json j;
  j["command"] = "compare";
  j["source"] = graph_path;
  const CheegerReport hg = integral_cheeger(g);
  const CheegerReport hw = fractional_cheeger(g, {seed, 64});
  j["h_G"] = hg.value;
  j["h_G_method"] = hg.method;
  j["h_G_certified"] = hg.certified;
  j["h_W"] = hw.value;
  j["h_W_method"] = hw.method;
  j["h_W_certified"] = hw.certified;
  const double ratio = hw.value / hg.value;
  j["ratio"] = ratio;

  double volmin = g.vol(0), volmax = g.vol(0);
  for (std::size_t u = 1; u < g.n; ++u) {
    volmin = std::min(volmin, g.vol(u));
    volmax = std::max(volmax, g.vol(u));
  }
  const double gamma = volmax / volmin;
  j["gamma"] = gamma;
  bool loopless = true;
  for (std::size_t u = 0; u < g.n; ++u)
    if (g.at(u, u) != 0.0) loopless = false;
  const bool regular = (volmax - volmin) <= 1e-12 * std::max(1.0, volmax);

  double best_bound = -1e300;
  j["bounds_applicable"] = loopless;
  if (loopless) {
    const BestBound cheb = best_ratio_lower_bound(static_cast<int>(g.n), gamma);
    j["chebyshev"] = {{"best", cheb.value}, {"eps", cheb.eps}};
    best_bound = std::max(best_bound, cheb.value);
    if (regular) {
      const BestBound az = best_azuma_lower_bound(static_cast<int>(g.n));
      j["azuma"] = {{"best", az.value}, {"eps", az.eps}};
      best_bound = std::max(best_bound, az.value);
    }
  }
  const bool bound_ok = !loopless || ratio >= best_bound - 1e-9;
  j["bound_ok"] = bound_ok;

  const double lg = lambda_graph(g);
  const double lw = lambda_graphon(from_graph(g));
  j["lambda_G"] = lg;
  j["lambda_W"] = lw;
  j["lambda_consistent"] = std::abs(lw - std::min(lg, 1.0)) <= 1e-9;
  j["convention_note"] = kLambdaConventionNote;
  emit(out, j);
  return bound_ok ? kExitOk : kExitCheckFailed;
}

int run_gallery(const std::string& name, int level, int from, int to,
                const std::string& format, std::ostream& out) {
  if (name == "wn" && from > 0) {
    if (to < from) throw input_error("gallery wn sweep: need --to >= --from");
    const StepGraphon k2 = k2_graphon();
    // h_ratio uses the min-side denominator; strip_ratio divides by the
    // strip volume outright (the closed form 2e^-n/(2/n + 2e^-n)). They
    // agree from n = 5 on, where the strip is the lighter side.
    auto row = [&](int n) {
      const StepGraphon wn = counterexample_wn(n);
      const IntervalSet a = wn_bottleneck_cut(n);
      const double strip = ew(wn, a, complement(a)) / vol(wn, a);
      return std::tuple{ratio_h_graphon(wn, a), strip, l1_distance(wn, k2)};
    };
    if (format == "csv") {
      out << "n,h_ratio,strip_ratio,l1_to_k2\n";
      for (int n = from; n <= to; ++n) {
        const auto [h, strip, l1] = row(n);
        out << n << "," << json(h).dump() << "," << json(strip).dump() << ","
            << json(l1).dump() << "\n";
      }
      return kExitOk;
    }
    json arr = json::array();
    for (int n = from; n <= to; ++n) {
      const auto [h, strip, l1] = row(n);
      arr.push_back(
          {{"n", n}, {"h_ratio", h}, {"strip_ratio", strip}, {"l1_to_k2", l1}});
    }
    emit(out, arr);
    return kExitOk;
  }
  const GalleryEntry entry = parse_gallery(name);
  StepGraphon w;
  if (entry.step)
    w = *entry.step;
  else {
    const AnalyticOracle oracle(*entry.analytic);
    w = conditional_step(oracle, level);
  }
  out << graphon_to_json(w) << "\n";
  return kExitOk;
}

int run_graphing_rotation(double alpha, int cut_n, int cut_from, int cut_to,
                          int lambda_k, int audit_trials, std::uint64_t seed,
                          const std::string& format, std::ostream& out) {
  json j;
  j["command"] = "graphing rotation";
  j["alpha"] = alpha;
  const Graphing g = rotation_graphing(alpha);
  if (g.rational_offset_warning) j["rational_alpha_warning"] = true;

  if (cut_from > 0) {
    if (cut_to < cut_from) throw input_error("rotation cut sweep: need --to >= --from");
    if (format == "csv") {
      out << "N,ratio,valid\n";
      for (int n = cut_from; n <= cut_to; ++n) {
        const RotationCut c = rotation_cut(alpha, n);
        out << n << "," << json(c.ratio).dump() << "," << (c.valid ? 1 : 0) << "\n";
      }
      return kExitOk;
    }
    json arr = json::array();
    for (int n = cut_from; n <= cut_to; ++n) {
      const RotationCut c = rotation_cut(alpha, n);
      arr.push_back({{"N", n}, {"ratio", c.ratio}, {"valid", c.valid}});
    }
    j["cuts"] = arr;
    emit(out, j);
    return kExitOk;
  }

  bool ok = true;
  if (cut_n > 0) {
    const RotationCut c = rotation_cut(alpha, cut_n);
    j["cut"] = {{"N", cut_n},
                {"set", format_interval_set(c.set)},
                {"ratio", c.ratio},
                {"valid", c.valid},
                {"bound", 2.0 / (cut_n + 1)}};
    ok = ok && c.valid && c.ratio <= 2.0 / (cut_n + 1) + 1e-12;
  }
  if (lambda_k > 0) j["lambda_upper"] = rotation_lambda_upper(alpha, lambda_k);
  if (audit_trials > 0) {
    const double violation = symmetry_audit(g, audit_trials, seed);
    j["symmetry_audit"] = {{"trials", audit_trials}, {"max_violation", violation}};
    ok = ok && violation <= 1e-12;
  }
  j["ok"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitCheckFailed;
}

int run_graphing_from_graph(const std::string& path, const std::string& verify_what,
                            std::ostream& out) {
  const WeightedGraph f = parse_graph_text(load_file(path));
  const Graphing g = graphing_from_graph(f);
  json j;
  j["command"] = "graphing from-graph";
  j["source"] = path;
  j["atoms"] = g.atoms.size();
  j["edges"] = g.atom_edges.size();
  j["degree_bound"] = g.degree_bound;
  if (verify_what.empty()) {
    emit(out, j);
    return kExitOk;
  }
  if (verify_what != "sandwich")
    throw input_error("graphing from-graph: --verify supports only 'sandwich'");
  const CheegerReport h = cheeger_atomic(g);
  const double lambda = lambda_atomic(g);
  j["h"] = h.value;
  j["h_method"] = h.method;
  j["h_certified"] = h.certified;
  j["lambda"] = lambda;
  const bool buser = lambda <= 2.0 * h.value + 1e-9;
  const bool cheeger = h.value * h.value / 8.0 <= lambda + 1e-9;
  j["buser_ok"] = buser;
  j["cheeger_ok"] = cheeger;
  j["ok"] = buser && cheeger;
  emit(out, j);
  return (buser && cheeger) ? kExitOk : kExitCheckFailed;
}

int run_graphing_file(const std::string& path, int audit_trials, std::uint64_t seed,
                      std::ostream& out) {
  const Graphing g = parse_graphing_json(load_file(path));
  json j;
  j["command"] = "graphing";
  j["source"] = path;
  j["atomic"] = g.atomic();
  j["degree_bound"] = g.degree_bound;
  bool ok = true;
  if (audit_trials > 0) {
    const double violation = symmetry_audit(g, audit_trials, seed);
    j["symmetry_audit"] = {{"trials", audit_trials}, {"max_violation", violation}};
    ok = violation <= 1e-12;
  }
  j["ok"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cheeger constants, spectra and co-area identities for graph limits"};
  app.require_subcommand(1);

  // cheeger ------------------------------------------------------------
  auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger-type constants");
  GraphonInput cheeger_in;
  cheeger_in.attach(cheeger_cmd);
  bool flag_fractional = false, flag_integral = false, flag_symmetric = false;
  cheeger_cmd->add_flag("--fractional", flag_fractional, "fractional Cheeger (default)");
  cheeger_cmd->add_flag("--integral", flag_integral, "integral Cheeger");
  cheeger_cmd->add_flag("--symmetric", flag_symmetric, "symmetric (product) Cheeger");
  std::uint64_t seed = 0;
  int starts = 64;
  cheeger_cmd->add_option("--seed", seed, "RNG seed");
  cheeger_cmd->add_option("--starts", starts, "optimizer multistarts");
  bool require_certified = false;
  cheeger_cmd->add_flag("--certify", require_certified,
                        "fail unless the result is certified");
  int doubling = -1;
  std::string set_text;
  cheeger_cmd->add_option("--doubling", doubling,
                          "emit doubling-map ratios for iterates 0..NMAX");
  cheeger_cmd->add_option("--set", set_text, "seed set for --doubling (lo:hi,...)");
  std::string cheeger_format = "json";
  cheeger_cmd->add_option("--format", cheeger_format, "json or csv");

  // lambda -------------------------------------------------------------
  auto* lambda_cmd = app.add_subcommand("lambda", "bottom of the spectrum");
  GraphonInput lambda_in;
  lambda_in.attach(lambda_cmd);

  // verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "machine checks");
  GraphonInput verify_in;
  verify_in.attach(verify_cmd, false);
  std::string which = "sandwich";
  verify_cmd->add_option("--which", which, "sandwich | adjoint | coarea");
  std::string function_text;
  verify_cmd->add_option("--function", function_text, "block values v1,v2,...");
  int trials = 500;
  verify_cmd->add_option("--trials", trials, "random trials for adjoint checks");
  std::uint64_t verify_seed = 0;
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");

  // coarea (alias of verify --which coarea) ------------------------------
  auto* coarea_cmd = app.add_subcommand("coarea", "co-area identity report");
  GraphonInput coarea_in;
  coarea_in.attach(coarea_cmd, false);
  std::string coarea_function;
  coarea_cmd->add_option("--function", coarea_function, "block values v1,v2,...");

  // gallery --------------------------------------------------------------
  auto* gallery_cmd = app.add_subcommand("gallery", "example graphons");
  std::string gallery_name;
  gallery_cmd->add_option("name", gallery_name, "gallery name or 'wn' for a sweep")
      ->required();
  int gallery_level = 8;
  gallery_cmd->add_option("--level", gallery_level, "dyadic approximation level");
  int wn_from = 0, wn_to = 0;
  gallery_cmd->add_option("--from", wn_from, "wn sweep start");
  gallery_cmd->add_option("--to", wn_to, "wn sweep end");
  std::string gallery_format = "json";
  gallery_cmd->add_option("--format", gallery_format, "json or csv");

  // graphing --------------------------------------------------------------
  auto* graphing_cmd = app.add_subcommand("graphing", "graphing computations");
  std::string graphing_file;
  graphing_cmd->add_option("--file", graphing_file, "graphing JSON file");
  int graphing_audit = 0;
  std::uint64_t graphing_seed = 0;
  graphing_cmd->add_option("--audit", graphing_audit, "symmetry audit trials");
  graphing_cmd->add_option("--seed", graphing_seed, "RNG seed");

  auto* rotation_cmd = graphing_cmd->add_subcommand("rotation", "rotation graphing");
  double alpha = 0.6180339887498949;
  rotation_cmd->add_option("--alpha", alpha, "rotation angle in (0,1)");
  int cut_n = 0, cut_from = 0, cut_to = 0, lambda_k = 0, rot_audit = 0;
  rotation_cmd->add_option("--cut", cut_n, "orbit cut with N translates");
  rotation_cmd->add_option("--from", cut_from, "cut sweep start");
  rotation_cmd->add_option("--to", cut_to, "cut sweep end");
  rotation_cmd->add_option("--lambda-upper", lambda_k, "cosine test frequencies");
  rotation_cmd->add_option("--audit", rot_audit, "symmetry audit trials");
  std::uint64_t rot_seed = 0;
  rotation_cmd->add_option("--seed", rot_seed, "RNG seed");
  std::string rot_format = "json";
  rotation_cmd->add_option("--format", rot_format, "json or csv");

  auto* fromgraph_cmd =
      graphing_cmd->add_subcommand("from-graph", "atomic graphing of a finite graph");
  std::string fromgraph_path;
  fromgraph_cmd->add_option("file", fromgraph_path, "graph text file")->required();
  std::string fg_verify;
  fromgraph_cmd->add_option("--verify", fg_verify,
                            "'sandwich': check h^2/8 <= lambda <= 2h");

  // compare ---------------------------------------------------------------
  auto* compare_cmd =
      app.add_subcommand("compare", "graph vs graphon Cheeger and spectrum");
  std::string compare_path;
  compare_cmd->add_option("--graph", compare_path, "weighted graph text file")
      ->required();
  std::uint64_t compare_seed = 0;
  compare_cmd->add_option("--seed", compare_seed, "RNG seed");

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("limit-cheeger");
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    const std::uint64_t env_seed = default_seed();
    seed = env_seed;
    verify_seed = env_seed;
    graphing_seed = env_seed;
    rot_seed = env_seed;
    compare_seed = env_seed;
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (cheeger_cmd->parsed()) {
      int mode_flags = flag_fractional + flag_integral + flag_symmetric;
      if (mode_flags > 1)
        throw input_error("pick one of --fractional, --integral, --symmetric");
      const std::string mode =
          flag_integral ? "integral" : (flag_symmetric ? "symmetric" : "fractional");
      return run_cheeger(cheeger_in, mode, seed, starts, require_certified, doubling,
                         set_text, cheeger_format, out);
    }
    if (lambda_cmd->parsed()) return run_lambda(lambda_in, out);
    if (verify_cmd->parsed())
      return run_verify(verify_in, which, function_text, trials, verify_seed, out);
    if (coarea_cmd->parsed())
      return run_verify(coarea_in, "coarea", coarea_function, 0, 0, out);
    if (gallery_cmd->parsed())
      return run_gallery(gallery_name, gallery_level, wn_from, wn_to, gallery_format,
                         out);
    if (graphing_cmd->parsed()) {
      if (rotation_cmd->parsed())
        return run_graphing_rotation(alpha, cut_n, cut_from, cut_to, lambda_k,
                                     rot_audit, rot_seed, rot_format, out);
      if (fromgraph_cmd->parsed())
        return run_graphing_from_graph(fromgraph_path, fg_verify, out);
      if (graphing_file.empty())
        throw input_error("graphing: need a subcommand or --file");
      return run_graphing_file(graphing_file, graphing_audit, graphing_seed, out);
    }
    if (compare_cmd->parsed()) return run_compare(compare_path, compare_seed, out);
    throw input_error("no subcommand given");
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const degenerate_error& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace limitcheeger::cli
