// skein-lab: command-line front end for the skein algebra toolkit.
// Exit codes: 0 success, 2 validation failure, 3 invariant violation,
// 64 usage error.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skeinlab/bracket.hpp"
#include "skeinlab/charvar.hpp"
#include "skeinlab/chebyshev.hpp"
#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/qrep.hpp"
#include "skeinlab/qtrace.hpp"
#include "skeinlab/rng.hpp"
#include "skeinlab/skein_pt.hpp"
#include "skeinlab/traintrack.hpp"
#include "skeinlab/triangulation.hpp"

#include "expr.hpp"
#include "report.hpp"
#include "shadow_run.hpp"

namespace {

using namespace skeinlab;
using namespace skeinlab::cli;

RootOfUnity parse_root(const std::string& spec) {
  const auto comma = spec.find(',');
  try {
    const long N = std::stol(spec.substr(0, comma));
    const long k = comma == std::string::npos ? 1 : std::stol(spec.substr(comma + 1));
    return RootOfUnity(N, k);
  } catch (const std::invalid_argument&) {
    throw ValidationError("--at-root expects N or N,k");
  } catch (const std::out_of_range&) {
    throw ValidationError("--at-root expects N or N,k");
  }
}

WeightVector parse_weights(const std::string& spec) {
  WeightVector w;
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ','))
    w.push_back(std::stoll(tok));
  return w;
}

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// ---------------------------------------------------------------- bracket

struct BracketArgs {
  std::string file;
  std::string at_root;
  std::string report_path;
};

int run_bracket(const BracketArgs& a) {
  const std::string text = slurp_file(a.file);
  const LinkDiagram d = LinkDiagram::parse_pd(text);
  const LaurentHalf b = kauffman_bracket(d);
  std::cout << b.str() << "\n";

  RunManifest manifest;
  manifest.command = "bracket";
  manifest.add_input(a.file, text);
  Json report{{"schema", "skeinlab/v1/bracket-report"},
              {"manifest", manifest.json()},
              {"bracket", b.str()},
              {"components", d.component_count()},
              {"crossings", static_cast<int>(d.crossing_count())}};
  if (!a.at_root.empty()) {
    const RootOfUnity z = parse_root(a.at_root);
    const std::complex<double> v = eval_at_root(b, z);
    std::cout << "at A = exp(2*pi*i*" << z.k << "/" << z.N
              << "): " << fmt_complex(v) << "\n";
    report["at_root"] = Json{{"N", z.N}, {"k", z.k}, {"value", complex_json(v)}};
  }
  if (!a.report_path.empty()) write_file(a.report_path, dump_report(report));
  return 0;
}

// ---------------------------------------------------------------- charvar

struct CharvarTraceArgs {
  std::string word;
  std::string rep_file;
};

int run_charvar_trace(const CharvarTraceArgs& a) {
  const SL2Rep r = SL2Rep::from_json(slurp_file(a.rep_file));
  if (r.det_defect() > 1e-6)
    throw ValidationError("charvar trace: matrices are not determinant 1");
  const GroupWord w = GroupWord::parse(a.word);
  std::cout << fmt_complex(trace_word(w, r)) << "\n";
  return 0;
}

struct CharvarFrickeArgs {
  std::string rep_file;
  long p = 1, q = 0;
};

int run_charvar_fricke(const CharvarFrickeArgs& a) {
  const SL2Rep r = SL2Rep::from_json(slurp_file(a.rep_file));
  if (r.rank() != 2)
    throw ValidationError("charvar fricke: need exactly two generators");
  const Complex rec = fricke_trace(a.p, a.q, r);
  const Complex direct = trace_word(pq_word(a.p, a.q), r);
  std::cout << "recursion: " << fmt_complex(rec) << "\n";
  std::cout << "word:      " << fmt_complex(direct) << "\n";
  if (std::abs(rec - direct) > 1e-8)
    throw InvariantViolation("charvar fricke: recursion disagrees with the word oracle");
  return 0;
}

// ------------------------------------------------------------------ skein

struct SkeinNfArgs {
  std::string expr;
  std::string at_root;
};

int run_skein_nf(const SkeinNfArgs& a) {
  const SkeinPTElement e = parse_skein_expr(a.expr);
  std::cout << e.str() << "\n";
  if (!a.at_root.empty()) {
    const RootOfUnity z = parse_root(a.at_root);
    for (const auto& [m, c] : e.terms())
      std::cout << "X1^" << m[0] << " X2^" << m[1] << " X3^" << m[2] << " : "
                << fmt_complex(eval_at_root(c, z)) << "\n";
  }
  return 0;
}

struct SkeinCentralArgs {
  std::string n_list = "3,5,7";
  std::string report_path;
};

int run_skein_central(const SkeinCentralArgs& a) {
  const CentralElementReport rep = closed_torus_central_check();
  std::cout << rep.text();

  auto verdict_json = [](const CentralCandidate& c) {
    return Json{{"label", c.label()},
                {"central", c.central},
                {"quad", c.quad},
                {"cubic", c.cubic}};
  };
  Json survey = Json::array();
  for (const auto& c : rep.survey) survey.push_back(verdict_json(c));

  // spot-check the central candidates at the requested roots of unity: a
  // symbolically vanishing commutator must also vanish mod every Phi_N
  Json root_checks = Json::array();
  std::istringstream is(a.n_list);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    const long N = std::stol(tok);
    const RootOfUnity z(N);
    double worst = 0.0;
    for (const auto& c : rep.survey) {
      if (!c.central) continue;
      for (int g = 1; g <= 3; ++g)
        worst = std::max(worst, commutator_at_root(c.element(),
                                                   SkeinPTElement::generator(g), z));
    }
    root_checks.push_back({{"N", N}, {"max_residue", worst}});
    if (worst != 0.0)
      throw InvariantViolation("skein central: symbolic verdict fails mod Phi_" +
                               std::to_string(N));
  }

  RunManifest manifest;
  manifest.command = "skein central";
  Json report{{"schema", "skeinlab/v1/central-report"},
              {"manifest", manifest.json()},
              {"verbatim", verdict_json(rep.verbatim)},
              {"symmetric", verdict_json(rep.symmetric)},
              {"survey", survey},
              {"root_checks", root_checks},
              {"notes", rep.notes}};
  if (!a.report_path.empty()) write_file(a.report_path, dump_report(report));
  return 0;
}

// --------------------------------------------------------------------- tt

struct TtBasisArgs {
  std::string file;
  std::string report_path;
};

int run_tt_basis(const TtBasisArgs& a) {
  const std::string text = slurp_file(a.file);
  const Triangulation T = load_triangulation(text);
  const TrainTrack tt = build_train_track(T);
  const auto basis = weight_basis(tt);
  const int expected = 6 * T.genus + 3 * T.punctures - 6;

  std::cout << "genus " << T.genus << ", punctures " << T.punctures << ", "
            << tt.branch_count << " branches, " << tt.switch_count()
            << " switches\n";
  std::cout << "weight lattice rank " << basis.size() << " (expected "
            << expected << ")\n";
  Json jbasis = Json::array(), jcoords = Json::array();
  for (const auto& b : basis) {
    std::cout << " ";
    for (long long x : b) std::cout << " " << x;
    std::cout << "\n";
    jbasis.push_back(b);
    jcoords.push_back(edge_coordinates(tt, b));
  }

  if (!a.report_path.empty()) {
    RunManifest manifest;
    manifest.command = "tt basis";
    manifest.add_input(a.file, text);
    write_file(a.report_path,
               dump_report(Json{{"schema", "skeinlab/v1/tt-report"},
                                {"manifest", manifest.json()},
                                {"genus", T.genus},
                                {"punctures", T.punctures},
                                {"branch_count", tt.branch_count},
                                {"rank", static_cast<int>(basis.size())},
                                {"expected_rank", expected},
                                {"basis", jbasis},
                                {"edge_coordinates", jcoords}}));
  }
  return 0;
}

struct TtFormArgs {
  std::string file;
  std::string a_spec, b_spec;
};

int run_tt_form(const TtFormArgs& a) {
  const Triangulation T = load_triangulation(slurp_file(a.file));
  const TrainTrack tt = build_train_track(T);
  const WeightVector va = parse_weights(a.a_spec);
  const WeightVector vb = parse_weights(a.b_spec);
  if (static_cast<int>(va.size()) != tt.branch_count ||
      static_cast<int>(vb.size()) != tt.branch_count)
    throw ValidationError("tt form: weight vectors need one entry per branch");
  if (!satisfies_switch_conditions(tt, va) || !satisfies_switch_conditions(tt, vb))
    throw ValidationError("tt form: vectors must satisfy the switch conditions");
  std::cout << thurston_form(tt, va, vb) << "\n";
  return 0;
}

// ------------------------------------------------------------------- qrep

struct QrepBuildArgs {
  std::string tri_file;
  std::string character_file;
  std::string out_file;
  long N = 3, k = 1;
};

int run_qrep_build(const QrepBuildArgs& a) {
  const std::string tri_text = slurp_file(a.tri_file);
  const Triangulation T = load_triangulation(tri_text);
  const TrainTrack tt = build_train_track(T);
  const auto basis = weight_basis(tt);
  const OmegaMatrix omega = omega_matrix(tt, basis);

  const std::string ch_text = slurp_file(a.character_file);
  Json ch;
  try {
    ch = Json::parse(ch_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("character file: ") + e.what());
  }
  if (!ch.is_object() || !ch.contains("scalars") || !ch["scalars"].is_array())
    throw SchemaError("character file: need a 'scalars' array");
  std::vector<std::complex<double>> scalars;
  for (const auto& s : ch["scalars"]) {
    if (!s.is_array() || s.size() != 2)
      throw SchemaError("character file: scalars are [re,im] pairs");
    scalars.emplace_back(s[0].get<double>(), s[1].get<double>());
  }
  if (scalars.size() != basis.size())
    throw ValidationError("character file: expected " +
                          std::to_string(basis.size()) + " scalars");

  const MatrixRep rep = build_rep(omega, RootOfUnity(a.N, a.k), scalars);
  const double residual = verify_rep(rep);
  const int irr = irreducibility_rank(rep);
  std::cout << "dimension " << rep.dimension << ", verify residual " << residual
            << ", irreducibility rank " << irr << " / "
            << rep.dimension * rep.dimension << "\n";

  Json mats = Json::array();
  for (const auto& M : rep.images) {
    Json rows = Json::array();
    for (int r = 0; r < M.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < M.cols(); ++c) row.push_back(complex_json(M(r, c)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  Json jscalars = Json::array();
  for (const auto& s : rep.scalars) jscalars.push_back(complex_json(s));

  RunManifest manifest;
  manifest.command = "qrep build";
  manifest.add_input(a.tri_file, tri_text);
  manifest.add_input(a.character_file, ch_text);
  write_file(a.out_file,
             dump_report(Json{{"schema", "skeinlab/v1/qrep-bundle"},
                              {"manifest", manifest.json()},
                              {"N", a.N},
                              {"k", a.k},
                              {"dimension", rep.dimension},
                              {"omega", omega},
                              {"scalars", jscalars},
                              {"matrices", mats},
                              {"verify_residual", residual},
                              {"irrep_rank", irr}}));
  return 0;
}

struct QrepVerifyArgs {
  std::string bundle_file;
};

int run_qrep_verify(const QrepVerifyArgs& a) {
  Json j;
  try {
    j = Json::parse(slurp_file(a.bundle_file));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("bundle: ") + e.what());
  }
  for (const char* key : {"N", "k", "dimension", "omega", "scalars", "matrices"})
    if (!j.contains(key)) throw SchemaError(std::string("bundle: missing ") + key);

  MatrixRep rep{RootOfUnity(j["N"].get<long>(), j["k"].get<long>())};
  rep.dimension = j["dimension"].get<int>();
  for (const auto& row : j["omega"])
    rep.omega.push_back(row.get<std::vector<long long>>());
  for (const auto& s : j["scalars"])
    rep.scalars.emplace_back(s[0].get<double>(), s[1].get<double>());
  for (const auto& m : j["matrices"]) {
    Eigen::MatrixXcd M(rep.dimension, rep.dimension);
    if (static_cast<int>(m.size()) != rep.dimension)
      throw SchemaError("bundle: matrix dimension mismatch");
    for (int r = 0; r < rep.dimension; ++r)
      for (int c = 0; c < rep.dimension; ++c)
        M(r, c) = std::complex<double>(m[r][c][0].get<double>(),
                                       m[r][c][1].get<double>());
    rep.images.push_back(std::move(M));
  }
  if (rep.images.size() != rep.omega.size() ||
      rep.scalars.size() != rep.omega.size())
    throw SchemaError("bundle: rank mismatch between omega, scalars, matrices");

  const double residual = verify_rep(rep);
  const int irr = irreducibility_rank(rep);
  std::cout << "verify residual " << residual << ", irreducibility rank " << irr
            << " / " << rep.dimension * rep.dimension << "\n";
  if (residual > 1e-10)
    throw InvariantViolation("qrep verify: commutation residual above 1e-10");
  return 0;
}

// ----------------------------------------------------------------- shadow

struct ShadowArgs {
  std::string tri_file;
  std::string report_path;
  long N = 3, k = 1;
  int samples = 20;
  std::uint64_t seed = 7;
};

int run_shadow(const ShadowArgs& a) {
  RunManifest manifest;
  manifest.command = "shadow run";
  manifest.seed = a.seed;
  if (!a.tri_file.empty()) {
    const std::string text = slurp_file(a.tri_file);
    const Triangulation T = load_triangulation(text);
    if (T.genus != 1 || T.punctures != 1)
      throw ValidationError(
          "shadow run: the pipeline is specific to the once-punctured torus");
    manifest.add_input(a.tri_file, text);
  }

  ShadowRunOptions opt;
  opt.N = a.N;
  opt.k = a.k;
  opt.samples = a.samples;
  opt.seed = a.seed;
  const Json report = shadow_run_report(opt, manifest);
  if (!a.report_path.empty()) write_file(a.report_path, dump_report(report));

  std::cout << "N=" << a.N << " k=" << a.k << " samples=" << a.samples
            << " seed=" << a.seed << "\n";
  std::cout << "max error " << report["max_error"].get<double>()
            << ", max Schur residual " << report["max_schur_residual"].get<double>()
            << "\n";
  if (!report["pass"].get<bool>())
    throw InvariantViolation("shadow run: tolerances exceeded, see report");
  std::cout << "pass\n";
  return 0;
}

// ----------------------------------------------------------------- corpus

struct CorpusArgs {
  std::string out_dir;
  int count = 50;
  int max_crossings = 10;
  std::uint64_t seed = 11;
};

int run_corpus(const CorpusArgs& a) {
  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  if (ec)
    throw ValidationError("corpus: cannot create output directory " + a.out_dir);
  Rng rng(a.seed);
  Json index = Json::array();
  for (int i = 0; i < a.count; ++i) {
    const int strands = 2 + static_cast<int>(rng.next_below(3));
    const int len = 1 + static_cast<int>(rng.next_below(
                            static_cast<std::uint64_t>(a.max_crossings)));
    std::vector<int> word;
    for (int j = 0; j < len; ++j) {
      const int gen = 1 + static_cast<int>(rng.next_below(
                              static_cast<std::uint64_t>(strands - 1)));
      word.push_back(rng.next_below(2) == 0 ? gen : -gen);
    }
    const LinkDiagram d = braid_closure(word, strands);
    Json crossings = Json::array();
    for (const auto& c : d.crossings())
      crossings.push_back({c[0], c[1], c[2], c[3]});
    char name[32];
    std::snprintf(name, sizeof(name), "pd%03d.json", i);
    const std::string path = a.out_dir + "/" + name;
    write_file(path, dump_report(Json{{"crossings", crossings},
                                      {"free_loops", d.free_loops()}}));
    index.push_back({{"file", name},
                     {"strands", strands},
                     {"braid", word},
                     {"crossings", static_cast<int>(d.crossing_count())},
                     {"components", d.component_count()}});
  }
  RunManifest manifest;
  manifest.command = "corpus";
  manifest.seed = a.seed;
  write_file(a.out_dir + "/index.json",
             dump_report(Json{{"schema", "skeinlab/v1/corpus-index"},
                              {"manifest", manifest.json()},
                              {"diagrams", index}}));
  std::cout << "wrote " << a.count << " diagrams to " << a.out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein algebra toolkit"};
  app.require_subcommand(1);

  BracketArgs bracket_args;
  auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a PD diagram");
  cmd_bracket->add_option("file", bracket_args.file, "PD JSON file")->required();
  cmd_bracket->add_option("--at-root", bracket_args.at_root, "evaluate at A = exp(2*pi*i*k/N)");
  cmd_bracket->add_option("--report", bracket_args.report_path, "write a JSON report");

  int cheb_n = 0;
  auto* cmd_cheb = app.add_subcommand("cheb", "Chebyshev polynomial T_n");
  cmd_cheb->add_option("n", cheb_n, "index")->required()->check(CLI::NonNegativeNumber);

  auto* cmd_charvar = app.add_subcommand("charvar", "SL2(C) character variety tools");
  cmd_charvar->require_subcommand(1);
  CharvarTraceArgs trace_args;
  auto* cmd_trace = cmd_charvar->add_subcommand("trace", "trace of a word");
  cmd_trace->add_option("--word", trace_args.word, "word, e.g. abAB")->required();
  cmd_trace->add_option("--rep", trace_args.rep_file, "SL2Rep JSON file")->required();
  CharvarFrickeArgs fricke_args;
  auto* cmd_fricke = cmd_charvar->add_subcommand("fricke", "(p,q) curve trace");
  cmd_fricke->add_option("--rep", fricke_args.rep_file, "SL2Rep JSON file")->required();
  cmd_fricke->add_option("-p", fricke_args.p, "curve slope p")->required();
  cmd_fricke->add_option("-q", fricke_args.q, "curve slope q")->required();

  auto* cmd_skein = app.add_subcommand("skein", "punctured-torus skein algebra");
  cmd_skein->require_subcommand(1);
  SkeinNfArgs nf_args;
  auto* cmd_nf = cmd_skein->add_subcommand("nf", "normal form of an expression");
  cmd_nf->add_option("expr", nf_args.expr, "expression in X1,X2,X3")->required();
  cmd_nf->add_option("--at-root", nf_args.at_root, "evaluate coefficients at a root of unity");
  SkeinCentralArgs central_args;
  auto* cmd_central = cmd_skein->add_subcommand("central", "closed-torus central element survey");
  cmd_central->add_option("--N", central_args.n_list, "roots to spot-check, e.g. 3,5,7");
  cmd_central->add_option("--report", central_args.report_path, "write a JSON report");

  auto* cmd_tt = app.add_subcommand("tt", "train tracks and the Thurston form");
  cmd_tt->require_subcommand(1);
  TtBasisArgs tt_basis_args;
  auto* cmd_tt_basis = cmd_tt->add_subcommand("basis", "weight lattice basis");
  cmd_tt_basis->add_option("file", tt_basis_args.file, "triangulation JSON")->required();
  cmd_tt_basis->add_option("--report", tt_basis_args.report_path, "write a JSON report");
  TtFormArgs tt_form_args;
  auto* cmd_tt_form = cmd_tt->add_subcommand("form", "Thurston form of two weight vectors");
  cmd_tt_form->add_option("file", tt_form_args.file, "triangulation JSON")->required();
  cmd_tt_form->add_option("--a", tt_form_args.a_spec, "weights, comma separated")->required();
  cmd_tt_form->add_option("--b", tt_form_args.b_spec, "weights, comma separated")->required();

  auto* cmd_qrep = app.add_subcommand("qrep", "quantum torus representations");
  cmd_qrep->require_subcommand(1);
  QrepBuildArgs qrep_build_args;
  auto* cmd_qrep_build = cmd_qrep->add_subcommand("build", "build a representation bundle");
  cmd_qrep_build->add_option("triangulation", qrep_build_args.tri_file, "triangulation JSON")->required();
  cmd_qrep_build->add_option("--N", qrep_build_args.N, "root order (odd)")->required();
  cmd_qrep_build->add_option("--k", qrep_build_args.k, "root exponent");
  cmd_qrep_build->add_option("--character", qrep_build_args.character_file, "scalar parameters JSON")->required();
  cmd_qrep_build->add_option("--out", qrep_build_args.out_file, "bundle output path")->required();
  QrepVerifyArgs qrep_verify_args;
  auto* cmd_qrep_verify = cmd_qrep->add_subcommand("verify", "re-verify a stored bundle");
  cmd_qrep_verify->add_option("bundle", qrep_verify_args.bundle_file, "bundle JSON")->required();

  auto* cmd_shadow = app.add_subcommand("shadow", "classical shadow pipeline");
  cmd_shadow->require_subcommand(1);
  ShadowArgs shadow_args;
  auto* cmd_shadow_run = cmd_shadow->add_subcommand("run", "run the seeded corpus");
  cmd_shadow_run->add_option("--triangulation", shadow_args.tri_file, "triangulation JSON (must be the punctured torus)");
  cmd_shadow_run->add_option("--N", shadow_args.N, "root order (odd)");
  cmd_shadow_run->add_option("--k", shadow_args.k, "root exponent");
  cmd_shadow_run->add_option("--samples", shadow_args.samples, "number of seeded samples");
  cmd_shadow_run->add_option("--seed", shadow_args.seed, "corpus seed");
  cmd_shadow_run->add_option("--report", shadow_args.report_path, "report output path");

  CorpusArgs corpus_args;
  auto* cmd_corpus = app.add_subcommand("corpus", "generate a seeded diagram corpus");
  cmd_corpus->add_option("--out", corpus_args.out_dir, "output directory")->required();
  cmd_corpus->add_option("--count", corpus_args.count, "number of diagrams");
  cmd_corpus->add_option("--max-crossings", corpus_args.max_crossings, "crossing bound");
  cmd_corpus->add_option("--seed", corpus_args.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (*cmd_bracket) return run_bracket(bracket_args);
    if (*cmd_cheb) {
      std::cout << chebyshev(cheb_n).str() << "\n";
      return 0;
    }
    if (*cmd_trace) return run_charvar_trace(trace_args);
    if (*cmd_fricke) return run_charvar_fricke(fricke_args);
    if (*cmd_nf) return run_skein_nf(nf_args);
    if (*cmd_central) return run_skein_central(central_args);
    if (*cmd_tt_basis) return run_tt_basis(tt_basis_args);
    if (*cmd_tt_form) return run_tt_form(tt_form_args);
    if (*cmd_qrep_build) return run_qrep_build(qrep_build_args);
    if (*cmd_qrep_verify) return run_qrep_verify(qrep_verify_args);
    if (*cmd_shadow_run) return run_shadow(shadow_args);
    if (*cmd_corpus) return run_corpus(corpus_args);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 64;
}
