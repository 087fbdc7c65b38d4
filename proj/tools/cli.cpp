#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsurf/curves.hpp"
#include "qsurf/errors.hpp"
#include "qsurf/ktheory.hpp"
#include "qsurf/operators.hpp"
#include "qsurf/verify.hpp"
#include "qsurf/word.hpp"

namespace qsurf::cli {

namespace {

using nlohmann::json;

// Thrown for flag values CLI11 cannot validate on its own.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json class_json(const SurfaceClass& cls) {
  json j;
  j["kind"] = cls.kind_name();
  if (const auto* o = std::get_if<Orientable>(&cls.kind)) {
    j["g"] = o->genus;
  } else if (const auto* p = std::get_if<NonOrientable>(&cls.kind)) {
    j["n"] = p->euler_genus;
  } else if (const auto* u = std::get_if<Unsupported>(&cls.kind)) {
    j["reason"] = u->reason;
    j["cycle_rank"] = u->cycle_rank;
  }
  j["N"] = cls.N;
  j["k"] = cls.k();
  j["euler_characteristic"] = cls.euler_characteristic;
  j["vertex_classes"] = cls.vertex_count;
  if (cls.supported()) {
    const QuantumInvariant q = quantum_invariant(cls);
    j["invariant"] = {q.N, q.k};
  }
  return j;
}

SurfaceClass require_supported(const BoundaryWord& word) {
  SurfaceClass cls = classify(word);
  if (const auto* u = std::get_if<Unsupported>(&cls.kind)) {
    throw UnsupportedWordError("unsupported word: " + u->reason);
  }
  return cls;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw FlagError("cannot open output file " + path);
  return file;
}

int cmd_classify(const std::string& text, bool as_json, std::ostream& out, std::ostream& err) {
  const SurfaceClass cls = classify(parse_word(text));
  if (as_json) out << class_json(cls).dump() << '\n';
  if (const auto* u = std::get_if<Unsupported>(&cls.kind)) {
    err << "unsupported word: " << u->reason << '\n';
    return kUnsupportedWord;
  }
  if (!as_json) out << cls.describe() << ", vertex classes " << cls.vertex_count << '\n';
  return kOk;
}

int cmd_kgroups(const std::string& text, std::ostream& out) {
  const SurfaceClass cls = require_supported(parse_word(text));
  out << to_json(kgroups(cls)).dump() << '\n';
  return kOk;
}

int cmd_iso(const std::string& first, const std::string& second, bool classical, bool as_json,
            std::ostream& out) {
  const BoundaryWord a = parse_word(first);
  const BoundaryWord b = parse_word(second);
  const bool iso = is_isomorphic(a, b, classical ? IsoMode::Classical : IsoMode::Quantum);
  if (as_json) {
    out << json{{"isomorphic", iso}, {"mode", classical ? "classical" : "quantum"}}.dump() << '\n';
  } else {
    out << (iso ? "isomorphic" : "not isomorphic") << " (" << (classical ? "classical" : "quantum")
        << ")\n";
  }
  return kOk;
}

int cmd_windings(const std::string& text, int samples, const std::string& curve_out,
                 bool as_json, std::ostream& out) {
  if (samples < 16) throw FlagError("--samples must be >= 16");
  const BoundaryWord word = parse_word(text);
  require_supported(word);
  const PairStructure ps = pair_structure(word);
  const WindingVector combinatorial = circle_windings(ps);
  const SymbolCurve zeta = zeta_curve(ps, samples);
  const WindingResult around = winding_around(zeta, {0.0, 0.0});
  const std::vector<int> numeric = numeric_circle_windings(zeta, earring(ps.N));
  if (!curve_out.empty()) {
    auto file = open_output(curve_out);
    write_curve_csv(file, zeta);
  }

  const bool agree = numeric == combinatorial.per_circle && around.winding == combinatorial.around_zero;
  if (as_json) {
    out << json{{"per_circle", combinatorial.per_circle},
                {"around_zero", combinatorial.around_zero},
                {"numeric_per_circle", numeric},
                {"numeric_around_zero", around.winding},
                {"residual", around.residual},
                {"agree", agree}}
               .dump()
        << '\n';
  } else {
    out << std::setprecision(17);
    out << "per-circle windings:";
    for (int w : combinatorial.per_circle) out << ' ' << w;
    out << "\naround zero: " << combinatorial.around_zero << " (numeric " << around.winding
        << ", residual " << around.residual << ")\n";
    out << (agree ? "numeric and combinatorial windings agree\n" : "MISMATCH\n");
  }
  return agree ? kOk : kVerificationFailure;
}

TruncatedOperator generator_for(const std::string& text, int dim) {
  if (dim < 4) throw FlagError("--dim must be >= 4");
  const SurfaceClass cls = require_supported(parse_word(text));
  if (std::holds_alternative<Sphere>(cls.kind)) {
    throw UnsupportedWordError("the sphere has no shift-operator normal form");
  }
  return build_generator(cls.N, cls.k(), dim);
}

int cmd_spectrum(const std::string& text, int dim, const std::string& path, bool as_json,
                 std::ostream& out) {
  const TruncatedOperator op = generator_for(text, dim);
  const SpectrumReport report = spectrum_report(op, earring(static_cast<int>(op.block_count())));
  auto file = open_output(path);
  write_spectrum_csv(file, report);

  std::vector<std::string> blocks;
  for (const auto& b : op.blocks) blocks.push_back(describe(b.spec));
  if (as_json) {
    out << json{{"max_deviation", report.max_deviation},
                {"symbol_max_deviation", report.symbol_max_deviation},
                {"blocks", blocks},
                {"rows", report.entries.size()}}
               .dump()
        << '\n';
  } else {
    out << std::setprecision(17);
    out << "blocks:";
    for (const auto& b : blocks) out << " [" << b << ']';
    out << "\nmax_deviation " << report.max_deviation << "\nsymbol_max_deviation "
        << report.symbol_max_deviation << '\n';
  }
  return kOk;
}

int cmd_matrix(const std::string& text, int dim, const std::string& path, bool as_json,
               std::ostream& out) {
  const TruncatedOperator op = generator_for(text, dim);
  const Matrix dense = op.dense();
  auto file = open_output(path);
  write_matrix_csv(file, dense);
  const auto nonzeros = (dense.array() != Complex(0.0, 0.0)).count();
  if (as_json) {
    out << json{{"rows", dense.rows()}, {"cols", dense.cols()}, {"nonzeros", nonzeros}}.dump()
        << '\n';
  } else {
    out << dense.rows() << 'x' << dense.cols() << " matrix, " << nonzeros << " nonzeros\n";
  }
  return kOk;
}

int cmd_verify(int dim, double tol, const std::string& fault, bool as_json, std::ostream& out) {
  if (dim < 4) throw FlagError("--dim must be >= 4");
  if (!(tol > 0.0)) throw FlagError("--tol must be positive");
  if (!fault.empty() && fault != "bergman-weight") throw FlagError("unknown fault " + fault);

  const auto results = run_verification({dim, tol, fault});
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const CheckResult& r) { return r.passed; });
  if (as_json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"module", r.module}, {"check", r.name}, {"passed", r.passed},
                      {"detail", r.detail}});
    }
    out << json{{"passed", all}, {"checks", rows}}.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(16) << r.module << r.name;
      if (!r.passed) out << "  -- " << r.detail;
      out << '\n';
    }
    const auto passed = std::count_if(results.begin(), results.end(),
                                      [](const CheckResult& r) { return r.passed; });
    out << passed << '/' << results.size() << " checks passed\n";
  }
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed quantum surfaces from boundary words", "qsurf"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string word, second_word, out_path, curve_out, fault;
  bool classical = false;
  int dim = 256;
  int samples = 1024;
  double tol = 1e-9;

  const auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Machine-readable JSON output");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify the surface of a boundary word");
  classify_cmd->add_option("word", word, "Boundary word")->required();
  add_json(classify_cmd);

  auto* kgroups_cmd = app.add_subcommand("kgroups", "K-groups and their generators (JSON)");
  kgroups_cmd->add_option("word", word, "Boundary word")->required();
  add_json(kgroups_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "Compare two boundary words");
  iso_cmd->add_option("word1", word, "First boundary word")->required();
  iso_cmd->add_option("word2", second_word, "Second boundary word")->required();
  iso_cmd->add_flag("--classical", classical, "Compare homeomorphism types instead of (N,k)");
  add_json(iso_cmd);

  auto* windings_cmd = app.add_subcommand("windings", "Circle windings of the boundary curve");
  windings_cmd->add_option("word", word, "Boundary word")->required();
  windings_cmd->add_option("--samples", samples, "Samples per arc")->capture_default_str();
  windings_cmd->add_option("--curve-out", curve_out, "Write the sampled curve as CSV");
  add_json(windings_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of the truncated generator");
  spectrum_cmd->add_option("word", word, "Boundary word")->required();
  spectrum_cmd->add_option("--dim", dim, "Per-block dimension")->capture_default_str();
  spectrum_cmd->add_option("--out", out_path, "Spectrum CSV path")->required();
  add_json(spectrum_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Export the truncated generator matrix");
  matrix_cmd->add_option("word", word, "Boundary word")->required();
  matrix_cmd->add_option("--dim", dim, "Per-block dimension")->capture_default_str();
  matrix_cmd->add_option("--out", out_path, "Matrix CSV path")->required();
  add_json(matrix_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run every module invariant");
  verify_cmd->add_option("--dim", dim, "Truncation dimension")->capture_default_str();
  verify_cmd->add_option("--tol", tol, "Numerical tolerance")->capture_default_str();
  verify_cmd->add_option("--inject-fault", fault, "Harness self-test: bergman-weight");
  add_json(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalidFlags;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(word, as_json, out, err);
    if (kgroups_cmd->parsed()) return cmd_kgroups(word, out);
    if (iso_cmd->parsed()) return cmd_iso(word, second_word, classical, as_json, out);
    if (windings_cmd->parsed()) return cmd_windings(word, samples, curve_out, as_json, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(word, dim, out_path, as_json, out);
    if (matrix_cmd->parsed()) return cmd_matrix(word, dim, out_path, as_json, out);
    if (verify_cmd->parsed()) return cmd_verify(dim, tol, fault, as_json, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParseFailure;
  } catch (const NotPairedError& e) {
    err << e.what() << '\n';
    return kUnsupportedWord;
  } catch (const UnsupportedWordError& e) {
    err << e.what() << '\n';
    return kUnsupportedWord;
  } catch (const FlagError& e) {
    err << e.what() << '\n';
    return kInvalidFlags;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInvalidFlags;
}

}  // namespace qsurf::cli
