#include "tverberg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "tverberg/constructions.hpp"
#include "tverberg/error.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/io.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/suites.hpp"

namespace tverberg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

ComplexFile load_complex(const std::string& path) {
  auto in = open(path);
  try {
    return read_complex(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(':') + 2));
  }
}

PointConfiguration load_points(const std::string& path) {
  auto in = open(path);
  return read_points(in);
}

int default_jobs() {
  if (const char* env = std::getenv("TVERBERG_JOBS")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("TVERBERG_JOBS must be a positive integer");
  }
  return 0;
}

struct Options {
  // complex build
  std::string kind;
  int m = 0, n = 0, r = 2, wise = 2, dim = 0, d = 0, simplex = -1;
  std::string input, left, right, colors;
  bool text = false;
  // homology
  unsigned field = 0;
  bool serial = false;
  // degree
  int p = 0;
  // tverberg
  std::optional<int> max_dim;
  bool equal_coeffs = false, exhaustive = false;
  // verify
  std::string suite;
  SuiteOptions suite_options;
  std::string primes;
  bool human = false;
  int jobs = 0;
};

SimplicialComplex build_input_complex(const Options& o) {
  if (o.simplex >= 0) {
    if (!o.input.empty()) throw UsageError("--simplex and --input are exclusive");
    return full_simplex(o.simplex);
  }
  if (o.input.empty()) throw UsageError("--input or --simplex is required");
  return load_complex(o.input).complex;
}

void emit_complex(std::ostream& out, const SimplicialComplex& k, const GroupAction* action, bool text) {
  if (text)
    out << write_complex_text(k);
  else
    out << complex_to_json(k, action).dump(2) << '\n';
}

int complex_build(const Options& o, std::ostream& out) {
  if (o.kind == "chessboard") {
    if (o.m < 1 || o.n < 1) throw UsageError("chessboard needs --m and --n >= 1");
    auto c = chessboard(o.m, o.n);
    emit_complex(out, c.complex, &c.column_rotation, o.text);
  } else if (o.kind == "deleted-join") {
    auto dj = deleted_join(build_input_complex(o), o.r, o.wise);
    emit_complex(out, dj.complex, &dj.action, o.text);
  } else if (o.kind == "join") {
    if (o.left.empty() || o.right.empty()) throw UsageError("join needs --left and --right");
    emit_complex(out, join(load_complex(o.left).complex, load_complex(o.right).complex), nullptr, o.text);
  } else if (o.kind == "skeleton") {
    emit_complex(out, skeleton(build_input_complex(o), o.dim), nullptr, o.text);
  } else if (o.kind == "witness") {
    if (o.d < 1) throw UsageError("witness needs --d >= 1");
    out << write_points(witness_configuration(o.d, o.r));
  } else {
    throw UsageError("unknown construction '" + o.kind + "'");
  }
  return 0;
}

int homology_cmd(const Options& o, std::ostream& out) {
  auto k = load_complex(o.input).complex;
  const Coefficients c = o.field ? Coefficients::field(o.field) : Coefficients::integers();
  auto h = o.serial ? homology_serial(chain_complex(k), c) : homology(chain_complex(k), c);
  out << homology_to_json(h).dump(2) << '\n';
  return 0;
}

int degree_cmd(const Options& o, std::ostream& out) {
  if (o.p < 3) throw UsageError("--p must be at least 3");
  Json j;
  j["p"] = o.p;
  j["degree"] = chessboard_column_degree(o.p).get_str();
  out << j.dump(2) << '\n';
  return 0;
}

int radon_cmd(const Options& o, std::ostream& out) {
  auto p = load_points(o.input);
  out << certificate_to_json(radon_partition(p)).dump(2) << '\n';
  return 0;
}

int tverberg_cmd(const Options& o, std::ostream& out) {
  auto p = load_points(o.input);
  SearchConstraints c;
  c.max_face_dimension = o.max_dim;
  c.equal_coefficients = o.equal_coeffs;
  if (!o.colors.empty()) {
    auto in = open(o.colors);
    c.rainbow = read_colors(in, p.size());
  }
  auto found = tverberg_search(p, o.r, c);
  if (found) {
    out << certificate_to_json(*found).dump(2) << '\n';
    return 0;
  }
  Json j;
  j["result"] = "none";
  if (o.exhaustive) {
    j["families_checked"] = candidate_family_count(p.size(), o.r).get_str();
  }
  out << j.dump(2) << '\n';
  return 0;
}

std::vector<int> parse_primes(const std::string& s) {
  std::vector<int> primes;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 3) throw UsageError("bad prime '" + item + "' in --primes");
    primes.push_back(v);
  }
  if (primes.empty()) throw UsageError("--primes is empty");
  return primes;
}

int verify_cmd(Options& o, std::ostream& out) {
  auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite '" + o.suite + "'");
  if (!o.primes.empty()) o.suite_options.primes = parse_primes(o.primes);
  o.suite_options.jobs = o.jobs;
  Report report = run_suite(o.suite, o.suite_options);
  if (o.human)
    out << report.to_table(o.suite_options);
  else
    out << report.to_json(o.suite_options).dump(2) << '\n';
  return report.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact tools for chessboard complexes and Tverberg partitions", "tverberg"};
  app.require_subcommand(1, 1);
  app.add_option("--jobs", o.jobs, "Worker threads (default: TVERBERG_JOBS or all cores)")->check(CLI::PositiveNumber);

  auto* complex = app.add_subcommand("complex", "Build complexes");
  complex->require_subcommand(1, 1);
  auto* build = complex->add_subcommand("build", "Build a complex or witness configuration");
  build->add_option("kind", o.kind, "chessboard | deleted-join | join | skeleton | witness")->required();
  build->add_option("--m", o.m, "Rows");
  build->add_option("--n", o.n, "Columns");
  build->add_option("--r", o.r, "Number of copies or parts");
  build->add_option("--wise", o.wise, "Deletion arity");
  build->add_option("--dim", o.dim, "Skeleton dimension");
  build->add_option("--d", o.d, "Ambient dimension");
  build->add_option("--simplex", o.simplex, "Use the full simplex on N+1 vertices as input");
  build->add_option("--input", o.input, "Input complex");
  build->add_option("--left", o.left, "Left join factor");
  build->add_option("--right", o.right, "Right join factor");
  build->add_flag("--text", o.text, "Emit the text format");

  auto* hom = app.add_subcommand("homology", "Integral or mod-p homology of a complex file");
  hom->add_option("--input", o.input)->required();
  hom->add_option("--field", o.field, "Prime p for F_p coefficients");
  hom->add_flag("--serial", o.serial, "Use the single-threaded path");

  auto* deg = app.add_subcommand("degree", "Degree of the column map on the (p-1) x p chessboard");
  deg->add_option("--p", o.p)->required();

  auto* radon = app.add_subcommand("radon", "Radon partition of d+2 points");
  radon->add_option("--input", o.input)->required();

  auto* tv = app.add_subcommand("tverberg", "Search for a Tverberg partition");
  tv->add_option("--input", o.input)->required();
  tv->add_option("--r", o.r)->required();
  tv->add_option("--max-dim", o.max_dim);
  tv->add_option("--colors", o.colors);
  tv->add_flag("--equal-coeffs", o.equal_coeffs);
  tv->add_flag("--exhaustive", o.exhaustive, "Report the number of families ruled out");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite)->required();
  verify->add_option("--seed", o.suite_options.seed);
  verify->add_flag("--timing", o.suite_options.timing);
  verify->add_flag("--dense-rationals", o.suite_options.dense_rationals);
  verify->add_option("--primes", o.primes, "Comma-separated primes");
  verify->add_option("--trials", o.suite_options.trials)->check(CLI::PositiveNumber);
  verify->add_flag("--human", o.human);
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  try {
    o.jobs = default_jobs();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    if (build->parsed()) return complex_build(o, out);
    if (hom->parsed()) return homology_cmd(o, out);
    if (deg->parsed()) return degree_cmd(o, out);
    if (radon->parsed()) return radon_cmd(o, out);
    if (tv->parsed()) return tverberg_cmd(o, out);
    if (verify->parsed()) return verify_cmd(o, out);
    throw UsageError("no subcommand");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (complex->parsed() ? complex->help() : app.help());
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace tverberg::cli
