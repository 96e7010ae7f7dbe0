#include "qforge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qforge/embedding.hpp"
#include "qforge/formulas.hpp"
#include "qforge/graph.hpp"
#include "qforge/oracle.hpp"
#include "qforge/spinal.hpp"

namespace qforge::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// "complete:<p>"
std::int64_t parse_complete_spine(const std::string& spec) {
  constexpr std::string_view prefix = "complete:";
  if (spec.rfind(prefix, 0) != 0) throw InputError("unknown spine '" + spec + "'");
  const std::string digits = spec.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }))
    throw InputError("bad spine order in '" + spec + "'");
  return std::stoll(digits);
}

struct MinorderArgs {
  std::int64_t genus = 0;
  std::optional<std::int64_t> scan_to;
};

int run_minorder(const MinorderArgs& a, std::ostream& out) {
  if (!a.scan_to) {
    out << formulas::min_order(a.genus).summary() << "\n";
    return kSuccess;
  }
  if (*a.scan_to < a.genus) throw InputError("--scan end must not precede -g");
  out << std::setw(8) << "g" << "  " << std::setw(6) << "kind" << "  " << std::setw(12)
      << "value" << "  source\n";
  for (std::int64_t g = a.genus; g <= *a.scan_to; ++g) {
    const auto r = formulas::min_order(g);
    std::string value = r.kind == formulas::Kind::Exact
                            ? std::to_string(r.value)
                            : "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]";
    out << std::setw(8) << g << "  " << std::setw(6)
        << (r.kind == formulas::Kind::Exact ? "exact" : "bounds") << "  " << std::setw(12) << value
        << "  " << formulas::to_string(r.source) << "\n";
  }
  return kSuccess;
}

struct BuildArgs {
  std::string spine;
  std::string spine_file;
  std::int64_t minus = 0;
  std::string output;
};

int run_build(const BuildArgs& a, std::ostream& out) {
  if (a.spine.empty() == a.spine_file.empty())
    throw InputError("give exactly one of --spine or --spine-file");
  std::optional<RotationSystem> embedding;
  std::int64_t genus = 0;
  std::string minimal;
  if (!a.spine.empty()) {
    const auto p = parse_complete_spine(a.spine);
    auto instance = spinal::build_instance(p, a.minus);
    genus = instance.genus;
    minimal = instance.certified_minimal ? "yes" : "not certified (needs p >= 4(m+1) and genus >= 1)";
    embedding = std::move(instance.embedding);
  } else {
    if (a.minus != 0) throw InputError("--minus only applies to complete spines");
    const Graph spine = load_graph(read_file(a.spine_file));
    embedding = spinal::build_spinal(spine);
    genus = betti(spine);
    const auto best = formulas::min_order(genus);
    const bool exact_match = best.kind == formulas::Kind::Exact &&
                             best.value == static_cast<std::int64_t>(embedding->vertex_count());
    minimal = exact_match ? "yes (order equals the exact minimum)" : "not certified";
  }
  write_file(a.output, save_embedding(*embedding, genus));
  const auto report = validate_quadrangulation(*embedding);
  out << "order " << report.alpha0 << ", genus " << report.genus << ", faces " << report.alpha2
      << ", edges " << report.alpha1 << "\n";
  out << "minimal: " << minimal << "\n";
  out << "wrote " << a.output << "\n";
  return kSuccess;
}

int run_verify(const std::string& path, std::ostream& out) {
  const auto doc = parse_embedding(read_file(path));
  const auto report = validate_quadrangulation(doc.embedding);
  out << "order " << report.alpha0 << ", edges " << report.alpha1 << ", faces " << report.alpha2
      << ", euler characteristic " << report.euler_characteristic << ", genus " << report.genus
      << "\n";
  bool ok = report.is_quadrangulation;
  for (const auto& f : report.failures) out << "  " << f << "\n";
  if (doc.declared_genus && *doc.declared_genus != report.genus) {
    out << "  declared genus " << *doc.declared_genus << " does not match traced genus "
        << report.genus << "\n";
    ok = false;
  }
  out << (ok ? "quadrangulation: ok" : "quadrangulation: FAILED") << "\n";
  return ok ? kSuccess : kVerificationFailed;
}

int run_interlace(const std::string& input, const std::string& output, std::ostream& out) {
  const Graph g = load_graph(read_file(input));
  const Graph doubled = interlace(g);
  write_file(output, save_graph(doubled));
  out << "interlacement: " << doubled.vertex_count() << " vertices, " << doubled.edge_count()
      << " edges\nwrote " << output << "\n";
  return kSuccess;
}

struct OracleArgs {
  std::int64_t genus = 0;
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> max_order;
  std::uint64_t max_nodes = 100'000'000;
  double time_cap_seconds = 15 * 60;
  std::string output;
};

int run_oracle(const OracleArgs& a, std::ostream& out) {
  oracle::SearchBudget budget;
  budget.max_nodes = a.max_nodes;
  budget.time_cap = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_cap_seconds * 1000));
  if (budget.max_nodes == 0 || budget.time_cap.count() <= 0)
    throw InputError("search budget must be positive");
  const std::string output =
      a.output.empty() ? "oracle-witness-g" + std::to_string(a.genus) + ".json" : a.output;

  oracle::Verdict verdict;
  std::optional<RotationSystem> witness;
  std::int64_t order = 0;
  if (a.order) {
    const auto r = oracle::exists_quadrangulation(*a.order, a.genus, budget);
    verdict = r.verdict;
    witness = r.witness;
    order = *a.order;
    out << "n=" << order << " g=" << a.genus << ": " << oracle::to_string(verdict)
        << (r.arithmetic ? " (edge count)" : "") << ", " << r.graphs_examined << " graphs, "
        << r.nodes << " nodes\n";
  } else {
    const bool large = a.genus > 2;
    const auto r = oracle::min_order_bruteforce(a.genus, budget, a.max_order, large);
    for (const auto& p : r.probes)
      out << "n=" << p.order << " g=" << a.genus << ": " << oracle::to_string(p.result.verdict)
          << (p.result.arithmetic ? " (edge count)" : "") << ", " << p.result.graphs_examined
          << " graphs, " << p.result.nodes << " nodes\n";
    verdict = r.verdict;
    witness = r.witness;
    order = r.order;
    if (verdict == oracle::Verdict::Exists)
      out << "minimum order for genus " << a.genus << ": " << order << "\n";
  }
  if (verdict == oracle::Verdict::Inconclusive) {
    out << "search budget exhausted at n=" << order << "\n";
    return kInconclusive;
  }
  if (verdict == oracle::Verdict::DoesNotExist) return kVerificationFailed;
  write_file(output, save_embedding(*witness, a.genus));
  out << "wrote " << output << "\n";
  return kSuccess;
}

int run_spectrum(std::int64_t genus, std::int64_t max_p, std::ostream& out) {
  const auto orders = formulas::spectrum(genus, max_p);
  out << "spinal orders for genus " << genus << " (p <= " << max_p << "):";
  for (auto o : orders) out << " " << o;
  out << "\n";
  return kSuccess;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-order quadrangulations of orientable surfaces", "qforge"};
  app.require_subcommand(1);

  MinorderArgs minorder;
  auto* c_minorder = app.add_subcommand("minorder", "Minimum order of a quadrangulation of genus g");
  c_minorder->add_option("-g,--genus", minorder.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  c_minorder->add_option("--scan", minorder.scan_to, "Tabulate genera g..G")->check(CLI::NonNegativeNumber);

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "Build a spinal quadrangulation");
  c_build->add_option("--spine", build.spine, "complete:<p>");
  c_build->add_option("--spine-file", build.spine_file, "Graph document");
  c_build->add_option("--minus", build.minus, "Edges removed from the complete spine")
      ->check(CLI::NonNegativeNumber);
  c_build->add_option("-o,--output", build.output, "Embedding document to write")->required();

  std::string verify_path;
  auto* c_verify = app.add_subcommand("verify", "Check that an embedding is a quadrangulation");
  c_verify->add_option("embedding", verify_path, "Embedding document")->required();

  std::string interlace_in, interlace_out;
  auto* c_interlace = app.add_subcommand("interlace", "Write the 2-fold interlacement of a graph");
  c_interlace->add_option("graph", interlace_in, "Graph document")->required();
  c_interlace->add_option("-o,--output", interlace_out, "Graph document to write")->required();

  OracleArgs oracle_args;
  auto* c_oracle = app.add_subcommand("oracle", "Exhaustive search for quadrangulations");
  c_oracle->add_option("-g,--genus", oracle_args.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  c_oracle->add_option("-n,--order", oracle_args.order, "Decide a single order instead of scanning");
  c_oracle->add_option("--max-order", oracle_args.max_order, "Stop the scan at this order");
  c_oracle->add_option("--max-nodes", oracle_args.max_nodes, "Backtracking node cap");
  c_oracle->add_option("--time-cap", oracle_args.time_cap_seconds, "Time cap in seconds");
  c_oracle->add_option("-o,--output", oracle_args.output, "Witness embedding to write");

  std::int64_t spectrum_genus = 0, spectrum_max_p = 2;
  auto* c_spectrum = app.add_subcommand("spectrum", "Orders of spinal quadrangulations of genus g");
  c_spectrum->add_option("-g,--genus", spectrum_genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  c_spectrum->add_option("--max-p", spectrum_max_p, "Largest spine order")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (c_minorder->parsed()) return run_minorder(minorder, out);
    if (c_build->parsed()) return run_build(build, out);
    if (c_verify->parsed()) return run_verify(verify_path, out);
    if (c_interlace->parsed()) return run_interlace(interlace_in, interlace_out, out);
    if (c_oracle->parsed()) return run_oracle(oracle_args, out);
    if (c_spectrum->parsed()) return run_spectrum(spectrum_genus, spectrum_max_p, out);
  } catch (const GenusMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInvalidInput;
}

}  // namespace qforge::cli
