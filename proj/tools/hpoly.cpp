// hpoly: command-line driver for the polytope library.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "hpoly/apoly_io.hpp"
#include "hpoly/catalog.hpp"
#include "hpoly/constructions.hpp"
#include "hpoly/coset.hpp"
#include "hpoly/error.hpp"
#include "hpoly/perm_group.hpp"
#include "hpoly/presentation.hpp"
#include "hpoly/report.hpp"
#include "hpoly/validate.hpp"
#include "hpoly/verify.hpp"

namespace fs = std::filesystem;
using namespace hpoly;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// A path to an .apoly or .grp file, or the name of a catalog entry.
FacePoset load_input(const std::string& arg) {
  if (fs::exists(arg)) {
    if (fs::path(arg).extension() == ".grp") return poset_from_presentation(read_presentation(arg));
    return read_poset(fs::path(arg));
  }
  if (arg.find('/') == std::string::npos && fs::path(arg).extension().empty()) return catalog_get(arg);
  throw Error("no such file: " + arg);
}

void emit(const FacePoset& p, const std::string& out) {
  if (out.empty() || out == "-") {
    write_poset(p, std::cout);
  } else {
    write_poset(p, fs::path(out));
  }
}

int cmd_validate(const std::string& in) {
  const FacePoset p = load_input(in);
  const ValidationReport r = validate(p);
  if (r.ok()) {
    std::cout << "valid: rank " << p.rank() << ", " << r.flag_count << " flags\n";
    return kOk;
  }
  std::cout << describe(r) << '\n';
  return kFailed;
}

int cmd_analyze(const std::string& in, const std::string& format) {
  const FacePoset p = load_input(in);
  require_valid(p, in.c_str());
  const SymmetryAnalysis a(p);
  std::cout << format_report(a, format == "machine" ? ReportFormat::machine : ReportFormat::text);
  return kOk;
}

int cmd_construct(const std::string& op, const std::string& in, const std::string& out, bool no_check,
                  std::size_t max_vertices) {
  const FacePoset p = load_input(in);
  TwoPowerOptions opts;
  opts.check = !no_check;
  opts.max_vertices = max_vertices;
  FacePoset result;
  if (op == "medial") {
    result = medial(p);
  } else if (op == "halved") {
    result = halved(p);
  } else if (op == "twopower") {
    result = two_power(p, opts);
  } else if (op == "extension") {
    result = chiral_extension(p, opts);
  } else if (op == "alternating") {
    result = alternating(p).poset;
  } else {
    require_valid(p, "dual input");
    result = canonicalize(dual(p));
  }
  emit(result, out);
  return kOk;
}

int cmd_group(const std::string& file, bool order, bool build, const std::string& out, std::size_t limit) {
  const GroupPresentation pres = read_presentation(file);
  if (build) {
    emit(poset_from_presentation(pres, limit), out);
    return kOk;
  }
  EnumerationStats stats;
  const CosetTable t = coset_enumerate(pres, limit, &stats);
  if (order) {
    std::cout << t.coset_count << '\n';
  } else {
    std::cout << "cosets " << t.coset_count << "\ndefined " << stats.defined << "\nmax-live " << stats.max_live
              << "\ncoincidences " << stats.coincidences << '\n';
  }
  if (pres.order && *pres.order != t.coset_count) {
    std::cerr << "declared order " << *pres.order << " does not match\n";
    return kFailed;
  }
  return kOk;
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& out) {
  if (action == "list") {
    for (const auto& e : catalog_entries()) {
      std::cout << e.name << (e.source == CatalogSource::builtin ? "  builtin  " : "  " + e.file + "  ")
                << e.description << '\n';
    }
    return kOk;
  }
  if (action == "show") {
    if (name.empty()) throw CLI::ValidationError("catalog show needs an entry name");
    emit(catalog_get(name), out);
    return kOk;
  }
  // check
  int status = kOk;
  for (const auto& e : catalog_entries()) {
    if (!name.empty() && e.name != name) continue;
    try {
      catalog_get(e.name);
      std::cout << "ok    " << e.name << '\n';
    } catch (const Error& err) {
      std::cout << "FAIL  " << e.name << ": " << err.what() << '\n';
      status = kFailed;
    }
  }
  return status;
}

int cmd_verify(bool slow, const std::vector<std::string>& only) {
  VerifyOptions opts;
  opts.slow = slow;
  opts.only = only;
  opts.on_result = [](const CheckResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  (" << r.seconds << " s)\n";
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    for (const auto& n : r.notes) std::cout << "    note: " << n << '\n';
    std::cout.flush();
  };
  bool ok = true;
  for (const auto& r : run_verification(opts)) ok = ok && r.passed;
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abstract polytopes: validation, symmetry, constructions"};
  app.require_subcommand(1);

  std::string in, out, format = "text", op, file, action = "list", name, suite;
  bool no_check = false, order = false, build = false, slow = false;
  std::size_t max_vertices = 16, limit = 2'000'000;
  std::vector<std::string> only;

  auto* validate_cmd = app.add_subcommand("validate", "check the polytope axioms");
  validate_cmd->add_option("input", in, ".apoly/.grp file or catalog name")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "symmetry and hereditary report");
  analyze_cmd->add_option("input", in, ".apoly/.grp file or catalog name")->required();
  analyze_cmd->add_option("--report-format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  auto* construct_cmd = app.add_subcommand("construct", "derive a new polytope");
  construct_cmd->add_option("operation", op)
      ->required()
      ->check(CLI::IsMember({"medial", "halved", "twopower", "extension", "alternating", "dual"}));
  construct_cmd->add_option("input", in, ".apoly/.grp file or catalog name")->required();
  construct_cmd->add_option("-o,--output", out, "output .apoly (default stdout)");
  construct_cmd->add_flag("--no-check", no_check, "skip the group-order check of 2^K");
  construct_cmd->add_option("--max-vertices", max_vertices, "largest K accepted by 2^K");

  auto* group_cmd = app.add_subcommand("group", "coset enumeration of a presentation");
  group_cmd->add_option("file", file, ".grp presentation")->required()->check(CLI::ExistingFile);
  auto* order_opt = group_cmd->add_flag("--order", order, "print the group order only");
  group_cmd->add_flag("--build", build, "build the polytope and write it")->excludes(order_opt);
  group_cmd->add_option("-o,--output", out, "output .apoly for --build");
  group_cmd->add_option("--limit", limit, "maximum live cosets");

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in instances");
  catalog_cmd->add_option("action", action, "list, show or check")->check(CLI::IsMember({"list", "show", "check"}));
  catalog_cmd->add_option("name", name, "entry name");
  catalog_cmd->add_option("-o,--output", out, "output .apoly for show");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember({"paper"}));
  verify_cmd->add_flag("--slow", slow, "include the expensive checks");
  verify_cmd->add_option("--only", only, "criterion ids, e.g. AC3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(in);
    if (*analyze_cmd) return cmd_analyze(in, format);
    if (*construct_cmd) return cmd_construct(op, in, out, no_check, max_vertices);
    if (*group_cmd) return cmd_group(file, order, build, out, limit);
    if (*catalog_cmd) return cmd_catalog(action, name, out);
    if (*verify_cmd) return cmd_verify(slow, only);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "hpoly: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hpoly: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
