#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "npure/problem.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const npure::CommandResult& result, const std::string& format) {
  if (format == "machine")
    std::cout << result.machine.dump(2) << "\n";
  else
    std::cout << result.text;
  return result.exit_code;
}

npure::ModuleFamily make_family(const std::string& kind, long max, const std::string& rings) {
  npure::ModuleFamily family;
  family.kind = kind == "rank2" ? npure::ModuleFamily::Kind::kRankTwo
                                : npure::ModuleFamily::Kind::kCyclic;
  family.max = max;
  family.over_integers = rings == "z" || rings == "both";
  family.over_modular = rings == "zmod" || rings == "both";
  return family;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"npure: exact purity checking for finitely generated modules over Z and Z/mZ"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  npure::CommonOptions common;
  app.add_option("--format", format, "text or machine report")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--n", common.level, "purity level n (default 2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--policy", common.policy,
                 "exhaustive | residue | bounded:<B> (default: auto-selected)");
  app.add_option("--threads", common.threads, "worker threads for scans (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", common.timing,
               "include wall-clock timing in machine reports (off keeps them byte-reproducible)");

  std::string check_input, enum_input, maxpure_input;
  auto* check = app.add_subcommand("check", "run the checks requested in an input document");
  check->add_option("input", check_input, "input file, or - for stdin")->required();

  app.add_subcommand("paper-suite", "run the fixed example suite and proposition scans");

  std::string scan_claim, mine_pattern;
  std::string scan_kind = "cyclic", scan_rings = "both";
  long scan_max = 16;
  auto* scan = app.add_subcommand("scan", "exhaustively scan a claim over a module family");
  scan->add_option("claim", scan_claim, "claim identifier (see --list via bad name)")->required();
  scan->add_option("--family", scan_kind, "cyclic | rank2")
      ->check(CLI::IsMember({"cyclic", "rank2"}));
  scan->add_option("--max", scan_max, "size bound (m <= max, or a*b <= max)")
      ->check(CLI::PositiveNumber);
  scan->add_option("--rings", scan_rings, "z | zmod | both")
      ->check(CLI::IsMember({"z", "zmod", "both"}));

  std::string mine_kind = "cyclic", mine_rings = "zmod";
  long mine_max = 16;
  auto* mine = app.add_subcommand("mine", "mine witnesses over a module family");
  mine->add_option("pattern", mine_pattern, "witness pattern, e.g. n-pure-not-(n-1)-pure")
      ->required();
  mine->add_option("--family", mine_kind, "cyclic | rank2")
      ->check(CLI::IsMember({"cyclic", "rank2"}));
  mine->add_option("--max", mine_max, "size bound")->check(CLI::PositiveNumber);
  mine->add_option("--rings", mine_rings, "z | zmod | both")
      ->check(CLI::IsMember({"z", "zmod", "both"}));

  auto* enumerate = app.add_subcommand("enumerate", "list all submodules of the input module");
  enumerate->add_option("input", enum_input, "input file, or - for stdin")->required();

  std::string maxpure_submodule;
  bool no_strict = false;
  auto* maxpure =
      app.add_subcommand("maximal-pure", "maximal pure submodules of a named submodule");
  maxpure->add_option("input", maxpure_input, "input file, or - for stdin")->required();
  maxpure->add_option("--submodule", maxpure_submodule,
                      "name of K (default: the whole module)");
  maxpure->add_flag("--include-vacuous", no_strict,
                    "also admit the vacuous case N = K when K itself is pure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (app.got_subcommand(check))
      return emit(npure::cmd_check(read_input(check_input), common), format);
    if (app.got_subcommand("paper-suite"))
      return emit(npure::cmd_paper_suite(common), format);
    if (app.got_subcommand(scan))
      return emit(
          npure::cmd_scan(scan_claim, make_family(scan_kind, scan_max, scan_rings), common),
          format);
    if (app.got_subcommand(mine))
      return emit(
          npure::cmd_mine(mine_pattern, make_family(mine_kind, mine_max, mine_rings), common),
          format);
    if (app.got_subcommand(enumerate))
      return emit(npure::cmd_enumerate(read_input(enum_input), common), format);
    if (app.got_subcommand(maxpure))
      return emit(npure::cmd_maximal_pure(read_input(maxpure_input), maxpure_submodule,
                                          !no_strict, common),
                  format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
