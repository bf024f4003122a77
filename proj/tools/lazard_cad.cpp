#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lazard/cli.hpp"

namespace {

std::string readInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw lazard::input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonArgs {
  std::string file;
  std::string output = "text";
  std::uint64_t seed = 1;
  unsigned probes = 8;
  std::string point;
  int maxLevel = -1;
  bool delineability = false;
};

void addCommon(CLI::App* cmd, CommonArgs& args, bool withPoint, bool withProbes) {
  cmd->add_option("file", args.file, "problem file ('-' for stdin)")->required();
  cmd->add_option("--output", args.output, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--seed", args.seed, "probe sampling seed")->capture_default_str();
  if (withProbes)
    cmd->add_option("--probes", args.probes, "probe points per cell")->capture_default_str();
  if (withPoint) cmd->add_option("--point", args.point, "comma-separated rational coordinates");
  cmd->add_option("--max-level", args.maxLevel, "stop after projecting to this level");
}

int runOne(lazard::Command command, const CommonArgs& args) {
  lazard::ProblemFile problem = lazard::parseProblem(readInput(args.file));
  lazard::RunOptions opt;
  opt.command = command;
  opt.jsonOutput = args.output == "json";
  opt.seed = args.seed;
  opt.probes = args.probes;
  opt.delineability = args.delineability;
  if (!args.point.empty()) opt.point = lazard::parsePointList(args.point);
  if (args.maxLevel >= 0) opt.maxLevel = static_cast<unsigned>(args.maxLevel);
  lazard::RunReport report = lazard::runCommand(problem, opt);
  if (opt.jsonOutput) {
    std::cout << report.payload.dump(2) << "\n";
  } else {
    std::cout << report.text;
    std::cerr << "elapsed: " << report.elapsedMs << " ms\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact CAD with the Lazard projection and valuation-invariant lifting"};
  app.require_subcommand(1);

  CommonArgs cadArgs, projectArgs, valArgs, evalArgs, cmpArgs;
  CLI::App* cad = app.add_subcommand("cad", "build a valuation-invariant CAD");
  addCommon(cad, cadArgs, false, true);
  cad->add_flag("--check-delineability", cadArgs.delineability,
                "probe full-dimensional base cells for delineability");
  CLI::App* project = app.add_subcommand("project", "emit the Lazard projection with provenance");
  addCommon(project, projectArgs, false, false);
  CLI::App* valuation = app.add_subcommand("valuation", "Lazard valuation at a point");
  addCommon(valuation, valArgs, true, false);
  CLI::App* eval = app.add_subcommand("eval", "Lazard evaluation at a lower-dimension point");
  addCommon(eval, evalArgs, true, false);
  CLI::App* compare = app.add_subcommand("compare-projections", "compare P_BM, P_L and P_M");
  addCommon(compare, cmpArgs, false, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cad->parsed()) return runOne(lazard::Command::Cad, cadArgs);
    if (project->parsed()) return runOne(lazard::Command::Project, projectArgs);
    if (valuation->parsed()) return runOne(lazard::Command::Valuation, valArgs);
    if (eval->parsed()) return runOne(lazard::Command::Eval, evalArgs);
    if (compare->parsed()) return runOne(lazard::Command::CompareProjections, cmpArgs);
  } catch (const lazard::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lazard::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
