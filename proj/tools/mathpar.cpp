#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mathpar/engine.hpp"
#include "mathpar/service.hpp"

namespace {

constexpr int kExitBadUsage = 2;

struct Display {
  bool latex = false;
};

bool report(const mathpar::ExecutionResult& result, const Display& display) {
  for (const auto& out : result.outputs) std::cout << (display.latex ? out.latexLine() : out.mathparLine()) << '\n';
  for (const auto& d : result.diagnostics) {
    std::cerr << mathpar::severityName(d.severity) << " at " << d.line << ':' << d.column << ": " << d.message << '\n';
  }
  std::cout.flush();
  return !result.hasErrors();
}

/// Applies --space and --floatpos; false when either is invalid.
bool configure(mathpar::Environment& env, const std::string& space, std::optional<int> floatpos) {
  if (!space.empty()) {
    auto r = mathpar::executeSection(env, "SPACE = " + space + ";");
    if (r.hasErrors()) {
      std::cerr << "invalid --space '" << space << "': " << r.diagnostics.front().message << '\n';
      return false;
    }
  }
  if (floatpos) {
    if (*floatpos < 0 || *floatpos > 30) {
      std::cerr << "--floatpos must lie between 0 and 30\n";
      return false;
    }
    env.space.floatpos = *floatpos;
  }
  return true;
}

int runFile(const std::string& path, const Display& display, mathpar::Environment& env) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << '\n';
    return kExitBadUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) {
    std::cerr << "cannot read " << path << '\n';
    return kExitBadUsage;
  }
  return report(mathpar::executeSection(env, text.str()), display) ? 0 : 1;
}

int repl(const Display& display, mathpar::Environment& env) {
  const bool interactive = ::isatty(STDIN_FILENO);
  if (interactive) std::cout << "Enter statements; a blank line runs them. :clear resets, :quit exits.\n";
  bool ok = true;
  std::string group, line;
  auto flush = [&] {
    if (group.find_first_not_of(" \t\r\n") != std::string::npos) ok = report(mathpar::executeSection(env, group), display) && ok;
    group.clear();
  };
  while (true) {
    if (interactive) std::cout << (group.empty() ? "mathpar> " : "     ... ") << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (group.empty() && line == ":quit") return ok ? 0 : 1;
    if (group.empty() && line == ":clear") {
      mathpar::clearEnvironment(env);
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
      continue;
    }
    group += line;
    group += '\n';
  }
  flush();
  return ok ? 0 : 1;
}

int serve(std::optional<int> port) {
  mathpar::ServiceConfig config = mathpar::ServiceConfig::fromEnvironment();
  if (port) config.port = *port;
  mathpar::HttpService service(config);
  int bound = service.bind();
  if (bound < 0) {
    std::cerr << "cannot bind " << config.host << ':' << config.port << '\n';
    return 1;
  }
  std::cerr << "mathpar service listening on " << config.host << ':' << bound << '\n';
  return service.serve() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mathpar computer algebra kernel"};
  app.require_subcommand(1);

  Display display;
  std::string space;
  std::optional<int> floatpos;
  auto addDisplayFlags = [&](CLI::App* cmd) {
    cmd->add_flag("--latex", display.latex, "Print LaTeX instead of Mathpar text");
    cmd->add_option("--space", space, "Initial space, e.g. Q[x,y]");
    cmd->add_option("--floatpos", floatpos, "Digits after the decimal point");
  };

  std::string file;
  CLI::App* run = app.add_subcommand("run", "Execute a script file as one section");
  run->add_option("file", file, "Script file")->required();
  addDisplayFlags(run);

  CLI::App* replCmd = app.add_subcommand("repl", "Interactive session; a blank line runs the pending statements");
  addDisplayFlags(replCmd);

  std::optional<int> port;
  CLI::App* serveCmd = app.add_subcommand("serve", "Start the HTTP service");
  serveCmd->add_option("--port", port, "Port (default MATHPAR_PORT or 8080)")->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadUsage;
  }

  if (*serveCmd) return serve(port);

  mathpar::Environment env;
  if (!configure(env, space, floatpos)) return kExitBadUsage;
  if (*run) return runFile(file, display, env);
  return repl(display, env);
}
