#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct Outcome {
  int exitCode = -1;
  std::string out;
};

Outcome shell(const std::string& command) {
  Outcome o;
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  o.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string scriptFile(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mathpar_cli_" + name + ".mp");
  std::ofstream(path) << text;
  return path.string();
}

const std::string kCli = MATHPAR_CLI;

}  // namespace

TEST_CASE("run prints the integration example") {
  const auto file = scriptFile("calculus",
                               "SPACE = Q[x];\nf = (2x^2 + 1)^3;\nl = \\int(f) d x;\ndl = \\D(l, x);\n"
                               "d2l = \\D(l, x^2);\n\\print(f, l, dl, d2l);\n");
  Outcome o = shell(kCli + " run " + file);
  CHECK(o.exitCode == 0);
  CHECK(o.out ==
        "f = 8x^6+12x^4+6x^2+1\nl = (8/7)x^7+(12/5)x^5+2x^3+x\ndl = 8x^6+12x^4+6x^2+1\nd2l = 48x^5+48x^3+12x\n");
  Outcome latex = shell(kCli + " run --latex " + file);
  CHECK(latex.out.find("l = \\frac{8}{7}x^{7}") != std::string::npos);
}

TEST_CASE("floatpos and space flags") {
  const auto file = scriptFile("value", "f = \\sin(x^2 + \\tg(y^3 + x));\ng = \\value(f, [1, 2]);\n\\print(g);\n");
  CHECK(shell(kCli + " run " + file).out == "g = 0.52\n");
  CHECK(shell(kCli + " run --floatpos 4 " + file).out == "g = 0.5207\n");
  const auto tropical = scriptFile("tropical", "a = 2; b = 9; \\print(a + b, a b)");
  CHECK(shell(kCli + " run --space 'ZMaxMult[x, y]' " + tropical).out == "9\n18\n");
}

TEST_CASE("exit codes") {
  CHECK(shell(kCli + " run " + scriptFile("empty", "")).exitCode == 0);
  CHECK(shell(kCli + " run " + scriptFile("empty", "")).out.empty());
  CHECK(shell(kCli + " run " + scriptFile("bad", "x = 1/0;")).exitCode == 1);
  CHECK(shell(kCli + " run /nonexistent/file.mp").exitCode == 2);
  CHECK(shell(kCli + " run --nonsense " + scriptFile("empty", "")).exitCode == 2);
  CHECK(shell(kCli + " run --floatpos 99 " + scriptFile("empty", "")).exitCode == 2);
  CHECK(shell(kCli + " run --space 'Nope[x]' " + scriptFile("empty", "")).exitCode == 2);
  CHECK(shell(kCli).exitCode == 2);
}

TEST_CASE("repl runs blank-line separated groups in one environment") {
  Outcome o = shell("printf 'SPACE = Z[x];\\na = 2;\\nb = a + 3\\n\\nb x\\n\\n:clear\\nb\\n' | " + kCli + " repl");
  CHECK(o.out == "b = 5\n5x\n");
  CHECK(o.exitCode == 1);
}
