#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mindswap/cycle_products.hpp"
#include "mindswap/swap_log.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

const char* cli_path() {
  const char* path = std::getenv("MINDSWAP_BIN");
  REQUIRE_MESSAGE(path != nullptr, "MINDSWAP_BIN must point at the binary");
  return path;
}

fs::path temp_file(const std::string& stem) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("mindswap_test_" + std::to_string(getpid()) + "_" + stem + "_" +
          std::to_string(counter++));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

RunResult run_cli(const std::string& args, const std::string& input = "") {
  const fs::path in = temp_file("in");
  const fs::path out = temp_file("out");
  spill(in, input);
  const std::string command = std::string("'") + cli_path() + "' " + args +
                              " < '" + in.string() + "' > '" + out.string() +
                              "' 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  fs::remove(in);
  fs::remove(out);
  return result;
}

}  // namespace

TEST_CASE("undo emits the optimal plan for the example log") {
  const RunResult r = run_cli("undo", "2 3\n2 1\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# method: optimal\n"
        "# factors: 6\n"
        "# outsiders: 4 5\n"
        "# swaps below are chronological: apply from the first line down\n"
        "1 4\n"
        "3 5\n"
        "2 5\n"
        "1 5\n"
        "3 4\n"
        "4 5\n");
}

TEST_CASE("undo --method keeler") {
  const RunResult r = run_cli("undo --method keeler", "2 3\n2 1\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# method: keeler\n"
        "# factors: 6\n"
        "# outsiders: 4 5\n"
        "# swaps below are chronological: apply from the first line down\n"
        "1 5\n"
        "3 4\n"
        "3 5\n"
        "2 4\n"
        "1 4\n"
        "4 5\n");
}

TEST_CASE("undo --method auto-special recognizes the canonical products") {
  // chronological logs: the first line is the swap that happened first
  const RunResult p1 = run_cli("undo --method auto-special",
                               "4 5\n3 4\n2 3\n1 2\n");
  CHECK(p1.code == 0);
  CHECK(p1.out.find("# method: p1-special") == 0);
  CHECK(p1.out.find("# outsiders: none") != std::string::npos);

  const RunResult p2 = run_cli("undo --method auto-special",
                               "1 5\n2 5\n3 5\n4 5\n");
  CHECK(p2.code == 0);
  CHECK(p2.out.find("# method: p2-special") == 0);

  const RunResult other = run_cli("undo --method auto-special", "1 3\n");
  CHECK(other.code == 0);
  CHECK(other.out.find("# method: optimal") == 0);
}

TEST_CASE("undo of an identity log reports nothing to do") {
  const RunResult r = run_cli("undo", "1 2\n1 2\n");
  CHECK(r.code == 1);
}

TEST_CASE("decompose") {
  const RunResult r = run_cli("decompose", "2 3\n2 1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "(1 2 3)\nr = 1, support = 3\n");

  const RunResult id = run_cli("decompose", "1 2\n1 2\n");
  CHECK(id.code == 0);
  CHECK(id.out == "identity\nr = 0, support = 0\n");
}

TEST_CASE("identity-word prints chronologically") {
  const RunResult r = run_cli("identity-word 6 4");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# identity word: m=6 n=4\n"
        "# swaps below are chronological: apply from the first line down\n"
        "3 4\n"
        "2 4\n"
        "1 3\n"
        "1 4\n"
        "2 3\n"
        "1 2\n");

  CHECK(run_cli("identity-word 7 5").code == 1);
  CHECK(run_cli("identity-word 4 10").code == 1);
}

TEST_CASE("undo-p1 and undo-p2") {
  const RunResult r = run_cli("undo-p1 5");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# method: p1-special\n"
        "# factors: 6\n"
        "# outsiders: none\n"
        "# swaps below are chronological: apply from the first line down\n"
        "1 3\n"
        "2 5\n"
        "1 4\n"
        "1 5\n"
        "2 4\n"
        "3 5\n");
  CHECK(run_cli("undo-p2 3").code == 0);
  CHECK(run_cli("undo-p1 1").code == 1);
}

TEST_CASE("verify accepts a correct plan and rejects tampering") {
  using namespace mindswap;
  const fs::path scramble = temp_file("scramble");
  const fs::path plan = temp_file("plan");
  spill(scramble, "4 5\n3 4\n2 3\n1 2\n");  // chronological log of p1(5)
  spill(plan, format_chronological(undo_p1(5).sequence));
  CHECK(run_cli("verify '" + scramble.string() + "' '" + plan.string() + "'")
            .code == 0);

  // reusing a scramble swap must fail
  spill(plan, format_chronological(undo_p1(5).sequence) + "1 2\n");
  const RunResult reused =
      run_cli("verify '" + scramble.string() + "' '" + plan.string() + "'");
  CHECK(reused.code == 1);

  // breaking the product must fail
  spill(plan, "1 3\n");
  const RunResult broken =
      run_cli("verify '" + scramble.string() + "' '" + plan.string() + "'");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("fail") == 0);

  fs::remove(scramble);
  fs::remove(plan);
}

TEST_CASE("round trip: undo output feeds verify") {
  const fs::path scramble = temp_file("scramble");
  const fs::path plan = temp_file("plan");
  spill(scramble, "2 3\n2 1\n");
  const RunResult planned = run_cli("undo '" + scramble.string() + "'");
  REQUIRE(planned.code == 0);
  spill(plan, planned.out);
  CHECK(run_cli("verify '" + scramble.string() + "' '" + plan.string() + "'")
            .code == 0);
  fs::remove(scramble);
  fs::remove(plan);
}

TEST_CASE("min-undo") {
  const RunResult r = run_cli("min-undo", "1 2\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("# minimal length: 5") == 0);

  // once factors between original bodies are allowed too, the adjacent-swap
  // cycle admits a 6-factor undo, well under the outsider-class bound of 8
  const RunResult cycle = run_cli("min-undo", "4 5\n3 4\n2 3\n1 2\n");
  CHECK(cycle.code == 0);
  CHECK(cycle.out.find("# minimal length: 6") == 0);

  const RunResult zero =
      run_cli("min-undo --outsiders 0", "4 5\n3 4\n2 3\n1 2\n");
  CHECK(zero.code == 0);
  CHECK(zero.out.find("# minimal length: 6") == 0);

  // a lone swap of a two-body universe cannot be undone without outsiders
  const RunResult none = run_cli("min-undo --outsiders 0", "1 2\n");
  CHECK(none.code == 1);
  CHECK(none.out.find("none") == 0);
}

TEST_CASE("min-outsiders") {
  using namespace mindswap;
  const RunResult r =
      run_cli("min-outsiders", format_chronological(build_p3(5)));
  CHECK(r.code == 0);
  CHECK(r.out.find("outsiders required: 2") == 0);

  const RunResult one =
      run_cli("min-outsiders", format_chronological(build_p2(5)));
  CHECK(one.code == 0);
  CHECK(one.out.find("outsiders required: 1") == 0);

  const RunResult zero =
      run_cli("min-outsiders", format_chronological(build_p1(5)));
  CHECK(zero.code == 0);
  CHECK(zero.out.find("outsiders required: 0") == 0);
}

TEST_CASE("census for S3 matches the pinned fixture") {
  const RunResult r = run_cli("census 3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "permutation\tr\tsupport\tkeeler\toptimal\toracle_min\n"
        "(2 3)\t1\t2\t5\t5\t5\n"
        "(1 2)\t1\t2\t5\t5\t5\n"
        "(1 2 3)\t1\t3\t6\t6\t6\n"
        "(1 3 2)\t1\t3\t6\t6\t6\n"
        "(1 3)\t1\t2\t5\t5\t5\n");
}

TEST_CASE("census rows keep oracle_min equal to optimal") {
  for (const int n : {4, 5}) {
    const RunResult r = run_cli("census " + std::to_string(n));
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      std::istringstream cols(line);
      std::string perm;
      int rr = 0;
      int support = 0;
      int keeler = 0;
      int optimal = 0;
      int oracle = 0;
      std::getline(cols, perm, '\t');
      cols >> rr >> support >> keeler >> optimal >> oracle;
      CHECK(optimal <= keeler);
      CHECK(oracle == optimal);
      CHECK(support + rr + 2 == optimal);
    }
    CHECK(rows == (n == 4 ? 23 : 119));
  }
}

TEST_CASE("exit codes distinguish usage errors") {
  CHECK(run_cli("undo", "3 3\n").code == 2);     // malformed log
  CHECK(run_cli("undo nosuchfile.log").code == 2);
  CHECK(run_cli("undo --method bogus", "1 2\n").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("--help").code == 0);
}
