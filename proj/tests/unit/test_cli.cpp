#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = L2NET_FIXTURES;

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("l2net_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  std::string cmd = std::string("\"") + L2NET_CLI + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fx(const char* name) { return "\"" + (kFixtures / name).string() + "\""; }

}  // namespace

TEST_CASE("distances and reconstruction") {
  fs::path dir = scratch();
  std::string m = (dir / "f3.tsv").string(), out = (dir / "f3.net").string();
  REQUIRE(run("distances --in " + fx("figure3.net") + " --out " + m) == 0);
  CHECK(slurp(m) == slurp(kFixtures / "figure3_sl.tsv"));
  CHECK(run("reconstruct --mode sl --in " + m + " --out " + out + " --trace") == 0);
  CHECK(run("iso " + out + " " + fx("figure3.net")) == 0);
  CHECK(run("iso " + out + " " + fx("figure4.net")) == 65);
  CHECK(run("iso " + fx("figure1_left.net") + " " + fx("figure1_right.net")) == 1);
  CHECK(run("check-splits --in " + m) == 0);
  // Figure 3 still has the cherry f,g; figure 1 has none.
  CHECK(run("classify-pendant --in " + m + " --part d1,d2") == 20);
  std::string m1 = (dir / "f1.tsv").string();
  REQUIRE(run("distances --in " + fx("figure1_left.net") + " --out " + m1) == 0);
  CHECK(run("classify-pendant --in " + m1 + " --part c,d") == 0);
  fs::remove_all(dir);
}

TEST_CASE("ambiguous shortest reconstruction") {
  fs::path dir = scratch();
  std::string m = (dir / "f1.tsv").string();
  REQUIRE(run("distances --shortest --in " + fx("figure1_left.net") + " --out " + m) == 0);
  CHECK(run("reconstruct --mode shortest --all --in " + m) == 10);
  CHECK(run("reconstruct --mode sl --in " + m) == 65);
  fs::remove_all(dir);
}

TEST_CASE("alt-path commands") {
  fs::path dir = scratch();
  std::string n1 = (dir / "n1.net").string(), n2 = (dir / "n2.net").string();
  CHECK(run("altpath make-pair --tree " + fx("figure7_tree.txt") + " --out1 " + n1 + " --out2 " + n2) == 0);
  CHECK(run("iso " + n1 + " " + fx("figure7_n1.net")) == 0);
  CHECK(run("altpath detect --in " + n2) == 0);
  CHECK(run("altpath detect --in " + fx("figure3.net")) == 1);
  fs::remove_all(dir);
}

TEST_CASE("random, verify and dot") {
  fs::path dir = scratch();
  std::string net = (dir / "r.net").string();
  CHECK(run("random --seed 5 --leaves 9 --out " + net) == 0);
  CHECK(run("verify --mode sl --in " + net) == 0);
  CHECK(run("random --seed 5 --genside --out " + net) == 0);
  CHECK(run("verify --mode genside --in " + net) == 0);
  CHECK(run("dot --in " + net) == 0);
  fs::remove_all(dir);
}

TEST_CASE("usage and input errors") {
  CHECK(run("") == 64);
  CHECK(run("reconstruct --mode wrong --in x") == 64);
  CHECK(run("iso /nonexistent/a.net /nonexistent/b.net") == 65);
  CHECK(run("distances --in " + fx("figure7_tree.txt")) == 65);
}
