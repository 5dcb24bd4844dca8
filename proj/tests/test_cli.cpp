#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WITTFORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("witt add") {
  const auto r = run("witt add --ring integers --index-set div:2 --a 1,0 --b 1,0");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"coords\":{\"1\":\"2\",\"2\":\"-1\"}}\n");
}

TEST_CASE("predicates exit 1 when false") {
  CHECK(run("hodge-tate --ring zmod:4 --index-set ptyp:2:2 --a 0,3").code == 0);
  CHECK(run("hodge-tate --ring zmod:4 --index-set ptyp:2:2 --a 0,2").code == 1);
  CHECK(run("distinguished --ring zmod:4 --index-set ptyp:2:2 --a 2,3").code == 0);
  CHECK(run("distinguished --ring zmod:4 --index-set ptyp:2:2 --a 1,1").code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("witt add --a 1,0").code == 2);
  CHECK(run("witt add --ring nonsense --a 1,0 --b 1,0").code == 2);
  CHECK(run("verify --suite no-such-suite").code == 2);
  CHECK(run("prismatic --ring zmod:4 --index-set ptyp:2:2 --xi 1,0 --generators x --relations x^2").code == 2);
}

TEST_CASE("cone") {
  const auto r = run("cone --ring integers --d 2 --op mul --u \"1;3\" --v \"2;5\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("41") != std::string::npos);
}

TEST_CASE("verify output is byte identical without timing") {
  const std::string args = "verify --suite rees --suite cone --seed 3 --no-timing --budget-cases 20";
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("wall_seconds") == std::string::npos);
}

TEST_CASE("verify list") {
  const auto r = run("verify --list");
  CHECK(r.code == 0);
  CHECK(r.out.find("witt-ring-axioms") != std::string::npos);
}
