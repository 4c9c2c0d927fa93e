#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BDEFORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify --model bip --imax 0").code == 2);
  CHECK(run("verify --model maps --imax 2").code == 2);
  CHECK(run("verify --model bip --imax 2 --prop bogus").code == 2);
  CHECK(run("verify --imax 2").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("dump --op D --s 5 --i 1 --j 2 --l 1").code == 2);
  CHECK(run("dump --op A --i 0 --s 1").code == 2);
  CHECK(run("dump --op Q").code == 2);
  CHECK(run("jack --lambda 7").code == 2);
  CHECK(run("tau --model bip --order -1").code == 2);
  CHECK(run("tau --model biple3 --order 2 --set q9=0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify") {
  Run r = run("verify --model bip --imax 3 --deg 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS theorem i=1 j=2"));
  CHECK(contains(r.out, "ok: 18/18 checks passed"));

  Run j = run("verify --model threeconst --imax 3 --deg 5 --json");
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "bdeform/1");
  CHECK(doc["passed"] == true);
  CHECK(doc["items"].size() == 18);

  Run le3 = run("verify --model biple3 --imax 4 --deg 5");
  CHECK(le3.code == 0);
  CHECK(contains(le3.out, "4 reported separately"));

  CHECK(run("verify --model biple3 --imax 3 --deg 5 --set q1=0,q3=0 --b-eval 1").code == 0);
  CHECK(run("verify --model bip --prop mixed --imax 3 --deg 5").code == 0);
  CHECK(run("verify --model biple3 --prop final --imax 3 --deg 5").code == 0);
}

TEST_CASE("tau") {
  CHECK(run("tau --model biple3 --order 0").out == "1\n");
  Run r = run("tau --model bip --order 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1\n(u1*u2/(1+b)^1)*p1\n"));

  Run o = run("tau --model bip --order 4 --oracle --check-constraints 4 --fixed-point 2");
  CHECK(o.code == 0);
  CHECK(contains(o.out, "PASS jack-equals-evolution order=4"));
  CHECK(contains(o.out, "PASS constraint i=4 n=4"));
  CHECK(contains(o.out, "PASS fixed-point i=2"));

  auto doc = nlohmann::json::parse(run("tau --model biple3 --order 2 --json").out);
  CHECK(doc["series"]["order"] == 2);
  CHECK(doc["series"]["coeffs"][1][0]["coeff"] == "u1*q1/(1+b)^1");
  CHECK(doc["denom_pow"] == nlohmann::json{0, 1, 2});
}

TEST_CASE("dump") {
  CHECK(run("dump --op A --i 2 --s 1 --deg 6").out == "p1*\n");
  CHECK(run("dump --op J --i -3 --deg 6").out == "p3\n");
  Run l = run("dump --op L --model bip --i 1 --deg 3 --json");
  CHECK(l.code == 0);
  auto doc = nlohmann::json::parse(l.out);
  CHECK(doc["op"] == "L");
  CHECK(doc["pieces"][0]["t"] == 0);
  CHECK(doc["pieces"][1]["op"]["terms"][0]["coeff"] == "u1*u2/(1+b)^1");
  CHECK(run("dump --op Dtilde --m 2 --i 4 --j 1 --l 3").out == "3\n");
  CHECK(run("dump --op M --k 1 --m 1 --i 1 --deg 2").out == "(u1/(1+b)^1)\n");
}

TEST_CASE("jack and oracle") {
  Run j = run("jack --lambda 2 --dump");
  CHECK(j.code == 0);
  CHECK(contains(j.out, "p2: alpha"));
  CHECK(contains(j.out, "p1^2: 1"));
  auto doc = nlohmann::json::parse(run("jack --lambda 1,1 --json").out);
  CHECK(doc["norm"] == "2*alpha^2 + 2*alpha");
  Run o = run("oracle --model threeconst --order 3");
  CHECK(o.code == 0);
  CHECK(contains(o.out, "content convention standard"));
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"verify --model biple3 --imax 3 --deg 5 --json", "tau --model threeconst --order 3 --json",
                           "dump --op M --k 2 --m 1 --i 2 --deg 5"}) {
    CHECK(run(args).out == run(args).out);
  }
}
