// Runs the built maxff binary and checks exit codes and key output lines.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MAXFF_BIN) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("semigroup subcommand") {
  auto r = run("semigroup --q 25 --i 6 --place p0");
  CHECK(r.code == 0);
  CHECK(has(r.out, "G(P0) = 1 2 3 4 5 6 9 10 11 12 18 19\n"));
  r = run("semigroup --q 25 --i 12 --place pinf");
  CHECK(has(r.out, "G(Pinf) = 1 2 3 4 5 6 7 8 9 10 11 12\n"));
  r = run("semigroup --q 25 --i 1 --place pinf");
  CHECK(has(r.out, "generators: 3, 13\n"));
  r = run("semigroup --q 25 --i 6 --place palpha --oracle");
  CHECK(r.code == 0);
  CHECK(has(r.out, "agree"));
  r = run("semigroup --q 25 --i 19 --place pinf --oracle --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["i"] == 6);
  CHECK(j["i_raw"] == 19);
  CHECK(j["oracle"]["agree"] == true);
  r = run("semigroup --q 25 --i 6 --place p0 --format csv");
  CHECK(r.out == "i,place,gaps\n6,P0,1 2 3 4 5 6 9 10 11 12 18 19\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("semigroup --q 5 --i 1 --place p0").code == 2);
  CHECK(run("semigroup --q 12 --i 1 --place p0").code == 2);
  CHECK(run("semigroup --q 25 --i 6 --place nowhere").code == 2);
  CHECK(run("semigroup --q 25 --place p0").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("classify").code == 2);
  CHECK(run("classify --m 13 --q 25").code == 2);
  CHECK(run("classify --m 1").code == 2);
  CHECK(run("classify --m 8 --with-field-checks").code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("verify --qmax 1").code == 2);
}

TEST_CASE("classify subcommand") {
  auto r = run("classify --m 13 --paper-labels");
  CHECK(r.code == 0);
  CHECK(has(r.out, "classes N(m) = 6"));
  r = run("classify --m 16 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["class_count"] == 5);
  r = run("classify --m 15 --format json");
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["members"] == nlohmann::json::array({2, 11}));
  CHECK(j["classes"][1]["members"] == nlohmann::json::array({14}));
  r = run("classify --q 7 --with-field-checks --format csv");
  CHECK(r.code == 0);
  CHECK(has(r.out, "i,place,gaps\n"));
}

TEST_CASE("verify subcommand") {
  auto r = run("verify --suite tables25");
  CHECK(r.code == 0);
  CHECK(has(r.out, "12 gap sequences compared, 12 match"));
  r = run("verify --suite maximality --qmax 27");
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS maximality"));
  r = run("verify --suite maps --qmax 25 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["passed"] == true);
}
