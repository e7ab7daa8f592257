#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TILECS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
    out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& rel) { return std::string(TILECS_SOURCE_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cs") {
    auto r = run("cs --tiling cairo --base tetravalent -n 8 --format plain");
    CHECK(r.code == 0);
    CHECK(r.out == "1 4 8 12 16 20 24 28 32\n");
    r = run("cs --tiling snub632 --base hexavalent -n 6 --format json");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["terms"] == nlohmann::json::array({1, 6, 12, 12, 24, 36, 24}));
    CHECK(run("cs --tiling square_44 --base vertex -n 0").out == "1\n");
    CHECK(run("cs --tiling nosuch").code == 2);
    CHECK(run("cs --tiling cairo --base nosuch").code == 2);
    CHECK(run("cs").code == 2);
    CHECK(run("frobnicate").code == 2);
  }

  TEST_CASE("cs is idempotent") {
    auto a = run("cs --tiling t4612 -n 40 --format csv");
    auto b = run("cs --tiling t4612 -n 40 --format csv");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("verify") {
    auto r = run("verify --tiling t31212");
    CHECK(r.code == 0);
    CHECK(r.out.find("sector tally total: pass") != std::string::npos);
    CHECK(run("verify --tiling nosuch").code == 2);
    auto j = run("verify --tiling t488 --format json");
    CHECK(nlohmann::json::parse(j.out)["pass"] == true);
  }

  TEST_CASE("fit") {
    auto r = run("fit --tiling t346 --n-fit 40 --n-check 100");
    CHECK(r.code == 0);
    CHECK(r.out.find("(order 6)") != std::string::npos);
    CHECK(r.out.find("predictions 41..100: pass") != std::string::npos);
    r = run("fit --tiling square_44");
    CHECK(r.code == 0);
    CHECK(r.out.find("(1 + 2x + x^2) / (1 - 2x + x^2)") != std::string::npos);
    r = run("fit --terms 1,4,8,12,16");
    CHECK(r.code == 1);
    CHECK(r.out.find("insufficient terms") != std::string::npos);
    CHECK(run("fit --tiling t346 --n-fit 50 --n-check 50").code == 2);
  }

  TEST_CASE("cayley") {
    auto r = run("cayley --group t488 -n 12 --format json");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["matches_catalog"] == true);
    r = run("cayley --group square_44 -n 10");
    CHECK(r.code == 0);
    CHECK(r.out.find("growth: 1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40") != std::string::npos);
    CHECK(run("cayley --group t4612 -n 5").code == 0);
    CHECK(run("cayley --group nosuch").code == 2);
  }

  TEST_CASE("check-h") {
    auto r = run("check-h " + data("h/square_fig4.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("sprouts: 4 per level") != std::string::npos);
    r = run("check-h t3464_wrong_guess --format json");
    CHECK(r.code == 1);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["geodesic_ok"] == false);
    CHECK_FALSE(doc["witnesses"].empty());
    CHECK(run("check-h no_such_annotation").code == 2);
  }

  TEST_CASE("svg") {
    auto path = std::filesystem::temp_directory_path() / "tilecs_cli_test.svg";
    auto r = run("svg --tiling cairo --base trivalent --radius 9 -o " + path.string());
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("<?xml", 0) == 0);
    std::filesystem::remove(path);
    auto a = run("svg --overlay cairo_tetravalent --radius 4");
    auto b = run("svg --overlay cairo_tetravalent --radius 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("data directory override") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tilecs_cli_data";
    fs::remove_all(dir);
    fs::create_directories(dir / "tilings");
    // A 4.8^2 spec filed under the 3.4.6.4 key must be rejected by the pinned prefix.
    fs::copy_file(data("tilings/t488.json"), dir / "tilings/t3464.json");
    std::string env = "TILECS_DATA_DIR=" + dir.string() + " ";
    CHECK(run("export --tiling t488").code == 0);
    auto bad = popen((env + TILECS_CLI + " cs --tiling t3464 -n 3 2>/dev/null").c_str(), "r");
    REQUIRE(bad != nullptr);
    int status = pclose(bad);
    CHECK(WEXITSTATUS(status) == 2);
    fs::remove_all(dir);
  }

  TEST_CASE("every subcommand speaks JSON") {
    for (const char* args : {"list --format json", "verify --tiling square_44 --format json",
                             "fit --tiling t488 --format json", "cayley --group t36 -n 4 --format json",
                             "check-h square_fig4 --format json", "export --tiling cairo --format json",
                             "svg --tiling t63 --radius 2 --format json", "cs --tiling t63 -n 3 --format json"}) {
      CAPTURE(args);
      auto r = run(args);
      CHECK(r.code == 0);
      CHECK(nlohmann::json::accept(r.out));
    }
  }
}
