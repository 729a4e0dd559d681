// End-to-end checks of the command-line tool: spawns the built binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempCacheDir {
  std::filesystem::path path;
  TempCacheDir() {
    path = std::filesystem::temp_directory_path() /
           ("stacksort-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    ::setenv("STACKSORT_CACHE_DIR", path.c_str(), 1);
  }
  ~TempCacheDir() {
    std::filesystem::remove_all(path);
    ::unsetenv("STACKSORT_CACHE_DIR");
  }
};

}  // namespace

TEST_CASE("sort command") {
  auto r = run_cli("sort 43512");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "34125\n");
}

TEST_CASE("preimages and fertility") {
  auto r = run_cli("preimages 3124");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n3412\n3421\n");
  auto f = run_cli("fertility 2314 --method both");
  CHECK(f.exit_code == 0);
  CHECK(f.output == "vhc=2 brute=2\n");
  auto z = run_cli("fertility 2413");
  CHECK(z.output == "0\n");
}

TEST_CASE("vhc command") {
  auto r = run_cli("vhc 24135 --show compositions");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n(2,2)\n");
  auto ty = run_cli("vhc \"2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16\" --show types");
  CHECK(ty.exit_code == 0);
  CHECK(ty.output.find("(4,3,3,3)") != std::string::npos);
}

TEST_CASE("sliding commands") {
  CHECK(run_cli("swu 1423").output == "3412\n");
  CHECK(run_cli("swl 3124").output == "1324\n");
  CHECK(run_cli("swu 3412 --inverse").output == "1423\n");
  auto bad = run_cli("swu 231");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error:") != std::string::npos);
}

TEST_CASE("malformed input") {
  auto r = run_cli("sort 4x2");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("sequence command with a warm cache is byte identical") {
  TempCacheDir cache;
  const std::string args = "sequence --class \"132,231\" --preimage --n-max 7";
  auto cold = run_cli(args);
  CHECK(cold.exit_code == 0);
  CHECK(cold.output == "1 2 6 20 72 272 1064\n");
  REQUIRE(std::filesystem::exists(cache.path));
  std::filesystem::path file;
  for (const auto& entry : std::filesystem::directory_iterator(cache.path)) file = entry.path();
  REQUIRE(!file.empty());
  const std::string cached_bytes = slurp(file);
  auto warm = run_cli(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.output == cold.output);
  CHECK(slurp(file) == cached_bytes);

  // A corrupted cache entry is detected and recomputed.
  {
    std::ofstream out(file, std::ios::binary);
    out << "{\"garbage\":true}\n#fnv64=0000000000000000\n";
  }
  auto healed = run_cli(args);
  CHECK(healed.exit_code == 0);
  CHECK(healed.output == cold.output);
  CHECK(slurp(file) == cached_bytes);
}

TEST_CASE("containment sequence") {
  TempCacheDir cache;
  auto r = run_cli("sequence --class \"24135\" --contained --preimage --n-max 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 2 6 10 4 0 0 0 0\n");
}

TEST_CASE("verify subcommand") {
  auto list = run_cli("verify --list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("containment-class-sequences") != std::string::npos);
  auto r = run_cli("verify --claim zeil-min-identity --n-max 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  auto multi = run_cli("verify --claim worked-examples --workers 2 --format json");
  CHECK(multi.exit_code == 0);
  CHECK(multi.output.find("\"status\": \"pass\"") != std::string::npos);
  auto unknown = run_cli("verify --claim nope");
  CHECK(unknown.exit_code == 2);
  auto capped = run_cli("verify --claim zeil-min-identity --n-max 11");
  CHECK(capped.exit_code == 2);
  CHECK(capped.output.find("--unsafe") != std::string::npos);
}
