// Command-line front end: stack-sorting, preimages, fertility, hook
// configurations, sliding operators, cached sequences, and the verification
// suite.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacksort/perm.hpp"
#include "stacksort/sliding.hpp"
#include "stacksort/sort.hpp"
#include "stacksort/stats.hpp"
#include "stacksort/verify.hpp"
#include "stacksort/vhc.hpp"

namespace {

using nlohmann::json;
using namespace stacksort;

constexpr const char* kCodeVersion = "stacksort-0.1.0";
constexpr int kDefaultNCap = 10;

std::uint64_t fnv64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

std::filesystem::path cache_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("STACKSORT_CACHE_DIR"); env && *env) return env;
  if (!flag_value.empty()) return flag_value;
  return ".stacksort-cache";
}

// Cache files hold one JSON line followed by a checksum line; a checksum
// mismatch is treated as a miss and triggers recomputation.
bool cache_load(const std::filesystem::path& file, json& out) {
  std::ifstream in(file);
  if (!in) return false;
  std::string body, line, last;
  while (std::getline(in, line)) {
    if (!last.empty()) body += last + "\n";
    last = line;
  }
  const std::string prefix = "#fnv64=";
  if (last.rfind(prefix, 0) != 0) return false;
  if (!body.empty() && body.back() == '\n') body.pop_back();
  if (hex64(fnv64(body)) != last.substr(prefix.size())) return false;
  try {
    out = json::parse(body);
  } catch (const json::parse_error&) {
    return false;
  }
  return true;
}

void cache_store(const std::filesystem::path& file, const json& value) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const std::string body = value.dump();
  std::filesystem::path tmp = file;
  tmp += ".tmp." + std::to_string(static_cast<unsigned long>(::getpid()));
  {
    std::ofstream out(tmp);
    out << body << "\n#fnv64=" << hex64(fnv64(body)) << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

int check_cap(int n_max, bool unsafe) {
  if (n_max > kDefaultNCap && !unsafe)
    throw std::invalid_argument("n-max above " + std::to_string(kDefaultNCap) +
                                " requires --unsafe");
  return n_max;
}

void print_sequence(const json& result, const std::string& format) {
  if (format == "json") {
    std::cout << result.dump() << "\n";
    return;
  }
  const auto& seq = result.at("sequence");
  if (format == "csv") {
    std::cout << "n,count\n";
    for (std::size_t i = 0; i < seq.size(); ++i)
      std::cout << (i + 1) << ',' << seq[i].get<long long>() << "\n";
    return;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << seq[i].get<long long>();
  }
  std::cout << "\n";
}

int run_verify(const std::vector<std::string>& ids, const RunConfig& cfg, int workers,
               const std::string& format) {
  std::vector<VerificationReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) break;
      reports[i] = run_claim(ids[i], cfg);
    }
  };
  std::vector<std::thread> threads;
  const int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(ids.size())));
  for (int i = 0; i < nthreads - 1; ++i) threads.emplace_back(work);
  work();
  for (std::thread& th : threads) th.join();

  std::string first_fail;
  if (format == "json") {
    json arr = json::array();
    for (const VerificationReport& r : reports) arr.push_back(r.to_json());
    std::cout << arr.dump(2) << "\n";
  }
  std::size_t width = 0;
  for (const VerificationReport& r : reports) width = std::max(width, r.claim.size());
  for (const VerificationReport& r : reports) {
    if (format != "json") {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
                << r.claim << "  " << std::right << std::fixed << std::setprecision(1)
                << std::setw(9) << r.ms << " ms\n";
      if (!r.pass) std::cout << "      witness: " << r.witness.dump() << "\n";
    }
    if (!r.pass && first_fail.empty()) first_fail = r.claim;
  }
  if (!first_fail.empty()) {
    std::cerr << "FIRST-FAIL: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stack-sorting toolkit: preimages, hook configurations, sliding bijections"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "output format: table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  std::string cache_flag;
  app.add_option("--cache-dir", cache_flag,
                 "cache directory (default .stacksort-cache; STACKSORT_CACHE_DIR overrides)");
  bool unsafe = false;
  app.add_flag("--unsafe", unsafe, "lift the n-max safety cap");

  std::string perm_text;

  auto* cmd_sort = app.add_subcommand("sort", "apply the stack-sorting map once");
  cmd_sort->add_option("perm", perm_text, "permutation")->required();

  auto* cmd_pre = app.add_subcommand("preimages", "list stack-sorting preimages");
  cmd_pre->add_option("perm", perm_text, "normalized permutation")->required();

  auto* cmd_fert = app.add_subcommand("fertility", "count stack-sorting preimages");
  cmd_fert->add_option("perm", perm_text, "normalized permutation")->required();
  std::string method = "vhc";
  cmd_fert->add_option("--method", method, "vhc, brute, or both")
      ->check(CLI::IsMember({"vhc", "brute", "both"}));

  auto* cmd_vhc = app.add_subcommand("vhc", "list valid hook configurations");
  cmd_vhc->add_option("perm", perm_text, "normalized permutation")->required();
  std::string show = "hooks";
  cmd_vhc->add_option("--show", show, "hooks, compositions, or types")
      ->check(CLI::IsMember({"hooks", "compositions", "types"}));

  auto* cmd_swu = app.add_subcommand("swu", "apply the southwest-up sliding bijection");
  cmd_swu->add_option("perm", perm_text, "231-avoiding permutation")->required();
  bool inverse = false;
  cmd_swu->add_flag("--inverse", inverse, "apply the inverse map");

  auto* cmd_swl = app.add_subcommand("swl", "apply the southwest-left sliding bijection");
  cmd_swl->add_option("perm", perm_text, "132-avoiding permutation")->required();
  cmd_swl->add_flag("--inverse", inverse, "apply the inverse map");

  auto* cmd_seq = app.add_subcommand("sequence", "count class members or their preimages");
  std::string class_text;
  cmd_seq->add_option("--class", class_text, "comma-separated patterns")->required();
  bool preimage = false, contained = false;
  cmd_seq->add_flag("--preimage", preimage, "count stack-sorting preimages of the class");
  cmd_seq->add_flag("--contained", contained,
                    "patterns are containment witnesses rather than forbidden patterns");
  int n_max = 8;
  cmd_seq->add_option("--n-max", n_max, "largest length")->check(CLI::PositiveNumber);

  auto* cmd_verify = app.add_subcommand("verify", "run verification claims");
  std::string claim = "all";
  cmd_verify->add_option("--claim", claim, "claim id or \"all\"");
  int verify_n_max = 0, m_max = 3, workers = 1;
  cmd_verify->add_option("--n-max", verify_n_max, "override the pinned length bound (0 = keep)");
  cmd_verify->add_option("--m-max", m_max, "pattern family truncation");
  cmd_verify->add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);
  bool list_claims = false;
  cmd_verify->add_flag("--list", list_claims, "list claim ids and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_sort->parsed()) {
      std::cout << sort_once(Permutation::parse(perm_text)).compact_str() << "\n";
      return 0;
    }
    if (cmd_pre->parsed()) {
      Permutation p = Permutation::parse(perm_text);
      if (p.size() > kDefaultNCap && !unsafe)
        throw std::invalid_argument("length above the cap requires --unsafe");
      PreimageSet set = preimages(p);
      if (format == "json") {
        json j{{"target", p.str()}, {"count", set.members.size()}};
        j["members"] = json::array();
        for (const Permutation& m : set.members) j["members"].push_back(m.str());
        std::cout << j.dump() << "\n";
      } else {
        std::cout << set.members.size() << "\n";
        for (const Permutation& m : set.members) std::cout << m.compact_str() << "\n";
      }
      return 0;
    }
    if (cmd_fert->parsed()) {
      Permutation p = Permutation::parse(perm_text);
      if (p.size() > kDefaultNCap && !unsafe && method != "vhc")
        throw std::invalid_argument("brute force above the cap requires --unsafe");
      if (method == "vhc") {
        std::cout << fertility_via_vhc(p) << "\n";
      } else if (method == "brute") {
        std::cout << preimages(p).members.size() << "\n";
      } else {
        std::uint64_t f = fertility_via_vhc(p);
        std::uint64_t b = preimages(p).members.size();
        if (f != b) {
          std::cerr << "fertility mismatch: vhc=" << f << " brute=" << b << "\n";
          return 1;
        }
        std::cout << "vhc=" << f << " brute=" << b << "\n";
      }
      return 0;
    }
    if (cmd_vhc->parsed()) {
      Permutation p = Permutation::parse(perm_text);
      auto cfgs = enumerate_vhcs(p);
      if (format == "json") {
        json j{{"base", p.str()}, {"count", cfgs.size()}};
        j["configurations"] = json::array();
        for (const HookConfig& h : cfgs) {
          json c;
          c["hooks"] = json::array();
          for (const Hook& hk : h.hooks) c["hooks"].push_back({hk.sw, hk.ne});
          c["composition"] = induced_composition(h);
          c["type"] = type_of(induced_composition(h));
          j["configurations"].push_back(std::move(c));
        }
        std::cout << j.dump() << "\n";
        return 0;
      }
      std::cout << cfgs.size() << "\n";
      for (const HookConfig& h : cfgs) {
        if (show == "hooks") {
          std::string line;
          for (const Hook& hk : h.hooks)
            line += "(" + std::to_string(hk.sw) + "," + std::to_string(hk.ne) + ") ";
          if (line.empty()) line = "(no hooks) ";
          std::cout << line << "\n";
        } else if (show == "compositions") {
          std::cout << composition_str(induced_composition(h)) << "\n";
        } else {
          std::cout << composition_str(type_of(induced_composition(h))) << "\n";
        }
      }
      return 0;
    }
    if (cmd_swu->parsed()) {
      Permutation p = Permutation::parse(perm_text);
      std::cout << (inverse ? swu_inv(p) : swu(p)).compact_str() << "\n";
      return 0;
    }
    if (cmd_swl->parsed()) {
      Permutation p = Permutation::parse(perm_text);
      std::cout << (inverse ? swl_inv(p) : swl(p)).compact_str() << "\n";
      return 0;
    }
    if (cmd_seq->parsed()) {
      check_cap(n_max, unsafe);
      std::vector<Permutation> pats = parse_pattern_list(class_text);
      ClassSpec spec = contained ? ClassSpec::contained_in(pats) : ClassSpec::av(pats);
      json key{{"command", "sequence"},
               {"class", pattern_list_str(pats)},
               {"contained", contained},
               {"preimage", preimage},
               {"n_max", n_max},
               {"version", kCodeVersion}};
      std::filesystem::path file =
          cache_dir(cache_flag) / ("seq-" + hex64(fnv64(key.dump())) + ".json");
      json cached;
      if (cache_load(file, cached) && cached.value("key", json()) == key) {
        print_sequence(cached, format);
        return 0;
      }
      std::vector<long long> seq;
      for (int n = 1; n <= n_max; ++n) {
        if (preimage) seq.push_back(class_preimage_count(spec, n));
        else seq.push_back(static_cast<long long>(spec.members(n).size()));
      }
      json result{{"key", key}, {"class", spec.str()}, {"sequence", seq}};
      cache_store(file, result);
      print_sequence(result, format);
      return 0;
    }
    if (cmd_verify->parsed()) {
      if (list_claims) {
        for (const std::string& id : all_claim_ids()) std::cout << id << "\n";
        return 0;
      }
      RunConfig cfg;
      cfg.n_max = verify_n_max > 0 ? check_cap(verify_n_max, unsafe) : 0;
      cfg.m_max = m_max;
      std::vector<std::string> ids;
      if (claim == "all") ids = all_claim_ids();
      else ids.push_back(claim);
      for (const std::string& id : ids) {
        const auto known = all_claim_ids();
        if (std::find(known.begin(), known.end(), id) == known.end())
          throw std::invalid_argument("unknown claim: " + id);
      }
      return run_verify(ids, cfg, workers, format);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
