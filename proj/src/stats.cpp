#include "stacksort/stats.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stacksort {

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> out;
  const auto& e = p.entries();
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] > e[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

int peak(const Permutation& p) {
  const auto& e = p.entries();
  int count = 0;
  for (std::size_t i = 1; i + 1 < e.size(); ++i)
    if (e[i - 1] < e[i] && e[i] > e[i + 1]) ++count;
  return count;
}

int lmax(const Permutation& p) {
  int count = 0, best = 0;
  for (int v : p.entries())
    if (v > best) {
      best = v;
      ++count;
    }
  return count;
}

int rmax(const Permutation& p) {
  int count = 0, best = 0;
  const auto& e = p.entries();
  for (auto it = e.rbegin(); it != e.rend(); ++it)
    if (*it > best) {
      best = *it;
      ++count;
    }
  return count;
}

int zeil(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("zeil is undefined for the empty permutation");
  const Permutation q = normalize(p);
  const int n = q.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(q.value_at(i))] = i;
  int m = 1;
  while (m < n && pos[static_cast<std::size_t>(n - m)] > pos[static_cast<std::size_t>(n - m + 1)]) ++m;
  return m;
}

int tail_length(const Permutation& p) {
  const Permutation q = p.is_normalized() ? p : normalize(p);
  const int n = q.size();
  int l = 0;
  while (l < n && q.value_at(n - l) == n - l) ++l;
  return l;
}

namespace {

void skeleton_rec(const std::vector<int>& e, int lo, int hi, std::string& out) {
  if (lo >= hi) {
    out += '_';
    return;
  }
  int m = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(m)]) m = i;
  out += '(';
  skeleton_rec(e, lo, m, out);
  skeleton_rec(e, m + 1, hi, out);
  out += ')';
}

}  // namespace

std::string skeleton_of_perm(const Permutation& p) {
  std::string out;
  skeleton_rec(p.entries(), 0, p.size(), out);
  return out;
}

std::string stat_value_str(const StatValue& v) {
  if (const auto* n = std::get_if<long long>(&v)) return std::to_string(*n);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  const auto& set = std::get<std::vector<int>>(v);
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(set[i]);
  }
  out += '}';
  return out;
}

Statistic statistic_by_name(const std::string& name) {
  auto num = [](auto f) {
    return [f](const Permutation& p) { return StatValue(static_cast<long long>(f(p))); };
  };
  if (name == "des") return {name, num([](const Permutation& p) { return des(p); })};
  if (name == "peak") return {name, num([](const Permutation& p) { return peak(p); })};
  if (name == "lmax") return {name, num([](const Permutation& p) { return lmax(p); })};
  if (name == "rmax") return {name, num([](const Permutation& p) { return rmax(p); })};
  if (name == "zeil") return {name, num([](const Permutation& p) { return zeil(p); })};
  if (name == "tl") return {name, num([](const Permutation& p) { return tail_length(p); })};
  if (name == "desset")
    return {name, [](const Permutation& p) { return StatValue(descent_set(p)); }};
  if (name == "skeleton")
    return {name, [](const Permutation& p) { return StatValue(skeleton_of_perm(p)); }};
  throw std::invalid_argument("unknown statistic: " + name);
}

std::vector<Statistic> statistics_by_names(const std::vector<std::string>& names) {
  std::vector<Statistic> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(statistic_by_name(n));
  return out;
}

Statistic lendes_statistic(std::string name,
                           std::function<long long(int, const std::vector<int>&)> f) {
  return {std::move(name), [f](const Permutation& p) {
            return StatValue(f(p.size(), descent_set(p)));
          }};
}

DistributionTable::DistributionTable(std::vector<std::string> columns,
                                     std::map<std::vector<StatValue>, long long> rows,
                                     std::string source)
    : columns_(std::move(columns)), rows_(std::move(rows)), source_(std::move(source)) {}

long long DistributionTable::total() const {
  long long t = 0;
  for (const auto& [row, mult] : rows_) t += mult;
  return t;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream out;
  for (const std::string& c : columns_) out << c << ',';
  out << "multiplicity\n";
  for (const auto& [row, mult] : rows_) {
    for (const StatValue& v : row) {
      std::string cell = stat_value_str(v);
      bool quote = cell.find(',') != std::string::npos;
      if (quote) out << '"' << cell << '"';
      else out << cell;
      out << ',';
    }
    out << mult << '\n';
  }
  return out.str();
}

std::string DistributionTable::to_json() const {
  std::ostringstream out;
  out << "{\"source\":\"" << source_ << "\",\"columns\":[";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << '"' << columns_[i] << '"';
  }
  out << "],\"rows\":[";
  bool first = true;
  for (const auto& [row, mult] : rows_) {
    if (!first) out << ',';
    first = false;
    out << "{\"values\":[";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << '"' << stat_value_str(row[i]) << '"';
    }
    out << "],\"multiplicity\":" << mult << '}';
  }
  out << "]}";
  return out.str();
}

DistributionTable joint_distribution(const std::vector<Permutation>& perms,
                                     const std::vector<Statistic>& stats,
                                     std::string source) {
  std::map<std::vector<StatValue>, long long> rows;
  for (const Permutation& p : perms) {
    std::vector<StatValue> row;
    row.reserve(stats.size());
    for (const Statistic& s : stats) row.push_back(s.eval(p));
    ++rows[std::move(row)];
  }
  std::vector<std::string> cols;
  cols.reserve(stats.size());
  for (const Statistic& s : stats) cols.push_back(s.name);
  return DistributionTable(std::move(cols), std::move(rows), std::move(source));
}

DistributionTable joint_distribution(const std::vector<Permutation>& perms,
                                     const std::vector<std::string>& stat_names,
                                     std::string source) {
  return joint_distribution(perms, statistics_by_names(stat_names), std::move(source));
}

}  // namespace stacksort
