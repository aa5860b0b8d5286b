#include "switchquest/formulas.hpp"

#include <map>
#include <stdexcept>

namespace switchquest {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kUpper:
      return "upper";
  }
  return "exact";
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

int log_prime(int d, int k) {
  require(d >= 2, "log_prime: d must be >= 2");
  require(k >= 1, "log_prime: k must be >= 1");
  int i = 0;
  long long sum = 0, power = 1;
  while (sum + power <= k) {
    sum += power;
    power *= d;
    ++i;
  }
  return i;
}

int tree_rounds(int d, int n, int k) {
  require(n >= 0, "tree_rounds: n must be >= 0");
  const int lp = log_prime(d, k);
  if (n == 0) return 0;
  return static_cast<int>(ceil_div(n, lp));
}

int s_of_l(int l) {
  require(l >= 1, "s_of_l: l must be >= 1");
  return l * (l + 1) / 2;
}

int pyramid_lower(int n, int k) {
  require(n >= 1 && k >= 1, "pyramid_lower: n and k must be >= 1");
  return static_cast<int>(ceil_div(2LL * n, k + 1LL));
}

int pyramid_upper(int n, int l) {
  require(n >= 1 && l >= 1, "pyramid_upper: n and l must be >= 1");
  return static_cast<int>(ceil_div(n, l));
}

int gpy_lower(int d, int n, int k) {
  require(d >= 2, "gpy_lower: d must be >= 2");
  require(n >= 1 && k >= 1, "gpy_lower: n and k must be >= 1");
  return static_cast<int>(ceil_div(static_cast<long long>(d) * n, k - 1LL + d));
}

int gpy_layered_upper(int d, int n, int k) {
  require(d >= 2, "gpy_layered_upper: d must be >= 2");
  require(n >= 1 && k >= 1, "gpy_layered_upper: n and k must be >= 1");
  return static_cast<int>(ceil_div(n, (k - 1LL + d) / d));
}

int ratio_bound(int m, int k) {
  require(m >= 1 && k >= m, "ratio_bound: requires 1 <= m <= k");
  return static_cast<int>(ceil_div(k, m));
}

const std::vector<FormulaInfo>& formula_catalog() {
  static const std::vector<FormulaInfo> catalog = {
      {"log_prime", {"d", "k"}, BoundKind::kExact},
      {"tree_rounds", {"d", "n", "k"}, BoundKind::kExact},
      {"s_of_l", {"l"}, BoundKind::kExact},
      {"pyramid_lower", {"n", "k"}, BoundKind::kLower},
      {"pyramid_upper", {"n", "l"}, BoundKind::kUpper},
      {"gpy_lower", {"d", "n", "k"}, BoundKind::kLower},
      {"gpy_layered_upper", {"d", "n", "k"}, BoundKind::kUpper},
      {"ratio_bound", {"m", "k"}, BoundKind::kUpper},
  };
  return catalog;
}

Json evaluate_formula(const std::string& name, const std::vector<int>& a) {
  const FormulaInfo* info = nullptr;
  for (const auto& f : formula_catalog()) {
    if (f.name == name) info = &f;
  }
  if (!info) throw std::invalid_argument("unknown formula '" + name + "'");
  if (a.size() != info->params.size()) {
    throw std::invalid_argument(name + " expects " + std::to_string(info->params.size()) +
                                " parameters");
  }
  int value = 0;
  if (name == "log_prime") value = log_prime(a[0], a[1]);
  else if (name == "tree_rounds") value = tree_rounds(a[0], a[1], a[2]);
  else if (name == "s_of_l") value = s_of_l(a[0]);
  else if (name == "pyramid_lower") value = pyramid_lower(a[0], a[1]);
  else if (name == "pyramid_upper") value = pyramid_upper(a[0], a[1]);
  else if (name == "gpy_lower") value = gpy_lower(a[0], a[1], a[2]);
  else if (name == "gpy_layered_upper") value = gpy_layered_upper(a[0], a[1], a[2]);
  else value = ratio_bound(a[0], a[1]);

  Json doc;
  doc["name"] = name;
  std::map<std::string, int> sorted;
  for (std::size_t i = 0; i < a.size(); ++i) sorted[info->params[i]] = a[i];
  Json params = Json::object();
  for (const auto& [k, v] : sorted) params[k] = v;
  doc["params"] = std::move(params);
  doc["value"] = value;
  doc["kind"] = to_string(info->kind);
  return doc;
}

}  // namespace switchquest
