#pragma once

#include <string>
#include <vector>

#include "switchquest/graph_io.hpp"

namespace switchquest {

enum class BoundKind { kExact, kLower, kUpper };

const char* to_string(BoundKind kind);

long long ceil_div(long long a, long long b);

/// Largest i with 1 + d + ... + d^(i-1) <= k.
int log_prime(int d, int k);
/// ceil(n / log_prime(d, k)); 0 when n = 0.
int tree_rounds(int d, int n, int k);
/// 1 + 2 + ... + l.
int s_of_l(int l);
/// ceil(2n / (k + 1)).
int pyramid_lower(int n, int k);
/// ceil(n / l).
int pyramid_upper(int n, int l);
/// ceil(dn / (k - 1 + d)).
int gpy_lower(int d, int n, int k);
/// ceil(n / floor((k - 1 + d) / d)).
int gpy_layered_upper(int d, int n, int k);
/// ceil(k / m).
int ratio_bound(int m, int k);

struct FormulaInfo {
  std::string name;
  std::vector<std::string> params;
  BoundKind kind;
};

const std::vector<FormulaInfo>& formula_catalog();

/// {name, params: {param: value}, value, kind}. Unknown names and wrong
/// arities throw std::invalid_argument.
Json evaluate_formula(const std::string& name, const std::vector<int>& args);

}  // namespace switchquest
