// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fermice {

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool is_strict(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] >= parts[i - 1]) return false;
  }
  return true;
}

Partition canonical(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int weight(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition minus_rho(const StrictPartition& lambda) {
  Partition out(lambda.size());
  const int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i) out[i] = lambda[i] - (n - i);
  return canonical(out);
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "()" || text == "-") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed partition \"" + text + "\"");
    }
    out.push_back(std::stoi(item));
    start = comma + 1;
  }
  if (out.size() == 1 && out[0] == 0) out.clear();
  return out;
}

std::string format_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

bool contains(const Partition& mu, const Partition& nu) {
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const int m = i < mu.size() ? mu[i] : 0;
    if (m < nu[i]) return false;
  }
  return true;
}

std::vector<StrictPartition> strict_partitions(int n, int max_part) {
  std::vector<StrictPartition> out;
  StrictPartition cur;
  std::function<void(int)> rec = [&](int hi) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    const int remaining = n - static_cast<int>(cur.size());
    for (int v = hi; v >= remaining; --v) {
      cur.push_back(v);
      rec(v - 1);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(max_part);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int max_part) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int hi) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = hi; v >= 1; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(max_part);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> partitions_of(int k, int rows) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int hi) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (rows >= 0 && static_cast<int>(cur.size()) == rows) return;
    for (int v = std::min(left, hi); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(k, k);
  return out;
}

std::vector<StrictPartition> interleaving_children(const StrictPartition& lambda) {
  std::vector<StrictPartition> out;
  const std::size_t m = lambda.empty() ? 0 : lambda.size() - 1;
  if (lambda.empty()) return out;
  StrictPartition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    int hi = lambda[i];
    if (i > 0) hi = std::min(hi, cur.back() - 1);
    for (int v = hi; v >= lambda[i + 1]; --v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

const StrictPartition& GTPattern::level(int i) const {
  static const StrictPartition kEmpty;
  if (i == 0) return kEmpty;
  return rows.at(rows.size() - static_cast<std::size_t>(i));
}

bool GTPattern::valid() const {
  const int n = this->n();
  for (int i = 1; i <= n; ++i) {
    const auto& row = level(i);
    if (static_cast<int>(row.size()) != i || !is_strict(row)) return false;
    if (i > 1) {
      const auto& below = level(i - 1);
      for (int j = 0; j + 1 < i; ++j) {
        if (!(row[j] >= below[j] && below[j] >= row[j + 1])) return false;
      }
    }
  }
  return true;
}

std::vector<GTPattern> strict_gt_patterns(const StrictPartition& lambda) {
  std::vector<GTPattern> out;
  GTPattern cur;
  std::function<void(const StrictPartition&)> rec = [&](const StrictPartition& top) {
    cur.rows.push_back(top);
    if (top.size() <= 1) {
      out.push_back(cur);
    } else {
      for (const auto& child : interleaving_children(top)) rec(child);
    }
    cur.rows.pop_back();
  };
  if (lambda.empty()) {
    out.push_back(cur);
  } else {
    rec(lambda);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fermice
