#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foldcalc/error.hpp"

namespace foldcalc::testing {

// Runs fn and returns the kind tag of the thrown foldcalc::Error, or "" when
// nothing was thrown. Lets tests assert on error kinds in one line.
template <typename Fn>
std::string thrown_kind(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const foldcalc::Error& e) {
    return e.kind();
  }
  return "";
}

using CatalogEntry = std::pair<std::string, std::vector<int>>;

// Every catalog constructor with its parameters swept up to max_n.
inline std::vector<CatalogEntry> catalog_entries(int max_n) {
  std::vector<CatalogEntry> out;
  for (int n = 0; n <= max_n; ++n) out.push_back({"K", {n}});
  out.push_back({"RP4", {}});
  out.push_back({"S1xtS3", {}});
  out.push_back({"RP4#RP4", {}});
  for (int n = 0; n <= max_n; ++n) out.push_back({"N", {n}});
  for (int n = 0; n <= max_n; ++n) out.push_back({"Nprime", {n}});
  for (int m = 1; m <= max_n; ++m) {
    for (int n = 0; n <= max_n; ++n) out.push_back({"M", {m, n}});
  }
  for (int m = 1; m <= max_n; ++m) out.push_back({"X", {m}});
  for (int n = 2; n <= max_n; ++n) out.push_back({"R", {n}});
  for (int n = 1; n <= max_n; ++n) out.push_back({"B", {n}});
  for (int g = 1; g <= max_n; ++g) out.push_back({"NxS2", {g}});
  for (int g = 1; g <= max_n; ++g) {
    for (int k = 0; k <= g; ++k) out.push_back({"sum", {g, k}});
  }
  return out;
}

}  // namespace foldcalc::testing
