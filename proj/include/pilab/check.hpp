#pragma once

#include <string>
#include <vector>

namespace pilab {

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Itemized pass/fail outcome of a checker; order is deterministic.
struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string detail = {}) {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
};

}  // namespace pilab
