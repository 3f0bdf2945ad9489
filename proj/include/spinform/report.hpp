#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinform {

/// A named sequence of pass/fail checks. Skipped checks carry a reason and
/// do not count against the overall flag, but are always reported.
struct Report {
  struct Item {
    std::string id;
    std::string desc;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool skipped = false;
    std::string skipReason;
  };

  std::string suite;
  std::vector<Item> items;

  void check(std::string id, std::string desc, std::string expected, std::string actual) {
    bool ok = expected == actual;
    items.push_back(
        {std::move(id), std::move(desc), std::move(expected), std::move(actual), ok, false, ""});
  }
  void result(std::string id, std::string desc, bool ok) {
    items.push_back({std::move(id), std::move(desc), "pass", ok ? "pass" : "fail", ok, false, ""});
  }
  void skip(std::string id, std::string desc, std::string reason) {
    items.push_back({std::move(id), std::move(desc), "", "", true, true, std::move(reason)});
  }
  void merge(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }

  bool pass() const {
    for (const auto& it : items)
      if (!it.skipped && !it.pass) return false;
    return true;
  }
  int failures() const {
    int f = 0;
    for (const auto& it : items)
      if (!it.skipped && !it.pass) ++f;
    return f;
  }

  void print(std::ostream& os, bool verbose = true) const {
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& it : items) {
      if (it.skipped) {
        ++skipped;
        if (verbose) os << "[SKIP] " << it.id << ": " << it.desc << " (" << it.skipReason << ")\n";
        continue;
      }
      if (it.pass) ++passed;
      else ++failed;
      if (verbose || !it.pass) {
        os << (it.pass ? "[PASS] " : "[FAIL] ") << it.id << ": " << it.desc;
        if (!it.pass || it.expected != "pass")
          os << " (expected=" << it.expected << ", actual=" << it.actual << ")";
        os << "\n";
      }
    }
    os << suite << ": " << passed << " passed, " << failed << " failed, " << skipped
       << " skipped -> " << (pass() ? "PASS" : "FAIL") << "\n";
  }
};

}  // namespace spinform
