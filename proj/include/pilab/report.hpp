#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pilab {

enum class Status { pass, fail, info };

const char* to_string(Status s) noexcept;

/// One result line: a quantity, its value, the bound or expected value it is
/// checked against ("-" when there is none) and the verdict.
struct ReportRow {
  std::string quantity;
  std::string value;
  std::string bound = "-";
  Status status = Status::info;
};

struct Report {
  std::string command;
  std::string digest;  // FNV-1a of the inputs, hex
  std::vector<ReportRow> rows;

  void add(std::string quantity, std::string value, std::string bound = "-", Status status = Status::info) {
    rows.push_back({std::move(quantity), std::move(value), std::move(bound), status});
  }
  void check(std::string quantity, std::string value, std::string bound, bool pass) {
    add(std::move(quantity), std::move(value), std::move(bound), pass ? Status::pass : Status::fail);
  }
  bool pass() const;
};

inline constexpr std::string_view tsv_header = "quantity\tvalue\tbound\tstatus";

/// Header, one line per row, then the digest row.
std::string to_tsv(const Report& r);
/// Aligned columns for reading.
std::string to_text(const Report& r);

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

}  // namespace pilab
