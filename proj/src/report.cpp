#include "pilab/report.hpp"

#include <algorithm>
#include <cstdio>

namespace pilab {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "-";
  }
  return "-";
}

bool Report::pass() const {
  return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == Status::fail; });
}

std::string to_tsv(const Report& r) {
  std::string out(tsv_header);
  out += '\n';
  for (const auto& row : r.rows) {
    out += row.quantity + '\t' + row.value + '\t' + row.bound + '\t' + to_string(row.status) + '\n';
  }
  out += "input digest\t" + r.digest + "\t-\t-\n";
  return out;
}

std::string to_text(const Report& r) {
  std::vector<ReportRow> rows = r.rows;
  rows.push_back({"input digest", r.digest, "-", Status::info});
  std::size_t wq = 8, wv = 5, wb = 5;
  for (const auto& row : rows) {
    wq = std::max(wq, row.quantity.size());
    wv = std::max(wv, row.value.size());
    wb = std::max(wb, row.bound.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::string out = r.command + "\n" + pad("quantity", wq) + pad("value", wv) + pad("bound", wb) + "status\n";
  for (const auto& row : rows) {
    out += pad(row.quantity, wq) + pad(row.value, wv) + pad(row.bound, wb) + to_string(row.status) + '\n';
  }
  return out;
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace pilab
