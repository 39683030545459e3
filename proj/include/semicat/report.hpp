#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace semicat {

// Command result shell. Everything serialized is a pure function of the
// inputs; elapsed_ms is carried for the stderr timing line only and never
// enters the byte stream.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  double elapsed_ms = 0.0;
};

std::uint64_t fnv1a(const std::string &data);
std::string digest_hex(const std::string &data);

// Records path -> content digest under inputs.
void add_input(Report &report, const std::string &path,
               const std::string &content);

// format is "json" or "text"; both end with a newline and are byte-stable
// for equal reports.
std::string emit_report(const Report &report, const std::string &format);

} // namespace semicat
