#include "semicat/report.hpp"

#include <sstream>

#include "semicat/error.hpp"

namespace semicat {

std::uint64_t fnv1a(const std::string &data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string digest_hex(const std::string &data) {
  static const char digits[] = "0123456789abcdef";
  std::uint64_t hash = fnv1a(data);
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = digits[hash & 0xf];
    hash >>= 4;
  }
  return "fnv1a:" + out;
}

void add_input(Report &report, const std::string &path,
               const std::string &content) {
  report.inputs[path] = digest_hex(content);
}

namespace {

void render_text(const nlohmann::ordered_json &node, const std::string &prefix,
                 std::ostringstream &out) {
  if (node.is_object()) {
    if (node.empty())
      out << prefix << ": {}\n";
    for (const auto &[key, value] : node.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    if (node.empty())
      out << prefix << ": []\n";
    std::size_t index = 0;
    for (const auto &value : node)
      render_text(value, prefix + "[" + std::to_string(index++) + "]", out);
  } else {
    out << prefix << ": " << node.dump() << "\n";
  }
}

} // namespace

std::string emit_report(const Report &report, const std::string &format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = report.command;
    doc["inputs"] = report.inputs;
    doc["results"] = report.results;
    doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
  }
  if (format == "text") {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    for (const auto &[path, digest] : report.inputs.items())
      out << "input " << path << ": " << digest.get<std::string>() << "\n";
    for (const auto &warning : report.warnings)
      out << "warning: " << warning << "\n";
    render_text(report.results, "", out);
    return out.str();
  }
  fail("ParseError", "unknown report format '" + format + "'");
}

} // namespace semicat
