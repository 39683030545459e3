#include "semicat/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "semicat/error.hpp"

namespace semicat {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Comment-stripped, tokenized lines; blank lines dropped.
std::vector<Line> tokenize(const std::string &text) {
  std::vector<Line> lines;
  std::istringstream stream(text);
  std::string raw;
  int number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.erase(hash);
    std::istringstream split(raw);
    Line line{number, {}};
    std::string token;
    while (split >> token)
      line.tokens.push_back(token);
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
  }
  return lines;
}

class Cursor {
public:
  Cursor(std::vector<Line> lines, std::string origin)
      : lines_(std::move(lines)), origin_(std::move(origin)) {}

  bool done() const { return next_ >= lines_.size(); }
  const Line &peek() const {
    if (done())
      complain(last_line(), "unexpected end of input");
    return lines_[next_];
  }
  Line take() {
    const Line line = peek();
    ++next_;
    return line;
  }
  int last_line() const {
    return lines_.empty() ? 0 : lines_.back().number;
  }

  [[noreturn]] void complain(int line, const std::string &message) const {
    fail("ParseError", origin_ + ":" + std::to_string(line) + ": " + message);
  }

  int to_int(const Line &line, const std::string &token) const {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception &) {
      complain(line.number, "expected an integer, got '" + token + "'");
    }
    if (used != token.size())
      complain(line.number, "expected an integer, got '" + token + "'");
    return value;
  }

  // A line of exactly `count` integers.
  std::vector<int> int_row(int count, const std::string &what) {
    const Line line = take();
    if (static_cast<int>(line.tokens.size()) != count)
      complain(line.number, what + ": expected " + std::to_string(count) +
                                " entries, got " +
                                std::to_string(line.tokens.size()));
    std::vector<int> row;
    for (const auto &token : line.tokens)
      row.push_back(to_int(line, token));
    return row;
  }

  std::vector<std::vector<int>> int_table(int rows, int cols,
                                          const std::string &what) {
    std::vector<std::vector<int>> table;
    for (int r = 0; r < rows; ++r)
      table.push_back(int_row(cols, what + " row " + std::to_string(r)));
    return table;
  }

  // Header line `keyword a b ...` with the given argument count.
  std::vector<int> header(const std::string &keyword, int args) {
    const Line line = take();
    if (line.tokens[0] != keyword)
      complain(line.number,
               "expected '" + keyword + "', got '" + line.tokens[0] + "'");
    if (static_cast<int>(line.tokens.size()) != args + 1)
      complain(line.number, "'" + keyword + "' takes " + std::to_string(args) +
                                " argument(s)");
    std::vector<int> values;
    for (int k = 1; k <= args; ++k)
      values.push_back(to_int(line, line.tokens[k]));
    return values;
  }

private:
  std::vector<Line> lines_;
  std::string origin_;
  std::size_t next_ = 0;
};

FiniteGroup parse_group_block(Cursor &cursor, const std::string &base_dir) {
  const Line line = cursor.peek();
  if (line.tokens[0] == "group" && line.tokens.size() == 2 &&
      line.tokens[1].starts_with("@")) {
    cursor.take();
    const auto ref =
        std::filesystem::path(base_dir) / line.tokens[1].substr(1);
    const auto parsed = parse_structure_file(ref.string());
    if (parsed.kind != ParsedStructure::Kind::Group)
      cursor.complain(line.number, "referenced file " + ref.string() +
                                       " is not a group file");
    return *parsed.group;
  }
  const int n = cursor.header("group", 1)[0];
  if (n <= 0)
    cursor.complain(line.number, "group order must be positive");
  return group_from_table(cursor.int_table(n, n, "group"));
}

ParsedStructure parse_bigraph(Cursor &cursor) {
  const Line head = cursor.peek();
  const auto sizes = cursor.header("bigraph", 2);
  std::vector<std::pair<int, int>> plain;
  std::vector<std::pair<std::pair<int, int>, std::string>> tagged;
  bool any_label = false, any_bare = false;
  while (!cursor.done()) {
    const Line line = cursor.take();
    if (line.tokens.size() != 2 && line.tokens.size() != 3)
      cursor.complain(line.number, "edge lines are '<l> <r> [label]'");
    const int l = cursor.to_int(line, line.tokens[0]);
    const int r = cursor.to_int(line, line.tokens[1]);
    plain.push_back({l, r});
    if (line.tokens.size() == 3) {
      any_label = true;
      tagged.push_back({{l, r}, line.tokens[2]});
    } else {
      any_bare = true;
    }
  }
  if (any_label && any_bare)
    cursor.complain(head.number,
                    "either every edge carries a label or none does");
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::Bigraph;
  if (any_label) {
    out.labelled = make_labelled_bigraph(sizes[0], sizes[1], tagged);
    out.bigraph = out.labelled->graph;
  } else {
    out.bigraph = make_bigraph(sizes[0], sizes[1], plain);
  }
  return out;
}

ParsedStructure parse_rees(Cursor &cursor, const std::string &base_dir) {
  cursor.header("rees", 0);
  const auto group = parse_group_block(cursor, base_dir);
  const auto shape = cursor.header("matrix", 2);
  std::vector<std::vector<int>> entries;
  for (int r = 0; r < shape[0]; ++r) {
    const Line line = cursor.take();
    if (static_cast<int>(line.tokens.size()) != shape[1])
      cursor.complain(line.number, "matrix row " + std::to_string(r) +
                                       ": expected " +
                                       std::to_string(shape[1]) + " entries");
    std::vector<int> row;
    for (const auto &token : line.tokens)
      row.push_back(token == "." ? SandwichMatrix::kZero
                                 : cursor.to_int(line, token));
    entries.push_back(std::move(row));
  }
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::Rees;
  out.rees = rees_construct(group, sandwich_matrix(shape[0], shape[1], entries));
  return out;
}

ParsedStructure parse_sss(Cursor &cursor) {
  cursor.header("sss", 0);
  const int n = cursor.header("semilattice", 1)[0];
  if (n <= 0)
    cursor.complain(cursor.last_line(), "semilattice order must be positive");
  const auto lattice =
      semilattice_from_table(cursor.int_table(n, n, "semilattice"));

  std::vector<std::optional<FiniteSemigroup>> components(n);
  std::map<std::pair<int, int>, std::vector<int>> connectors;
  while (!cursor.done()) {
    const Line line = cursor.peek();
    if (line.tokens[0] == "component") {
      const int alpha = cursor.header("component", 1)[0];
      if (alpha < 0 || alpha >= n)
        cursor.complain(line.number, "component index out of range");
      if (components[alpha])
        cursor.complain(line.number, "component " + std::to_string(alpha) +
                                         " declared twice");
      const int m = cursor.header("semigroup", 1)[0];
      if (m <= 0)
        cursor.complain(line.number, "semigroup order must be positive");
      components[alpha] =
          semigroup_from_table(cursor.int_table(m, m, "semigroup"));
    } else if (line.tokens[0] == "connector") {
      const auto pair = cursor.header("connector", 2);
      if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
        cursor.complain(line.number, "connector index out of range");
      if (!components[pair[0]])
        cursor.complain(line.number,
                        "connector precedes component " +
                            std::to_string(pair[0]));
      connectors[{pair[0], pair[1]}] = cursor.int_row(
          components[pair[0]]->order,
          "connector " + std::to_string(pair[0]) + " " +
              std::to_string(pair[1]));
    } else {
      cursor.complain(line.number, "expected 'component' or 'connector', got '" +
                                       line.tokens[0] + "'");
    }
  }
  std::vector<FiniteSemigroup> filled;
  for (int alpha = 0; alpha < n; ++alpha) {
    if (!components[alpha])
      cursor.complain(cursor.last_line(),
                      "missing component " + std::to_string(alpha));
    filled.push_back(*components[alpha]);
  }
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::Sss;
  out.sss = sss_construct(lattice, filled, connectors);
  return out;
}

} // namespace

std::string ParsedStructure::kind_name() const {
  switch (kind) {
  case Kind::Group:
    return "group";
  case Kind::Semigroup:
    return "semigroup";
  case Kind::RectangularBand:
    return "rband";
  case Kind::Bigraph:
    return "bigraph";
  case Kind::Rees:
    return "rees";
  case Kind::Semilattice:
    return "semilattice";
  case Kind::Sss:
    return "sss";
  }
  return "unknown";
}

std::optional<FiniteSemigroup> ParsedStructure::as_semigroup() const {
  switch (kind) {
  case Kind::Group:
    return semigroup_from_table(group->table);
  case Kind::Semigroup:
  case Kind::RectangularBand:
    return semigroup;
  case Kind::Bigraph:
    return std::nullopt;
  case Kind::Rees:
    return rees_to_semigroup(*rees);
  case Kind::Semilattice:
    return semilattice_as_semigroup(*semilattice);
  case Kind::Sss:
    return sss->flatten();
  }
  return std::nullopt;
}

ParsedStructure parse_structure_text(const std::string &text,
                                     const std::string &origin,
                                     const std::string &base_dir) {
  Cursor cursor(tokenize(text), origin);
  if (cursor.done())
    cursor.complain(0, "empty input");
  const std::string &head = cursor.peek().tokens[0];
  ParsedStructure out;
  const int head_line = cursor.peek().number;
  if (head == "group") {
    out.kind = ParsedStructure::Kind::Group;
    const int n = cursor.header("group", 1)[0];
    if (n <= 0)
      cursor.complain(head_line, "group order must be positive");
    out.group = group_from_table(cursor.int_table(n, n, "group"));
  } else if (head == "semigroup") {
    out.kind = ParsedStructure::Kind::Semigroup;
    const int n = cursor.header("semigroup", 1)[0];
    if (n <= 0)
      cursor.complain(head_line, "semigroup order must be positive");
    out.semigroup = semigroup_from_table(cursor.int_table(n, n, "semigroup"));
  } else if (head == "rband") {
    out.kind = ParsedStructure::Kind::RectangularBand;
    const auto sizes = cursor.header("rband", 2);
    out.rband = rectangular_band(sizes[0], sizes[1]);
    out.semigroup = out.rband->to_semigroup();
  } else if (head == "bigraph") {
    out = parse_bigraph(cursor);
  } else if (head == "rees") {
    out = parse_rees(cursor, base_dir);
  } else if (head == "semilattice") {
    out.kind = ParsedStructure::Kind::Semilattice;
    const int n = cursor.header("semilattice", 1)[0];
    if (n <= 0)
      cursor.complain(head_line, "semilattice order must be positive");
    out.semilattice =
        semilattice_from_table(cursor.int_table(n, n, "semilattice"));
  } else if (head == "sss") {
    out = parse_sss(cursor);
  } else {
    cursor.complain(cursor.peek().number,
                    "unrecognized structure header '" + head + "'");
  }
  if (!cursor.done())
    cursor.complain(cursor.peek().number, "trailing content after structure");
  return out;
}

ParsedStructure parse_structure_file(const std::string &path) {
  return parse_structure_text(
      read_text_file(path), path,
      std::filesystem::path(path).parent_path().string());
}

std::vector<int> parse_subset_text(const std::string &text,
                                   const std::string &origin) {
  Cursor cursor(tokenize(text), origin);
  std::vector<int> out;
  while (!cursor.done()) {
    const Line line = cursor.take();
    for (const auto &token : line.tokens)
      out.push_back(cursor.to_int(line, token));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> parse_subset_file(const std::string &path) {
  return parse_subset_text(read_text_file(path), path);
}

namespace {

std::string table_lines(const std::vector<std::vector<int>> &table) {
  std::string out;
  for (const auto &row : table) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out += (c ? " " : "") + std::to_string(row[c]);
    out += "\n";
  }
  return out;
}

} // namespace

std::string serialize_group(const FiniteGroup &g) {
  return "group " + std::to_string(g.order) + "\n" + table_lines(g.table);
}

std::string serialize_semigroup(const FiniteSemigroup &s) {
  return "semigroup " + std::to_string(s.order) + "\n" + table_lines(s.table);
}

std::string serialize_rband(const RectangularBand &b) {
  return "rband " + std::to_string(b.left_size) + " " +
         std::to_string(b.right_size) + "\n";
}

std::string serialize_bigraph(const BipartiteGraph &g) {
  std::string out = "bigraph " + std::to_string(g.left_size) + " " +
                    std::to_string(g.right_size) + "\n";
  for (int l = 0; l < g.left_size; ++l)
    for (int r = 0; r < g.right_size; ++r)
      if (g.adj[l][r])
        out += std::to_string(l) + " " + std::to_string(r) + "\n";
  return out;
}

std::string serialize_bigraph(const LabelledBipartiteGraph &g) {
  std::string out = "bigraph " + std::to_string(g.graph.left_size) + " " +
                    std::to_string(g.graph.right_size) + "\n";
  for (int l = 0; l < g.graph.left_size; ++l)
    for (int r = 0; r < g.graph.right_size; ++r)
      if (g.graph.adj[l][r])
        out += std::to_string(l) + " " + std::to_string(r) + " " +
               g.label_at(l, r) + "\n";
  return out;
}

std::string serialize_rees(const ReesMatrixSemigroup &s) {
  std::string out = "rees\n" + serialize_group(s.group);
  out += "matrix " + std::to_string(s.matrix.rows) + " " +
         std::to_string(s.matrix.cols) + "\n";
  for (int l = 0; l < s.matrix.rows; ++l) {
    for (int i = 0; i < s.matrix.cols; ++i) {
      if (i)
        out += " ";
      out += s.matrix.is_zero(l, i) ? "."
                                    : std::to_string(s.matrix.at(l, i));
    }
    out += "\n";
  }
  return out;
}

std::string serialize_semilattice(const Semilattice &y) {
  return "semilattice " + std::to_string(y.order) + "\n" +
         table_lines(y.meet);
}

std::string serialize_sss(const StrongSemilattice &s) {
  std::string out = "sss\n" + serialize_semilattice(s.lattice);
  for (int alpha = 0; alpha < s.lattice.order; ++alpha)
    out += "component " + std::to_string(alpha) + "\n" +
           serialize_semigroup(s.components[alpha]);
  for (const auto &[key, map] : s.connectors) {
    out += "connector " + std::to_string(key.first) + " " +
           std::to_string(key.second) + "\n";
    for (std::size_t x = 0; x < map.size(); ++x)
      out += (x ? " " : "") + std::to_string(map[x]);
    out += "\n";
  }
  return out;
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream)
    fail("ParseError", "cannot open " + path + " for writing");
  stream << text;
  if (!stream.flush())
    fail("ParseError", "cannot write " + path);
}

std::string read_text_file(const std::string &path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream)
    fail("ParseError", "cannot open " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

} // namespace semicat
