#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicat/bigraph.hpp"
#include "semicat/group.hpp"
#include "semicat/rees.hpp"
#include "semicat/semigroup.hpp"
#include "semicat/semilattice.hpp"

namespace semicat {

// One parsed structure file. `kind` names the alternative; the matching
// optional is set. Bigraph files with labelled edges fill both graph fields.
struct ParsedStructure {
  enum class Kind {
    Group,
    Semigroup,
    RectangularBand,
    Bigraph,
    Rees,
    Semilattice,
    Sss,
  };

  Kind kind = Kind::Semigroup;
  std::optional<FiniteGroup> group;
  std::optional<FiniteSemigroup> semigroup;
  std::optional<RectangularBand> rband;
  std::optional<BipartiteGraph> bigraph;
  std::optional<LabelledBipartiteGraph> labelled;
  std::optional<ReesMatrixSemigroup> rees;
  std::optional<Semilattice> semilattice;
  std::optional<StrongSemilattice> sss;

  std::string kind_name() const;
  // Element table of the structure for commands that act on semigroups;
  // absent for graph files.
  std::optional<FiniteSemigroup> as_semigroup() const;
};

// Parses one structure from text. Lines may carry `#` comments; the first
// token picks the format: group, semigroup, rband, bigraph, rees,
// semilattice, sss. `origin` names the source in errors and `base_dir`
// anchors `group @file` references inside rees blocks.
ParsedStructure parse_structure_text(const std::string &text,
                                     const std::string &origin = "<input>",
                                     const std::string &base_dir = ".");

ParsedStructure parse_structure_file(const std::string &path);

// Whitespace-separated element ids with `#` comments; sorted and deduplicated.
std::vector<int> parse_subset_file(const std::string &path);
std::vector<int> parse_subset_text(const std::string &text,
                                   const std::string &origin = "<input>");

std::string serialize_group(const FiniteGroup &g);
std::string serialize_semigroup(const FiniteSemigroup &s);
std::string serialize_rband(const RectangularBand &b);
std::string serialize_bigraph(const BipartiteGraph &g);
std::string serialize_bigraph(const LabelledBipartiteGraph &g);
std::string serialize_rees(const ReesMatrixSemigroup &s);
std::string serialize_semilattice(const Semilattice &y);
std::string serialize_sss(const StrongSemilattice &s);

void write_text_file(const std::string &path, const std::string &text);
std::string read_text_file(const std::string &path);

} // namespace semicat
