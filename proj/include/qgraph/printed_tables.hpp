#pragma once

// The published psi tables for g <= 7, transcribed character for character
// (typos included), and the check that diffs them against computed psi.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgraph/enumerate.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

inline constexpr std::string_view kPrintedTablesVersion = "1.0";

struct PrintedPolynomial {
  int edges;
  int delta;
  int index;              // upper index as printed (gaps preserved)
  std::string_view text;  // verbatim
};

std::span<const PrintedPolynomial> printed_polynomials();

/// Class sizes stated in the prose accompanying the tables.
struct StatedCount {
  int edges;
  std::optional<int> delta;  // empty: total over all classes of this g
  int count;
};

std::span<const StatedCount> stated_counts();

enum class Verdict { Exact, TypoCorrected, Unmatched };

std::string to_string(Verdict verdict);

struct TableDiff {
  ClassKey key;
  int index = 0;
  std::string printed;
  std::string computed;  // corrected form; nearest candidate when unmatched
  std::string graph6;    // graph whose psi was used
  Verdict verdict = Verdict::Unmatched;
  bool duplicate = false;  // exact match already claimed by another entry
};

struct UnclaimedGraph {
  ClassKey key;
  std::string graph6;
  std::string psi;
};

struct CountDiscrepancy {
  int edges = 0;
  std::optional<int> delta;
  int stated = 0;
  std::size_t enumerated = 0;
};

struct TableCheck {
  std::vector<TableDiff> diffs;
  std::vector<UnclaimedGraph> unclaimed;  // enumerated graphs without a printed psi
  std::vector<CountDiscrepancy> count_discrepancies;
  std::map<int, std::size_t> printed_per_edges;
  std::map<int, std::size_t> enumerated_per_edges;
  std::map<ClassKey, std::size_t> class_counts;

  std::size_t count(Verdict verdict) const;
};

/// Terms of a polynomial as written, split at '+'/'-' unless the sign
/// directly follows '^' (so a garbled exponent stays inside its term).
std::vector<std::string> split_terms(std::string_view text);

/// Levenshtein distance between term sequences.
std::size_t term_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// True when the term sequences differ by at most one inserted, deleted or
/// substituted term.
bool within_one_term(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Matches each printed polynomial against psi of the enumerated graphs of
/// its class: exact text match, else a computed psi one term away
/// (typo-corrected), else unmatched.
TableCheck verify_printed_tables(const EnumerateOptions& options = {});

}  // namespace qgraph
