#pragma once

#include <string>
#include <vector>

#include "qgraph/cospec.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/printed_tables.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

enum class Format { Json, Csv, Graph6, Dot, Text };

std::string to_string(Format format);
/// Throws std::invalid_argument for unknown names.
Format parse_format(const std::string& name);

inline constexpr int kLambdaDigits = 15;

/// Decimal rendering with kLambdaDigits significant digits.
std::string format_decimal(double value);

std::string render_graphs(const std::vector<Graph>& graphs, Format format);
std::string render_charpoly(const std::vector<Graph>& graphs, Format format);
std::string render_spectrum(const std::string& graph6, const SpectrumReport& report, Format format);
std::string render_scan(const CospectralReport& report, Format format);
std::string render_table_check(const TableCheck& check, Format format);

}  // namespace qgraph
