#ifndef HALFINT_QEXP_IO_HPP
#define HALFINT_QEXP_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halfint/qexpansion.hpp"

namespace halfint {

/// Line-oriented text format for truncated expansions, canonical enough to
/// diff: fixed header order (qexp v1 / note* / field / k,halfint,level,char /
/// first / prec), then exactly prec - first dense coefficient lines, each a
/// comma-separated list of d rationals. UTF-8, LF endings. parse(write(f))
/// reproduces f exactly and write(parse(text)) is byte-identical for
/// canonical inputs.
QExpansion parse_qexp(std::string_view text);
std::string write_qexp(const QExpansion& f);

QExpansion read_qexp_file(const std::string& path);
void write_qexp_file(const QExpansion& f, const std::string& path);

/// Header-only field spec: "Q" or "Q[x]/(c0,c1,...,1) name".
FieldPtr parse_field_spec(std::string_view spec);

/// Eigenvalue table: `eigen v1`, a field line, then `eigenvalue p <csv>`
/// lines with strictly increasing p.
struct EigenTable {
  FieldPtr field;
  std::vector<std::pair<long, FieldElement>> values;
};

EigenTable parse_eigen_table(std::string_view text);
std::string write_eigen_table(const EigenTable& table);
EigenTable read_eigen_file(const std::string& path);

}  // namespace halfint

#endif
