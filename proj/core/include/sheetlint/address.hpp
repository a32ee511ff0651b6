#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sheetlint {

// Largest addressable column (ZZZ) and row. Anything larger is rejected as
// malformed rather than silently wrapping.
inline constexpr int kMaxColumn = 18278;
inline constexpr int kMaxRow = 9'999'999;

// A 1-based cell coordinate. Ordering is row-major (row first, then column),
// which is the tie-break order used everywhere output must be stable.
struct CellAddress {
  int col = 1;
  int row = 1;

  friend constexpr bool operator==(const CellAddress&, const CellAddress&) = default;
  friend constexpr std::strong_ordering operator<=>(const CellAddress& a,
                                                    const CellAddress& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
};

// Bijective base-26 column name: 1 -> "A", 26 -> "Z", 27 -> "AA".
std::string column_name(int col);

// Decodes a column name (case-insensitive). Returns 0 when the text is not a
// valid column name within kMaxColumn.
int column_index(std::string_view letters);

std::string to_string(CellAddress addr);

// Parses "B12"-style text. Throws ParseError(MalformedAddress).
CellAddress parse_address(std::string_view text);

std::ostream& operator<<(std::ostream& os, CellAddress addr);

}  // namespace sheetlint
