#pragma once

#include <string_view>
#include <vector>

namespace knotmosaic::detail {

/// Splits matrix text into rows of tokens. Rows end at '\n' or '/';
/// tokens are separated by whitespace or commas; blank rows are dropped.
std::vector<std::vector<std::string_view>> split_rows(std::string_view text);

}  // namespace knotmosaic::detail
