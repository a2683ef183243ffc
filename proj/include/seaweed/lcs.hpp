#ifndef seaweed_lcs_hpp
#define seaweed_lcs_hpp

#include "seaweed/core.hpp"

#include <string_view>
#include <vector>

namespace seaweed {

// Seaweed matrix of the whole pair (a, b): left fold of the single-character
// matrices of a. Satisfies score_substring(i, j) == LCS(a, b[i+1..j]).
SeaweedMatrix build(std::string_view a, std::string_view b);

// Classic quadratic LCS table; the independent reference for everything.
int lcs_dp_oracle(std::string_view a, std::string_view b);

// table[i][j] = LCS(a, b[i+1..j]) for 0 <= i <= j <= |b|, one DP pass per
// start position. Guarded to test scale.
std::vector<std::vector<int>> all_substring_scores_oracle(std::string_view a, std::string_view b);

}  // namespace seaweed

#endif
