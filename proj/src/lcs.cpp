#include "seaweed/lcs.hpp"

#include "seaweed/multiply.hpp"

#include <algorithm>
#include <stdexcept>

namespace seaweed {

SeaweedMatrix build(std::string_view a, std::string_view b) {
    SeaweedMatrix m = empty_matrix(static_cast<int>(b.size()));
    for (char ch : a) m = compose_balanced(m, single_row(static_cast<unsigned char>(ch), b));
    return m;
}

int lcs_dp_oracle(std::string_view a, std::string_view b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
    for (int i = 1; i <= m; ++i) {
        cur[0] = 0;
        for (int j = 1; j <= n; ++j) {
            if (a[i - 1] == b[j - 1]) cur[j] = prev[j - 1] + 1;
            else cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::vector<std::vector<int>> all_substring_scores_oracle(std::string_view a, std::string_view b) {
    if (a.size() > 512 || b.size() > 512)
        throw std::invalid_argument("all_substring_scores_oracle: inputs beyond test scale");
    const int n = static_cast<int>(b.size());
    std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        // one quadratic DP for a against b[i+1..n]; row of prefix scores
        std::string_view suffix = b.substr(i);
        const int len = static_cast<int>(suffix.size());
        std::vector<int> prev(len + 1, 0), cur(len + 1, 0);
        for (std::size_t ai = 1; ai <= a.size(); ++ai) {
            cur[0] = 0;
            for (int j = 1; j <= len; ++j) {
                if (a[ai - 1] == suffix[j - 1]) cur[j] = prev[j - 1] + 1;
                else cur[j] = std::max(prev[j], cur[j - 1]);
            }
            std::swap(prev, cur);
        }
        for (int j = i; j <= n; ++j) table[i][j] = prev[j - i];
    }
    return table;
}

}  // namespace seaweed
