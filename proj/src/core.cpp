#include "seaweed/core.hpp"

#include <algorithm>
#include <cassert>

namespace seaweed {

std::vector<std::pair<int, int>> PermutationNonzeros::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(col_of_row_.size());
    for (int r = 0; r < count(); ++r) out.emplace_back(r, col_of_row_[r]);
    return out;
}

std::vector<int> PermutationNonzeros::inverse() const {
    std::vector<int> inv(col_of_row_.size(), -1);
    for (int r = 0; r < count(); ++r) inv[col_of_row_[r]] = r;
    return inv;
}

bool PermutationNonzeros::is_permutation() const {
    const int n = count();
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
        int c = col_of_row_[r];
        if (c < 0 || c >= n || seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

PermutationNonzeros PermutationNonzeros::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return PermutationNonzeros(std::move(v));
}

SeaweedMatrix::SeaweedMatrix(int depth, int width, std::vector<int> fwd)
    : depth_(depth), width_(width), fwd_(std::move(fwd)) {
    if (depth_ < 0 || width_ < 0 || static_cast<int>(fwd_.size()) != depth_ + width_)
        throw std::invalid_argument("SeaweedMatrix: bad dimensions");
    inv_.assign(fwd_.size(), -1);
    for (int r = 0; r < size(); ++r) {
        int c = fwd_[r];
        if (c < 0 || c >= size() || inv_[c] != -1)
            throw std::invalid_argument("SeaweedMatrix: fwd is not a permutation");
        inv_[c] = r;
    }
}

int SeaweedMatrix::score_substring(int i, int j) const {
    if (i < 0 || j < i || j > width_) throw std::out_of_range("score_substring: bad (i,j)");
    // rows > i  <=>  rank >= i + depth;  cols < j  <=>  rank < j
    int count = 0;
    for (int r = i + depth_; r < size(); ++r) count += fwd_[r] < j;
    return j - i - count;
}

std::vector<int> SeaweedMatrix::row0_scores() const {
    // score_substring(0, k) for every k, in one sweep: the defect
    // d(0, k) counts rows >= depth with column < k.
    std::vector<char> in_suffix(size() + 1, 0);
    for (int r = depth_; r < size(); ++r) in_suffix[fwd_[r]] = 1;
    std::vector<int> scores(width_ + 1);
    int defect = 0;
    scores[0] = 0;
    for (int k = 1; k <= width_; ++k) {
        defect += in_suffix[k - 1];
        scores[k] = k - defect;
    }
    return scores;
}

SeaweedMatrix SeaweedMatrix::reversed() const {
    const int n = size();
    std::vector<int> fwd(n);
    for (int r = 0; r < n; ++r) fwd[n - 1 - r] = n - 1 - fwd_[r];
    return SeaweedMatrix(depth_, width_, std::move(fwd));
}

SeaweedMatrix empty_matrix(int width) {
    if (width < 0) throw std::invalid_argument("empty_matrix: negative width");
    std::vector<int> fwd(width);
    for (int i = 0; i < width; ++i) fwd[i] = i;
    return SeaweedMatrix(0, width, std::move(fwd));
}

SeaweedMatrix single_row(unsigned char alpha, std::string_view b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> fwd(n + 1, -1);
    int prev = 0;  // local row of the last match seen (0 = the left seaweed)
    for (int p = 1; p <= n; ++p) {
        if (static_cast<unsigned char>(b[p - 1]) == alpha) {
            fwd[prev] = p - 1;
            prev = p;
        }
    }
    fwd[prev] = n;
    for (int r = 1; r <= n; ++r)
        if (fwd[r] == -1) fwd[r] = r - 1;
    return SeaweedMatrix(1, n, std::move(fwd));
}

DominanceCounter::DominanceCounter(const SeaweedMatrix& m)
    : depth_(m.depth()), width_(m.width()), n_(m.size()) {
    levels_.push_back(m.fwd());
    for (int run = 1; run < n_; run *= 2) {
        const std::vector<int>& prev = levels_.back();
        std::vector<int> next(n_);
        for (int start = 0; start < n_; start += 2 * run) {
            int mid = std::min(start + run, n_);
            int end = std::min(start + 2 * run, n_);
            std::merge(prev.begin() + start, prev.begin() + mid,
                       prev.begin() + mid, prev.begin() + end,
                       next.begin() + start);
        }
        levels_.push_back(std::move(next));
    }
}

int DominanceCounter::suffix_count_below(int pos, int limit) const {
    if (pos >= n_ || limit <= 0) return 0;
    if (pos < 0) pos = 0;
    // Walk up the implicit segment tree: whenever pos is the left end of a
    // right-sibling run at some level, count that run and skip it.
    int total = 0;
    int level = 0;
    while (pos < n_) {
        int run = 1 << level;
        // grow while pos is aligned and the doubled run stays inside [pos, n)
        while (pos % (2 * run) == 0 && pos + 2 * run <= n_ && level + 1 < static_cast<int>(levels_.size())) {
            run *= 2;
            ++level;
        }
        int end = std::min(pos + run, n_);
        const std::vector<int>& lv = levels_[level];
        total += static_cast<int>(std::lower_bound(lv.begin() + pos, lv.begin() + end, limit) -
                                  (lv.begin() + pos));
        pos = end;
        level = 0;
    }
    return total;
}

int DominanceCounter::dominance(int i, int j) const {
    return suffix_count_below(i + depth_, j);
}

int DominanceCounter::score_substring(int i, int j) const {
    if (i < 0 || j < i || j > width_) throw std::out_of_range("score_substring: bad (i,j)");
    return j - i - dominance(i, j);
}

PermutationNonzeros minplus_oracle(const PermutationNonzeros& a, const PermutationNonzeros& b) {
    if (a.count() != b.count()) throw std::invalid_argument("minplus_oracle: size mismatch");
    const int n = a.count();
    // distribution: d(i,k) = #{nonzeros (r,c) : r >= i, c < k}, 0 <= i,k <= n
    auto distribution = [n](const PermutationNonzeros& p) {
        std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
        for (int i = n - 1; i >= 0; --i)
            for (int k = 0; k <= n; ++k) d[i][k] = d[i + 1][k] + (p.col(i) < k);
        return d;
    };
    std::vector<std::vector<int>> da = distribution(a);
    std::vector<std::vector<int>> db = distribution(b);
    std::vector<std::vector<int>> dc(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        std::vector<int>& row = dc[i];
        row.assign(n + 1, n + 1);
        const std::vector<int>& ai = da[i];
        for (int j = 0; j <= n; ++j) {
            const int aij = ai[j];
            const std::vector<int>& bj = db[j];
            for (int k = 0; k <= n; ++k) row[k] = std::min(row[k], aij + bj[k]);
        }
    }
    std::vector<int> fwd(n, -1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int v = dc[r][c + 1] - dc[r + 1][c + 1] - dc[r][c] + dc[r + 1][c];
            if (v != 0) {
                assert(v == 1 && fwd[r] == -1);
                fwd[r] = c;
            }
        }
    PermutationNonzeros out{std::move(fwd)};
    assert(out.is_permutation());
    return out;
}

}  // namespace seaweed
