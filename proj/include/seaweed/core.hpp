#ifndef seaweed_core_hpp
#define seaweed_core_hpp

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seaweed {

// A finite permutation matrix over ranks 0..count-1, stored row-major:
// col_of_row[r] is the column of the unique nonzero in row r.
class PermutationNonzeros {
public:
    PermutationNonzeros() = default;
    explicit PermutationNonzeros(std::vector<int> col_of_row)
        : col_of_row_(std::move(col_of_row)) {}

    int count() const { return static_cast<int>(col_of_row_.size()); }
    int col(int row) const { return col_of_row_[row]; }
    const std::vector<int>& cols() const { return col_of_row_; }

    std::vector<std::pair<int, int>> pairs() const;
    std::vector<int> inverse() const;

    // True when rows and cols each cover 0..count-1 exactly once.
    bool is_permutation() const;

    static PermutationNonzeros identity(int n);

    friend bool operator==(const PermutationNonzeros&, const PermutationNonzeros&) = default;

private:
    std::vector<int> col_of_row_;
};

// Implicit extended highest-score matrix of one string pair, stored as a
// permutation in local ranks.
//
// Conventions (fixed project-wide):
//   depth p     = length of the row-side string, width n = length of b.
//   fwd has p+n entries; fwd[r] = c means local row r maps to local column c.
//   Local row r encodes the half-integer row index  i = r - p + 1/2,
//   local col c encodes the half-integer col index  j = c + 1/2,
//   so rows span (-p, n) and cols span (0, p+n) in half-integer terms.
//   Outside this core the infinite matrix is the identity shifted by p.
class SeaweedMatrix {
public:
    SeaweedMatrix() = default;
    SeaweedMatrix(int depth, int width, std::vector<int> fwd);

    int depth() const { return depth_; }
    int width() const { return width_; }
    int size() const { return depth_ + width_; }

    const std::vector<int>& fwd() const { return fwd_; }
    const std::vector<int>& inv() const { return inv_; }

    // LCS(a, b[i+1..j]) for the pair (a, b) the matrix was built from:
    // j - i minus the number of core nonzeros with row > i and col < j.
    // Requires 0 <= i <= j <= width. Linear scan; see DominanceCounter for
    // the indexed form.
    int score_substring(int i, int j) const;

    // Scores of the row-side string against every prefix of b.
    std::vector<int> row0_scores() const;

    PermutationNonzeros core() const { return PermutationNonzeros(fwd_); }

    // The matrix of the pair with both strings reversed.
    SeaweedMatrix reversed() const;

    friend bool operator==(const SeaweedMatrix&, const SeaweedMatrix&) = default;

private:
    int depth_ = 0;
    int width_ = 0;
    std::vector<int> fwd_;
    std::vector<int> inv_;
};

// Depth-0 matrix of the given width (identity element for composition).
SeaweedMatrix empty_matrix(int width);

// Depth-1 matrix for one character against b, built by a single scan.
// With 1-based match positions p_1 < ... < p_t of alpha in b:
//   local row 0   -> column p_1 - 1 (or n when t = 0),
//   local row p_k -> column p_{k+1} - 1 (or n for k = t),
//   every other local row r -> column r - 1.
SeaweedMatrix single_row(unsigned char alpha, std::string_view b);

// Static dominance-counting index over the core nonzeros of one matrix.
// Mergesort tree over row ranks; levels hold column ranks in sorted runs.
// Build O(N log N), query O(log^2 N). Immutable after construction.
class DominanceCounter {
public:
    DominanceCounter() = default;
    explicit DominanceCounter(const SeaweedMatrix& m);

    int depth() const { return depth_; }
    int width() const { return width_; }

    // Number of core nonzeros with half-integer row > i and col < j,
    // for integer i in [-depth, width] and j in [0, depth+width].
    int dominance(int i, int j) const;

    // score_substring through the index instead of a scan.
    int score_substring(int i, int j) const;

private:
    // count of values < limit among positions [pos, n)
    int suffix_count_below(int pos, int limit) const;

    int depth_ = 0;
    int width_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> levels_;  // levels_[0] = leaves, sorted runs of 2^l
};

// Slow reference for (min,+)-multiplication of permutation-distribution
// matrices: materialises both distribution matrices, takes the product
// elementwise over the middle index, and recovers the density by finite
// differencing. The result is again a permutation matrix.
PermutationNonzeros minplus_oracle(const PermutationNonzeros& a, const PermutationNonzeros& b);

}  // namespace seaweed

#endif
