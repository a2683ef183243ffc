#ifndef seaweed_multiply_hpp
#define seaweed_multiply_hpp

#include "seaweed/core.hpp"

namespace seaweed {

// Fast (min,+)-product of permutation-distribution matrices, identical to
// minplus_oracle but subquadratic: divide and conquer on the middle index
// with a linear boundary merge. Ties in the underlying minima are broken
// toward the lower middle index; the product density is unique either way.
PermutationNonzeros multiply_core(const PermutationNonzeros& a, const PermutationNonzeros& b);

// Composition of the matrices of two string pairs (a1, b) and (a2, b) into
// the matrix of (a1 a2, b): a's dag stacked on top of b's. Pass-through
// rows and columns are spliced directly; the n remaining nonzeros of each
// operand are rank-relabelled, multiplied with multiply_core, and put back.
SeaweedMatrix compose(const SeaweedMatrix& a, const SeaweedMatrix& b);

// One factor of a balanced decomposition: an infinite permutation that acts
// as col = row + shift outside [window_start, window_start + core.count())
// on its row line, and as the stated window-local permutation inside.
struct Factor {
    int window_start = 0;
    int shift = 0;
    PermutationNonzeros core;
};

// Ordered factor list whose (min,+)-fold reproduces the decomposed matrix
// with its columns shifted by total_shift.
struct FactorChain {
    std::vector<Factor> factors;
    int total_shift = 0;
    int original_depth = 0;
    int original_width = 0;
};

// Balanced decomposition of a seaweed matrix into factors with core size at
// most 2*depth: the width is halved recursively while it exceeds the depth;
// the exactly-depth-many nonzeros crossing each split are rerouted through a
// buffer sorted by row, which keeps them uncrossed in the left factor. Each
// split shifts the column line by depth, recorded in total_shift.
FactorChain decompose(const SeaweedMatrix& b);

// A matrix being folded through a factor chain. Row ranks are final; column
// ranks absorb the trivial per-step shifts, so each factor acts on a fixed
// column window.
struct WindowedProduct {
    std::vector<int> fwd;
    std::vector<int> inv;
    int shift_applied = 0;
};

// Applies one factor: the w nonzeros whose columns lie in the factor's
// window are extracted, rank-relabelled, multiplied by the factor core, and
// spliced back; every other column is remapped by the trivial shift (held
// lazily in shift_applied).
void multiply_windowed(WindowedProduct& c, const Factor& f);

// Equals compose(a, b) exactly, at cost O(a.depth + sqrt(min_depth) * n):
// the deeper operand is folded through the decomposition of the shallower
// one; when a is the shallower operand the reversal symmetry is applied.
SeaweedMatrix compose_balanced(const SeaweedMatrix& a, const SeaweedMatrix& b);

}  // namespace seaweed

#endif
