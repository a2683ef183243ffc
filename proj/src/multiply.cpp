#include "seaweed/multiply.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace seaweed {

namespace {

// Recursive kernel of multiply_core over raw rank permutations.
//
// The two half products are embedded back into the full index space as
// nonzero sets L (low middle indices) and H (high). With
//   g(i,k) = #{H : row < i, col < k} - #{L : row >= i, col >= k},
// g is non-decreasing in both directions with unit steps, and
//   istar(k) = max{ i in [0,n] : g(i,k) <= 0 }
// traces a monotone boundary. The product density is
//   - D_L at cells strictly below-left of the boundary (g at the cell's
//     lower-right corner <= 0),
//   - D_H at cells strictly above-right (g at the upper-left corner > 0),
//   - D_L(r,c) - g+(r,c+1) - g+(r+1,c) + g(r+1,c+1) at straddling cells,
// the last being the second difference of min(f_hi, f_lo) spelled out.
std::vector<int> mul_rec(std::vector<int> a, std::vector<int> b) {
    const int n = static_cast<int>(a.size());
    if (n <= 1) return a;
    const int h = n / 2;

    // Split a by column, b by row; re-rank order-preservingly.
    std::vector<int> rows_lo, rows_hi, a_lo, a_hi;
    rows_lo.reserve(h);
    a_lo.reserve(h);
    rows_hi.reserve(n - h);
    a_hi.reserve(n - h);
    for (int r = 0; r < n; ++r) {
        if (a[r] < h) {
            rows_lo.push_back(r);
            a_lo.push_back(a[r]);
        } else {
            rows_hi.push_back(r);
            a_hi.push_back(a[r] - h);
        }
    }
    std::vector<int> cols_lo, cols_hi, b_lo(h), b_hi(n - h);
    {
        std::vector<char> is_lo(n, 0);
        for (int r = 0; r < h; ++r) is_lo[b[r]] = 1;
        std::vector<int> rank(n);
        cols_lo.reserve(h);
        cols_hi.reserve(n - h);
        for (int c = 0; c < n; ++c) {
            if (is_lo[c]) {
                rank[c] = static_cast<int>(cols_lo.size());
                cols_lo.push_back(c);
            } else {
                rank[c] = static_cast<int>(cols_hi.size());
                cols_hi.push_back(c);
            }
        }
        for (int r = 0; r < h; ++r) b_lo[r] = rank[b[r]];
        for (int r = h; r < n; ++r) b_hi[r - h] = rank[b[r]];
    }

    std::vector<int> lo = mul_rec(std::move(a_lo), std::move(b_lo));
    std::vector<int> hi = mul_rec(std::move(a_hi), std::move(b_hi));

    // Uncompress both half products into the full index space.
    std::vector<int> row_col(n), col_row(n);
    std::vector<char> row_hi(n), col_hi(n);
    for (int i = 0; i < h; ++i) {
        row_col[rows_lo[i]] = cols_lo[lo[i]];
        row_hi[rows_lo[i]] = 0;
    }
    for (int i = 0; i < n - h; ++i) {
        row_col[rows_hi[i]] = cols_hi[hi[i]];
        row_hi[rows_hi[i]] = 1;
    }
    for (int r = 0; r < n; ++r) {
        col_row[row_col[r]] = r;
        col_hi[row_col[r]] = row_hi[r];
    }

    // g deltas across one rank row / rank column.
    auto cross_row = [&](int row, int k) -> int {
        return row_hi[row] ? (row_col[row] < k) : (row_col[row] >= k);
    };
    auto cross_col = [&](int i, int k) -> int {
        return col_hi[k] ? (col_row[k] < i) : (col_row[k] >= i);
    };

    // Boundary trace; g(n, 0) = 0 always.
    std::vector<int> istar(n + 1), gat(n + 1);
    istar[0] = n;
    gat[0] = 0;
    {
        int i = n, g = 0;
        for (int k = 0; k < n; ++k) {
            g += cross_col(i, k);
            while (g > 0) {
                --i;
                g -= cross_row(i, k + 1);
            }
            istar[k + 1] = i;
            gat[k + 1] = g;
        }
    }

    std::vector<int> out(n, -1);
    for (int r = 0; r < n; ++r) {
        int c = row_col[r];
        if (!row_hi[r] && r < istar[c + 1]) out[r] = c;
        else if (row_hi[r] && r > istar[c]) out[r] = c;
    }

    // Straddling cells, column by column.
    std::vector<int> right_g, left_g;
    for (int k = 0; k < n; ++k) {
        const int rlo = istar[k + 1];
        const int rhi = std::min(istar[k], n - 1);
        if (rlo > rhi) continue;
        // g(rho, k+1) for rho in [rlo, rhi+1], walking down from the trace point
        right_g.assign(rhi + 2 - rlo, 0);
        int val = gat[k + 1];
        right_g[0] = val;
        for (int row = rlo; row <= rhi; ++row) {
            val += cross_row(row, k + 1);
            right_g[row + 1 - rlo] = val;
        }
        // g(rho+1, k) for rho in [rlo, rhi], anchored at the trace point (istar[k], k)
        left_g.assign(rhi + 1 - rlo, 0);
        const int anchor = istar[k];
        int below = gat[k];
        if (rhi + 1 > anchor) below += cross_row(anchor, k);  // one step below the trace point
        for (int row = rhi + 1; row >= rlo + 1; --row) {
            left_g[row - (rlo + 1)] = below;
            if (row - 1 >= rlo + 1) below -= cross_row(row - 1, k);
        }
        for (int rho = rlo; rho <= rhi; ++rho) {
            const int ne = right_g[rho - rlo];
            const int se = right_g[rho + 1 - rlo];
            const int sw = left_g[rho - rlo];
            const int dl = (!row_hi[rho] && row_col[rho] == k) ? 1 : 0;
            const int v = dl - std::max(ne, 0) - std::max(sw, 0) + se;
            assert(v == 0 || v == 1);
            if (v == 1) {
                assert(out[rho] == -1);
                out[rho] = k;
            }
        }
    }
#ifndef NDEBUG
    {
        std::vector<char> seen(n, 0);
        for (int r = 0; r < n; ++r) {
            assert(out[r] >= 0 && !seen[out[r]]);
            seen[out[r]] = 1;
        }
    }
#endif
    return out;
}

}  // namespace

PermutationNonzeros multiply_core(const PermutationNonzeros& a, const PermutationNonzeros& b) {
    if (a.count() != b.count()) throw std::invalid_argument("multiply_core: size mismatch");
    return PermutationNonzeros(mul_rec(a.cols(), b.cols()));
}

SeaweedMatrix compose(const SeaweedMatrix& a, const SeaweedMatrix& b) {
    if (a.width() != b.width()) throw std::invalid_argument("compose: width mismatch");
    const int n = a.width();
    const int p = a.depth();
    const int q = b.depth();
    std::vector<int> cfwd(p + q + n, -1);

    // Rows entering on the lower dag's left edge pass through unchanged.
    for (int r = 0; r < q; ++r) cfwd[r] = b.fwd()[r];

    // Upper-dag nonzeros leaving through the right edge, shifted past the
    // lower dag; the rest feed the middle-index product.
    std::vector<int> arows, pf;
    arows.reserve(n);
    pf.reserve(n);
    for (int r = 0; r < p + n; ++r) {
        int c = a.fwd()[r];
        if (c >= n) cfwd[r + q] = c + q;
        else {
            arows.push_back(r);
            pf.push_back(c);
        }
    }

    // Lower-dag nonzeros below the interface, columns re-ranked.
    std::vector<int> bcols, qf(n);
    {
        std::vector<char> used(q + n, 0);
        for (int r = q; r < q + n; ++r) used[b.fwd()[r]] = 1;
        std::vector<int> rank(q + n, -1);
        bcols.reserve(n);
        for (int c = 0; c < q + n; ++c)
            if (used[c]) {
                rank[c] = static_cast<int>(bcols.size());
                bcols.push_back(c);
            }
        for (int r = q; r < q + n; ++r) qf[r - q] = rank[b.fwd()[r]];
    }

    PermutationNonzeros prod =
        multiply_core(PermutationNonzeros(std::move(pf)), PermutationNonzeros(std::move(qf)));
    for (int i = 0; i < n; ++i) cfwd[arows[i] + q] = bcols[prod.col(i)];
    return SeaweedMatrix(p + q, n, std::move(cfwd));
}

namespace {

// One decomposition step on a window-local permutation of size w = q + width:
// rows < q+h with columns < h stay in the left part; rows >= q+h go to the
// right part shifted by h; the exactly q crossing nonzeros are routed through
// the buffer columns [h, h+q) of the left part (sorted by row, which keeps
// them uncrossed there) and re-emitted from the buffer rows [0, q) of the
// right part.
void decompose_rec(std::vector<int> perm, int q, int anchor,
                   std::vector<std::pair<int, std::vector<int>>>& leaves) {
    const int w = static_cast<int>(perm.size());
    const int width = w - q;
    if (width <= q) {
        leaves.emplace_back(anchor, std::move(perm));
        return;
    }
    const int h = width / 2;
    std::vector<int> left(q + h, -1), right(w - h, -1);
    std::vector<std::pair<int, int>> crossing;
    crossing.reserve(q);
    for (int r = 0; r < w; ++r) {
        int c = perm[r];
        if (c < h) {
            assert(r < q + h);  // the high-row low-column block holds no nonzeros
            left[r] = c;
        } else if (r >= q + h) {
            right[r - h] = c - h;
        } else {
            crossing.emplace_back(r, c);
        }
    }
    assert(static_cast<int>(crossing.size()) == q);
    for (int t = 0; t < q; ++t) {
        left[crossing[t].first] = h + t;
        right[t] = crossing[t].second - h;
    }
    decompose_rec(std::move(left), q, anchor, leaves);
    decompose_rec(std::move(right), q, anchor + h, leaves);
}

}  // namespace

FactorChain decompose(const SeaweedMatrix& b) {
    if (b.depth() < 1) throw std::invalid_argument("decompose: depth must be >= 1");
    const int q = b.depth();
    std::vector<std::pair<int, std::vector<int>>> leaves;
    decompose_rec(b.fwd(), q, 0, leaves);

    FactorChain chain;
    chain.original_depth = q;
    chain.original_width = b.width();
    chain.total_shift = (static_cast<int>(leaves.size()) - 1) * q;
    chain.factors.reserve(leaves.size());
    for (int idx = 0; idx < static_cast<int>(leaves.size()); ++idx) {
        Factor f;
        // The window sits q before its cumulative split offset on the
        // original row line and moves right by q per preceding factor.
        f.window_start = -q + leaves[idx].first + idx * q;
        f.shift = q;
        f.core = PermutationNonzeros(std::move(leaves[idx].second));
        chain.factors.push_back(std::move(f));
    }
    return chain;
}

void multiply_windowed(WindowedProduct& c, const Factor& f) {
    const int w = f.core.count();
    const int n = static_cast<int>(c.fwd.size());
    const int start = f.window_start - c.shift_applied + f.shift;
    if (start < 0 || start + w > n)
        throw std::invalid_argument("multiply_windowed: window outside the column line");

    std::vector<int> rows(w), pf(w);
    for (int x = 0; x < w; ++x) rows[x] = c.inv[start + x];
    std::sort(rows.begin(), rows.end());
    for (int i = 0; i < w; ++i) pf[i] = c.fwd[rows[i]] - start;

    PermutationNonzeros prod = multiply_core(PermutationNonzeros(std::move(pf)), f.core);
    for (int i = 0; i < w; ++i) {
        int col = start + prod.col(i);
        c.fwd[rows[i]] = col;
        c.inv[col] = rows[i];
    }
    c.shift_applied += f.shift;
}

SeaweedMatrix compose_balanced(const SeaweedMatrix& a, const SeaweedMatrix& b) {
    if (a.width() != b.width()) throw std::invalid_argument("compose_balanced: width mismatch");
    if (b.depth() == 0) return a;
    if (a.depth() == 0) return b;
    if (a.depth() < b.depth())
        return compose_balanced(b.reversed(), a.reversed()).reversed();

    const int p = a.depth();
    const int q = b.depth();
    const int n = a.width();
    const int total = p + q + n;

    WindowedProduct c;
    c.fwd.assign(total, -1);
    c.inv.assign(total, -1);
    for (int t = 0; t < q; ++t) c.fwd[t] = t;
    for (int r = 0; r < p + n; ++r) c.fwd[r + q] = a.fwd()[r] + q;
    for (int r = 0; r < total; ++r) c.inv[c.fwd[r]] = r;

    FactorChain chain = decompose(b);
    for (const Factor& f : chain.factors) multiply_windowed(c, f);
    return SeaweedMatrix(p + q, n, std::move(c.fwd));
}

}  // namespace seaweed
