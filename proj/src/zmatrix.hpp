#ifndef PTK_ZMATRIX_HPP
#define PTK_ZMATRIX_HPP

/*
 * Dense integer matrix helpers for finite abelian group computations:
 * column Hermite reduction, integer kernels, exact linear solves, and Smith
 * normal form with tracked row transforms.  Row-major storage; all entries
 * exact.  Internal to the library.
 */

#include <optional>
#include <utility>
#include <vector>

#include "ptk/padic.hpp" // Int

namespace ptk::zmat {

using Mat = std::vector<std::vector<Int>>;

inline int rows(const Mat& a) { return static_cast<int>(a.size()); }
inline int cols(const Mat& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

inline Mat zero(int r, int c) { return Mat(static_cast<size_t>(r), std::vector<Int>(static_cast<size_t>(c), 0)); }

inline Mat identity(int n) {
    Mat a = zero(n, n);
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return a;
}

inline Mat mul(const Mat& a, const Mat& b) {
    Mat c = zero(rows(a), cols(b));
    for (int i = 0; i < rows(a); ++i)
        for (int k = 0; k < cols(a); ++k) {
            const Int& x = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (x == 0) continue;
            for (int j = 0; j < cols(b); ++j)
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    x * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    return c;
}

inline std::vector<Int> mul_vec(const Mat& a, const std::vector<Int>& x) {
    std::vector<Int> y(static_cast<size_t>(rows(a)), 0);
    for (int i = 0; i < rows(a); ++i)
        for (int j = 0; j < cols(a); ++j)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                y[static_cast<size_t>(i)] +=
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    return y;
}

// Column echelon reduction in place; ops are mirrored onto *mirror when
// given (same column count).  Returns the pivot row of each surviving
// echelon column.
inline std::vector<int> column_echelon(Mat& a, Mat* mirror) {
    int r = rows(a), c = cols(a);
    std::vector<int> pivot_rows;
    int col = 0;
    auto colswap = [&](Mat& m, int i, int j) {
        for (auto& row : m) std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
    };
    auto coladd = [&](Mat& m, int dst, int src, const Int& q) {
        if (q == 0) return;
        for (auto& row : m)
            row[static_cast<size_t>(dst)] += q * row[static_cast<size_t>(src)];
    };
    auto colneg = [&](Mat& m, int i) {
        for (auto& row : m) row[static_cast<size_t>(i)] = -row[static_cast<size_t>(i)];
    };
    for (int row = 0; row < r && col < c; ++row) {
        // gcd-eliminate this row across columns col..c-1
        for (;;) {
            int nz = -1;
            for (int j = col; j < c; ++j)
                if (a[static_cast<size_t>(row)][static_cast<size_t>(j)] != 0) {
                    if (nz < 0 ||
                        abs(a[static_cast<size_t>(row)][static_cast<size_t>(j)]) <
                            abs(a[static_cast<size_t>(row)][static_cast<size_t>(nz)]))
                        nz = j;
                }
            if (nz < 0) break; // row is zero from col on
            if (nz != col) {
                colswap(a, nz, col);
                if (mirror) colswap(*mirror, nz, col);
            }
            bool clean = true;
            const Int p = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int j = col + 1; j < c; ++j) {
                Int q = a[static_cast<size_t>(row)][static_cast<size_t>(j)] / p;
                coladd(a, j, col, -q);
                if (mirror) coladd(*mirror, j, col, -q);
                if (a[static_cast<size_t>(row)][static_cast<size_t>(j)] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
            if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] < 0) {
                colneg(a, col);
                if (mirror) colneg(*mirror, col);
            }
            // reduce earlier columns against this pivot
            const Int p = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int j = 0; j < col; ++j) {
                Int q = a[static_cast<size_t>(row)][static_cast<size_t>(j)];
                // floor division keeps the residue in [0, p)
                Int f = q / p;
                if (q - f * p < 0) f -= 1;
                coladd(a, j, col, -f);
                if (mirror) coladd(*mirror, j, col, -f);
            }
            pivot_rows.push_back(row);
            ++col;
        }
    }
    return pivot_rows;
}

// Basis (as columns) of the integer kernel of a.
inline Mat kernel(Mat a) {
    int c = cols(a);
    Mat mirror = identity(c);
    std::vector<int> piv = column_echelon(a, &mirror);
    int rank = static_cast<int>(piv.size());
    Mat k = zero(c, c - rank);
    for (int j = rank; j < c; ++j)
        for (int i = 0; i < c; ++i)
            k[static_cast<size_t>(i)][static_cast<size_t>(j - rank)] =
                mirror[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return k;
}

// One integer solution of a x = b, if any.
inline std::optional<std::vector<Int>> solve(Mat a, const std::vector<Int>& b) {
    int r = rows(a), c = cols(a);
    Mat mirror = identity(c);
    std::vector<int> piv = column_echelon(a, &mirror);
    std::vector<Int> z(static_cast<size_t>(c), 0);
    std::vector<Int> res = b;
    int col = 0;
    for (int row = 0; row < r; ++row) {
        if (col < static_cast<int>(piv.size()) && piv[static_cast<size_t>(col)] == row) {
            const Int& pv = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            Int q = res[static_cast<size_t>(row)] / pv;
            if (q * pv != res[static_cast<size_t>(row)]) return std::nullopt;
            z[static_cast<size_t>(col)] = q;
            for (int i = row; i < r; ++i)
                res[static_cast<size_t>(i)] -= q * a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            ++col;
        } else if (res[static_cast<size_t>(row)] != 0) {
            return std::nullopt;
        }
    }
    return mul_vec(mirror, z);
}

// Columnwise exact solve; throws when a column has no solution.
inline Mat solve_matrix(const Mat& a, const Mat& b) {
    Mat x = zero(cols(a), cols(b));
    for (int j = 0; j < cols(b); ++j) {
        std::vector<Int> col(static_cast<size_t>(rows(b)));
        for (int i = 0; i < rows(b); ++i) col[static_cast<size_t>(i)] = b[static_cast<size_t>(i)][static_cast<size_t>(j)];
        auto s = solve(a, col);
        if (!s) throw std::logic_error("solve_matrix: inconsistent system");
        for (int i = 0; i < cols(a); ++i) x[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*s)[static_cast<size_t>(i)];
    }
    return x;
}

struct Snf {
    Mat u, uinv;        // u * a_original * (col ops) = diag(d); uinv = u^-1
    std::vector<Int> d; // nonnegative, d[i] divides d[i+1]
};

// Smith normal form with the row transform tracked both ways.
inline Snf snf(Mat a) {
    int r = rows(a), c = cols(a);
    Snf out;
    out.u = identity(r);
    out.uinv = identity(r);
    auto rowswap = [&](int i, int j) {
        std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
        std::swap(out.u[static_cast<size_t>(i)], out.u[static_cast<size_t>(j)]);
        for (auto& row : out.uinv)
            std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
    };
    auto rowadd = [&](int dst, int src, const Int& q) { // row dst += q * row src
        if (q == 0) return;
        for (int j = 0; j < c; ++j)
            a[static_cast<size_t>(dst)][static_cast<size_t>(j)] += q * a[static_cast<size_t>(src)][static_cast<size_t>(j)];
        for (int j = 0; j < r; ++j)
            out.u[static_cast<size_t>(dst)][static_cast<size_t>(j)] += q * out.u[static_cast<size_t>(src)][static_cast<size_t>(j)];
        for (auto& row : out.uinv)
            row[static_cast<size_t>(src)] -= q * row[static_cast<size_t>(dst)];
    };
    auto rowneg = [&](int i) {
        for (auto& x : a[static_cast<size_t>(i)]) x = -x;
        for (auto& x : out.u[static_cast<size_t>(i)]) x = -x;
        for (auto& row : out.uinv) row[static_cast<size_t>(i)] = -row[static_cast<size_t>(i)];
    };
    auto colswap = [&](int i, int j) {
        for (auto& row : a) std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
    };
    auto coladd = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (auto& row : a)
            row[static_cast<size_t>(dst)] += q * row[static_cast<size_t>(src)];
    };

    int n = std::min(r, c);
    for (int k = 0; k < n; ++k) {
        for (;;) {
            // locate a minimal nonzero entry in the trailing block
            int bi = -1, bj = -1;
            for (int i = k; i < r; ++i)
                for (int j = k; j < c; ++j)
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0 &&
                        (bi < 0 || abs(a[static_cast<size_t>(i)][static_cast<size_t>(j)]) <
                                       abs(a[static_cast<size_t>(bi)][static_cast<size_t>(bj)]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) { bi = bj = k; break; } // trailing block is zero
            if (bi != k) rowswap(bi, k);
            if (bj != k) colswap(bj, k);
            const Int pv = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
            bool again = false;
            for (int i = k + 1; i < r; ++i) {
                Int q = a[static_cast<size_t>(i)][static_cast<size_t>(k)] / pv;
                rowadd(i, k, -q);
                if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) again = true;
            }
            for (int j = k + 1; j < c; ++j) {
                Int q = a[static_cast<size_t>(k)][static_cast<size_t>(j)] / pv;
                coladd(j, k, -q);
                if (a[static_cast<size_t>(k)][static_cast<size_t>(j)] != 0) again = true;
            }
            if (again) continue;
            // divisibility sweep: pivot must divide the trailing block
            bool fixed = true;
            for (int i = k + 1; i < r && fixed; ++i)
                for (int j = k + 1; j < c && fixed; ++j)
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] % pv != 0) {
                        rowadd(k, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] < 0) rowneg(k);
    }
    out.d.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) out.d[static_cast<size_t>(k)] = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    return out;
}

} // namespace ptk::zmat

#endif
