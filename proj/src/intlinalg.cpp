#include "toric/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace toric {

Int det_integer(const IMat& a) {
    const size_t n = a.size();
    for (const IVec& row : a)
        require(row.size() == n, ErrorCode::DimensionMismatch, "det: matrix not square");
    if (n == 0) return 1;
    IMat m = a;
    Int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool unimodular_test(const std::vector<IVec>& generators) {
    require(!generators.empty(), ErrorCode::BadInput, "unimodular_test: no generators");
    const size_t n = generators.front().size();
    require(generators.size() == n, ErrorCode::BadInput,
            "unimodular_test: need exactly n vectors in a rank-n lattice");
    Int d = det_integer(generators);
    return d == 1 || d == -1;
}

int rank_of(QMat a) {
    if (a.empty()) return 0;
    const size_t rows = a.size();
    const size_t cols = a.front().size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[row][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int rank_int(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    const size_t rows = a.size();
    const size_t cols = a.front().size();
    int rank = 0;
    size_t row = 0;
    Int prev = 1;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

// Reduced row echelon data for exact solving/nullspace extraction.
struct Echelon {
    QMat m;                       // reduced matrix
    std::vector<int> pivot_col;   // per echelon row
};

Echelon reduce(QMat a) {
    Echelon e;
    if (a.empty()) return e;
    const size_t rows = a.size();
    const size_t cols = a.front().size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        Rational inv = 1 / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        e.pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    e.m = std::move(a);
    return e;
}

}  // namespace

QMat nullspace(const QMat& a) {
    if (a.empty()) return {};
    const size_t cols = a.front().size();
    Echelon e = reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    QMat basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(cols, Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < e.pivot_col.size(); ++r)
            v[e.pivot_col[r]] = -e.m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    const size_t rows = a.size();
    require(b.size() == rows, ErrorCode::DimensionMismatch, "solve: rhs size mismatch");
    if (rows == 0) return QVec{};
    const size_t cols = a.front().size();
    QMat aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    Echelon e = reduce(std::move(aug));
    // Any pivot in the augmented column means the system is inconsistent.
    for (int c : e.pivot_col)
        if (static_cast<size_t>(c) == cols) return std::nullopt;
    QVec x(cols, Rational(0));
    for (size_t r = 0; r < e.pivot_col.size(); ++r)
        x[e.pivot_col[r]] = e.m[r][cols];
    return x;
}

namespace {

// Column Hermite reduction: returns H = A * U with U unimodular, where the
// processed part of H is in column echelon form. Kernel columns of H are
// identically zero and the matching columns of U give a saturated kernel
// basis.
struct ColHermite {
    IMat h;                      // m x n
    IMat u;                      // n x n unimodular (columns tracked)
    std::vector<int> pivot_row;  // per pivot column (prefix of columns)
};

ColHermite hermite_columns(const IMat& a) {
    const size_t m = a.size();
    const size_t n = m ? a.front().size() : 0;
    ColHermite res;
    res.h = a;
    res.u.assign(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) res.u[i][i] = 1;

    auto col_addmul = [&](size_t dst, size_t src, Int f) {
        // column dst += f * column src, in both H and U
        for (size_t i = 0; i < m; ++i) res.h[i][dst] += f * res.h[i][src];
        for (size_t i = 0; i < n; ++i) res.u[i][dst] += f * res.u[i][src];
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < m; ++r) std::swap(res.h[r][i], res.h[r][j]);
        for (size_t r = 0; r < n; ++r) std::swap(res.u[r][i], res.u[r][j]);
    };

    size_t piv = 0;
    for (size_t row = 0; row < m && piv < n; ++row) {
        // Euclid over the entries of this row in columns >= piv.
        while (true) {
            size_t best = n;
            for (size_t j = piv; j < n; ++j) {
                if (res.h[row][j] == 0) continue;
                if (best == n || std::llabs(res.h[row][j]) < std::llabs(res.h[row][best]))
                    best = j;
            }
            if (best == n) break;  // row is zero past piv
            col_swap(piv, best);
            bool cleared = true;
            for (size_t j = piv + 1; j < n; ++j) {
                if (res.h[row][j] == 0) continue;
                Int q = res.h[row][j] / res.h[row][piv];
                col_addmul(j, piv, -q);
                if (res.h[row][j] != 0) cleared = false;
            }
            if (cleared) {
                if (res.h[row][piv] < 0) col_addmul(piv, piv, -2);
                res.pivot_row.push_back(static_cast<int>(row));
                ++piv;
                break;
            }
        }
    }
    return res;
}

}  // namespace

IMat integer_kernel(const IMat& a) {
    const size_t n = a.empty() ? 0 : a.front().size();
    ColHermite ch = hermite_columns(a);
    const size_t rank = ch.pivot_row.size();
    IMat basis;
    for (size_t j = rank; j < n; ++j) {
        IVec v(n);
        for (size_t i = 0; i < n; ++i) v[i] = ch.u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<IVec> solve_integer(const IMat& a, const QVec& d) {
    const size_t m = a.size();
    require(d.size() == m, ErrorCode::DimensionMismatch, "solve_integer: rhs size mismatch");
    const size_t n = m ? a.front().size() : 0;
    ColHermite ch = hermite_columns(a);
    const size_t rank = ch.pivot_row.size();

    // Pivot columns form a lower-echelon system: solve sequentially.
    QVec z(n, Rational(0));
    for (size_t k = 0; k < rank; ++k) {
        const int row = ch.pivot_row[k];
        Rational acc = d[row];
        for (size_t q = 0; q < k; ++q) acc -= Rational(ch.h[row][q]) * z[q];
        Rational zk = acc / ch.h[row][k];
        if (!is_integral(zk)) return std::nullopt;
        z[k] = zk;
    }
    // Consistency over all rows.
    for (size_t row = 0; row < m; ++row) {
        Rational acc = 0;
        for (size_t k = 0; k < rank; ++k) acc += Rational(ch.h[row][k]) * z[k];
        if (acc != d[row]) return std::nullopt;
    }
    IVec x(n, 0);
    for (size_t i = 0; i < n; ++i) {
        Rational xi = 0;
        for (size_t k = 0; k < rank; ++k) xi += Rational(ch.u[i][k]) * z[k];
        x[i] = xi.convert_to<Int>();
    }
    return x;
}

Int maximal_minor_gcd(const IMat& a) {
    const size_t d = a.size();
    require(d > 0, ErrorCode::BadInput, "maximal_minor_gcd: empty matrix");
    const size_t n = a.front().size();
    require(d <= n, ErrorCode::BadInput, "maximal_minor_gcd: more rows than columns");
    std::vector<size_t> idx(d);
    for (size_t i = 0; i < d; ++i) idx[i] = i;
    Int g = 0;
    while (true) {
        IMat sub(d, IVec(d));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) sub[i][j] = a[i][idx[j]];
        Int det = det_integer(sub);
        g = std::gcd(g, det < 0 ? -det : det);
        // next combination
        size_t k = d;
        while (k > 0 && idx[k - 1] == n - d + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g;
}

}  // namespace toric
