#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tamedeg {

using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<std::vector<Int>>;

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};
struct CapError : std::runtime_error {
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline IVec operator*(Int c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
inline IVec& operator+=(IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline IVec& operator-=(IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline bool is_zero(const IVec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}
inline bool is_positive(const IVec& a) {  // componentwise > 0
    for (Int x : a)
        if (x <= 0) return false;
    return true;
}
inline bool is_nonneg(const IVec& a) {
    for (Int x : a)
        if (x < 0) return false;
    return true;
}
inline bool leq_componentwise(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Int vec_sum(const IVec& a) {
    Int s = 0;
    for (Int x : a) s += x;
    return s;
}

inline IVec mat_vec(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}
inline IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    IMat r(n, IVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            Int x = a[i][l];
            if (x == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += x * b[l][j];
        }
    return r;
}
inline IMat mat_identity(size_t n) {
    IMat r(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}
inline IMat mat_transpose(const IMat& m) {
    IMat r(m[0].size(), IVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}
inline IMat mat_neg(IMat m) {
    for (auto& row : m)
        for (auto& x : row) x = -x;
    return m;
}

// Determinant by cofactor expansion; n <= 10 here.
inline Int mat_det(const IMat& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int det = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IMat sub(n - 1, IVec(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        Int cof = mat_det(sub);
        det += ((j % 2) ? -cof : cof) * m[0][j];
    }
    return det;
}

// Inverse of a unimodular integer matrix (det = +-1) via the adjugate.
inline IMat mat_inverse_unimodular(const IMat& m) {
    size_t n = m.size();
    Int d = mat_det(m);
    if (d != 1 && d != -1) throw InternalError("matrix is not unimodular");
    IMat inv(n, IVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            IMat sub(n - 1, IVec(n - 1));
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            Int cof = mat_det(sub);
            if ((i + j) % 2) cof = -cof;
            inv[i][j] = cof * d;  // d = 1/d for +-1
        }
    return inv;
}

// Primitive integer kernel vectors of an integer matrix, via fraction-free
// row elimination. Returns a basis of ker over Q, scaled to primitive
// integer vectors.
inline std::vector<IVec> integer_kernel(IMat m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Int a = m[r][c], b = m[i][c];
            Int g = std::gcd(std::abs(a), std::abs(b));
            Int fa = a / g, fb = b / g;
            for (size_t j = 0; j < cols; ++j) m[i][j] = fa * m[i][j] - fb * m[r][j];
            IVec& row = m[i];
            Int rg = 0;
            for (Int x : row) rg = std::gcd(rg, std::abs(x));
            if (rg > 1)
                for (Int& x : row) x /= rg;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<IVec> basis;
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        // Solve with free column fc = lcm of pivots (keeps everything integral).
        Int scale = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) scale = std::lcm(scale, std::abs(m[i][pivot_col[i]]));
        IVec v(cols, 0);
        v[fc] = scale;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][fc] * (scale / m[i][pivot_col[i]]);
        Int g = 0;
        for (Int x : v) g = std::gcd(g, std::abs(x));
        if (g > 1)
            for (Int& x : v) x /= g;
        basis.push_back(v);
    }
    return basis;
}

inline std::string vec_to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace tamedeg
