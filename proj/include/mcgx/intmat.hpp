// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Smith normal form with unimodular transforms, relation matrices
// and abelianization of presentations.
//
// The SNF uses gcd-driven pivoting with entry-size-minimizing pivot
// selection. Matrices here stay around 200x200 or a few thousand relator
// rows at most, so no modular or sparse techniques are needed.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "mcgx/presentations.hpp"
#include "mcgx/words.hpp"

namespace mcgx {

struct IntegerMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
        IntegerMatrix z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const mpz_class& xik = x.at(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
            }
        return z;
    }

    IntegerMatrix transposed() const {
        IntegerMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    json to_json() const {
        json j;
        j["rows"] = rows;
        j["cols"] = cols;
        json e = json::array();
        for (int i = 0; i < rows; ++i) {
            json row = json::array();
            for (int c = 0; c < cols; ++c) {
                if (!at(i, c).fits_slong_p())
                    throw std::overflow_error("matrix entry does not fit in a JSON integer");
                row.push_back(at(i, c).get_si());
            }
            e.push_back(row);
        }
        j["entries"] = e;
        return j;
    }

    static IntegerMatrix from_json(const json& j) {
        IntegerMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
        const auto& e = j.at("entries");
        for (int i = 0; i < m.rows; ++i)
            for (int c = 0; c < m.cols; ++c) m.at(i, c) = mpz_class(e.at(i).at(c).get<long>());
        return m;
    }
};

// Fraction-free determinant (Bareiss). Used for unimodularity checks in the
// tests and for the minor-gcd oracle; n stays small there.
inline mpz_class determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IntegerMatrix w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

struct SnfResult {
    IntegerMatrix d;  // diagonal, nonnegative, divisibility chain
    IntegerMatrix u;  // unimodular row transform
    IntegerMatrix v;  // unimodular column transform
    int det_u = 1;    // tracked determinant signs, always +-1
    int det_v = 1;

    std::vector<mpz_class> diagonal() const {
        std::vector<mpz_class> out;
        int n = std::min(d.rows, d.cols);
        for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

namespace detail {

struct SnfWorker {
    IntegerMatrix d;
    bool track;
    IntegerMatrix u, v;
    int det_u = 1, det_v = 1;

    explicit SnfWorker(const IntegerMatrix& a, bool track_transforms)
        : d(a), track(track_transforms) {
        if (track) {
            u = IntegerMatrix::identity(a.rows);
            v = IntegerMatrix::identity(a.cols);
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        if (track) {
            for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
            det_u = -det_u;
        }
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        if (track) {
            for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
            det_v = -det_v;
        }
    }

    void add_row(int dst, int src, const mpz_class& f) {  // row_dst += f * row_src
        if (f == 0) return;
        for (int c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
        if (track)
            for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    }

    void add_col(int dst, int src, const mpz_class& f) {
        if (f == 0) return;
        for (int r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
        if (track)
            for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    }

    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        if (track) {
            for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
            det_u = -det_u;
        }
    }

    // smallest nonzero |entry| in the submatrix from (t,t); false if all zero
    bool find_pivot(int t, int& pr, int& pc) const {
        bool found = false;
        mpz_class best;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                mpz_class m = abs(d.at(i, j));
                if (!found || m < best) {
                    found = true;
                    best = m;
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    bool lone(int t) const {
        for (int i = t + 1; i < d.rows; ++i)
            if (d.at(i, t) != 0) return false;
        for (int j = t + 1; j < d.cols; ++j)
            if (d.at(t, j) != 0) return false;
        return true;
    }

    void run() {
        int n = std::min(d.rows, d.cols);
        for (int t = 0; t < n; ++t) {
            int pr, pc;
            if (!find_pivot(t, pr, pc)) break;  // remaining block is zero
            swap_rows(t, pr);
            swap_cols(t, pc);
            for (;;) {
                for (int i = t + 1; i < d.rows; ++i)
                    if (d.at(i, t) != 0) {
                        mpz_class q = d.at(i, t) / d.at(t, t);  // truncated
                        add_row(i, t, -q);
                    }
                for (int j = t + 1; j < d.cols; ++j)
                    if (d.at(t, j) != 0) {
                        mpz_class q = d.at(t, j) / d.at(t, t);
                        add_col(j, t, -q);
                    }
                if (!lone(t)) {
                    if (find_pivot(t, pr, pc)) {
                        swap_rows(t, pr);
                        swap_cols(t, pc);
                    }
                    continue;
                }
                // pivot isolated; enforce that it divides the rest
                int br = -1;
                for (int i = t + 1; i < d.rows && br < 0; ++i)
                    for (int j = t + 1; j < d.cols; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            br = i;
                            break;
                        }
                if (br < 0) break;
                add_row(t, br, 1);
            }
            if (d.at(t, t) < 0) negate_row(t);
        }
    }
};

}  // namespace detail

// U * A * V = D with U, V unimodular and D diagonal with nonnegative entries
// satisfying d1 | d2 | ... The product identity is re-verified entry-exactly
// before returning.
inline SnfResult smith_normal_form(const IntegerMatrix& a) {
    detail::SnfWorker w(a, true);
    w.run();
    SnfResult res{std::move(w.d), std::move(w.u), std::move(w.v), w.det_u, w.det_v};
    if (!(res.u * a * res.v == res.d)) throw std::logic_error("SNF postcondition U*A*V == D failed");
    return res;
}

// Diagonal-only variant for large relation matrices (no transform bookkeeping).
inline std::vector<mpz_class> smith_diagonal(const IntegerMatrix& a) {
    detail::SnfWorker w(a, false);
    w.run();
    std::vector<mpz_class> out;
    int n = std::min(w.d.rows, w.d.cols);
    for (int i = 0; i < n; ++i) out.push_back(w.d.at(i, i));
    return out;
}

// One row per relator, one column per generator; entry = exponent sum.
inline IntegerMatrix relation_matrix(const Presentation& p) {
    IntegerMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.alphabet.size()));
    for (int i = 0; i < m.rows; ++i)
        for (const auto& l : p.relators[static_cast<std::size_t>(i)].second.letters())
            m.at(i, l.sym) += l.exp;
    return m;
}

struct AbelianInvariants {
    std::vector<mpz_class> torsion;  // entries >= 2, divisibility chain
    int free_rank = 0;

    bool trivial() const { return torsion.empty() && free_rank == 0; }

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.torsion == b.torsion && a.free_rank == b.free_rank;
    }

    json to_json() const {
        json j;
        json t = json::array();
        for (const auto& d : torsion) t.push_back(d.get_si());
        j["torsion"] = t;
        j["free_rank"] = free_rank;
        return j;
    }
};

// Invariant factors of the cokernel of the transposed relation matrix
// (same nonzero invariant factors as the matrix itself).
inline AbelianInvariants abelian_invariants(const IntegerMatrix& rel, int n_generators) {
    auto diag = smith_diagonal(rel);
    AbelianInvariants inv;
    int rank = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d >= 2) inv.torsion.push_back(d);
    }
    inv.free_rank = n_generators - rank;
    return inv;
}

inline AbelianInvariants abelianize(const Presentation& p) {
    return abelian_invariants(relation_matrix(p), static_cast<int>(p.alphabet.size()));
}

}  // namespace mcgx
