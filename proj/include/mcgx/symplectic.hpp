// The verification oracle. Dehn-twist generators act on H_1(Sigma_g; Z) as
// transvections z -> z + <z, v> v; the action factors through the underlying
// mapping class group, so every relator of a correct presentation must
// evaluate to the exact identity in Sp(2g, Z) with mu -> identity. This is a
// necessary condition, useful as a desk-scale ground truth for the static
// curve tables.
//
// Also here: the exact-rational projective checker for user-supplied linear
// representations (every relator must map to c * Id for some scalar c).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mcgx/curves.hpp"
#include "mcgx/presentations.hpp"
#include "mcgx/words.hpp"

namespace mcgx {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingAssignment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidAssignment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline long long checked(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("symplectic matrix entry overflow");
    return static_cast<long long>(v);
}

}  // namespace detail

// Element of Sp(2g, Z). Entries are overflow-checked 64-bit integers; every
// construction from raw data verifies M^T J M = J exactly.
class SymplecticElement {
public:
    static SymplecticElement identity(int dim) {
        SymplecticElement m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    // z -> z + <z, v> v
    static SymplecticElement transvection(const HomologyClass& v) {
        if (v.empty() || v.size() % 2 != 0)
            throw DimensionError("transvection: class length must be 2g > 0");
        int dim = static_cast<int>(v.size());
        auto jv = apply_j(v);
        SymplecticElement m(dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                m.at(r, c) = (r == c ? 1 : 0) + v[static_cast<std::size_t>(r)] * jv[static_cast<std::size_t>(c)];
        return m;
    }

    static SymplecticElement from_matrix(int dim, std::vector<long long> entries) {
        if (static_cast<int>(entries.size()) != dim * dim)
            throw DimensionError("from_matrix: wrong entry count");
        SymplecticElement m(dim);
        m.m_ = std::move(entries);
        if (!m.is_symplectic()) throw InvalidAssignment("matrix does not preserve the symplectic form");
        return m;
    }

    int dim() const { return n_; }
    long long at(int r, int c) const { return m_[static_cast<std::size_t>(r) * n_ + c]; }

    friend bool operator==(const SymplecticElement& a, const SymplecticElement& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

    bool is_identity() const {
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (at(r, c) != (r == c ? 1 : 0)) return false;
        return true;
    }

    friend SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b) {
        if (a.n_ != b.n_) throw DimensionError("product of mismatched dimensions");
        SymplecticElement z(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                __int128 s = 0;
                for (int k = 0; k < a.n_; ++k)
                    s += static_cast<__int128>(a.at(i, k)) * b.at(k, j);
                z.at(i, j) = detail::checked(s);
            }
        return z;
    }

    // M^-1 = (-J) M^T J, exact and division-free. Entrywise this is
    // M^-1[r][c] = rs * cs * M[tc][kr] with kr, tc the paired indices.
    SymplecticElement inverse() const {
        int g = n_ / 2;
        SymplecticElement z(n_);
        for (int r = 0; r < n_; ++r) {
            int kr = r < g ? r + g : r - g;
            int rs = r < g ? -1 : 1;
            for (int c = 0; c < n_; ++c) {
                int tc = c < g ? c + g : c - g;
                int cs = c < g ? -1 : 1;
                z.at(r, c) = rs * cs * at(tc, kr);
            }
        }
        return z;
    }

    SymplecticElement pow(long e) const {
        SymplecticElement base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        SymplecticElement acc = identity(n_);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // right-multiply by T_v^e in place, O(dim^2): M += e * (M v) (J v)^T
    void apply_transvection_right(const HomologyClass& v, long long e) {
        if (static_cast<int>(v.size()) != n_) throw DimensionError("transvection length mismatch");
        auto jv = apply_j(v);
        std::vector<long long> mv(static_cast<std::size_t>(n_));
        for (int r = 0; r < n_; ++r) {
            __int128 s = 0;
            for (int c = 0; c < n_; ++c) s += static_cast<__int128>(at(r, c)) * v[static_cast<std::size_t>(c)];
            mv[static_cast<std::size_t>(r)] = detail::checked(s);
        }
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) {
                __int128 s = static_cast<__int128>(at(r, c)) +
                             static_cast<__int128>(e) * mv[static_cast<std::size_t>(r)] *
                                 jv[static_cast<std::size_t>(c)];
                at(r, c) = detail::checked(s);
            }
    }

    bool is_symplectic() const {
        // check <M e_i, M e_j> == <e_i, e_j> for all basis pairs
        int g = n_ / 2;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                __int128 s = 0;
                for (int k = 0; k < g; ++k)
                    s += static_cast<__int128>(at(k, i)) * at(g + k, j) -
                         static_cast<__int128>(at(g + k, i)) * at(k, j);
                __int128 want = 0;
                if (j == i + g) want = 1;
                if (i == j + g) want = -1;
                if (s != want) return false;
            }
        return true;
    }

private:
    explicit SymplecticElement(int dim) : n_(dim), m_(static_cast<std::size_t>(dim) * dim, 0) {}

    long long& at(int r, int c) { return m_[static_cast<std::size_t>(r) * n_ + c]; }

    static std::vector<long long> apply_j(const HomologyClass& v) {
        std::size_t g = v.size() / 2;
        std::vector<long long> jv(v.size());
        for (std::size_t i = 0; i < g; ++i) {
            jv[i] = v[g + i];
            jv[g + i] = -v[i];
        }
        return jv;
    }

    int n_;
    std::vector<long long> m_;
};

inline SymplecticElement transvection(const HomologyClass& v) {
    return SymplecticElement::transvection(v);
}

// Product of images, left to right, respecting exponents.
inline SymplecticElement evaluate(const Word& w,
                                  const std::map<std::string, SymplecticElement>& images) {
    if (images.empty()) throw MissingAssignment("empty assignment");
    int dim = images.begin()->second.dim();
    SymplecticElement acc = SymplecticElement::identity(dim);
    for (const auto& l : w.letters()) {
        auto it = images.find(w.alphabet().name(l.sym));
        if (it == images.end())
            throw MissingAssignment("no image assigned to " + w.alphabet().name(l.sym));
        if (!l.exp.fits_slong_p()) throw std::overflow_error("exponent too large to evaluate");
        acc = acc * it->second.pow(l.exp.get_si());
    }
    return acc;
}

// The transvection assignment of one family: each curve generator acts along
// its homology class, mu acts as the identity.
struct TransvectionSystem {
    int dim = 0;
    std::map<std::string, HomologyClass> classes;  // mu absent

    static TransvectionSystem for_family(Family f, int g, int r) {
        TransvectionSystem s;
        s.dim = 2 * g;
        for (const auto& name : generator_names(f, g, r)) {
            if (name == "mu") continue;
            s.classes.emplace(name, curve_class(f, g, r, name));
        }
        return s;
    }

    SymplecticElement evaluate(const Word& w) const {
        SymplecticElement acc = SymplecticElement::identity(dim);
        for (const auto& l : w.letters()) {
            const std::string& name = w.alphabet().name(l.sym);
            if (name == "mu") continue;
            auto it = classes.find(name);
            if (it == classes.end()) throw MissingAssignment("no curve class for " + name);
            if (!l.exp.fits_slong_p()) throw std::overflow_error("exponent too large to evaluate");
            acc.apply_transvection_right(it->second, l.exp.get_si());
        }
        return acc;
    }

    std::map<std::string, SymplecticElement> images_with_mu() const {
        std::map<std::string, SymplecticElement> out;
        for (const auto& [name, cls] : classes) out.emplace(name, transvection(cls));
        out.emplace("mu", SymplecticElement::identity(dim));
        return out;
    }
};

struct SpReport {
    struct Entry {
        std::string label;
        bool ok;
    };
    std::vector<Entry> entries;

    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& e : entries)
            if (!e.ok) out.push_back(e.label);
        return out;
    }
};

// Per-relator identity check in Sp(2g, Z) with mu -> identity.
inline SpReport verify_presentation_sp(const Presentation& p) {
    auto sys = TransvectionSystem::for_family(p.family, p.g, p.r);
    SpReport rep;
    rep.entries.reserve(p.relators.size());
    for (const auto& [label, word] : p.relators)
        rep.entries.push_back({label, sys.evaluate(word).is_identity()});
    return rep;
}

// ---- exact rational representations ----------------------------------------

struct RationalMatrix {
    int n = 0;
    std::vector<mpq_class> a;

    RationalMatrix() = default;
    explicit RationalMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    static RationalMatrix identity(int dim) {
        RationalMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    mpq_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.n == y.n && x.a == y.a;
    }

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
        if (x.n != y.n) throw DimensionError("rational matrix product shape mismatch");
        RationalMatrix z(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                if (x.at(i, k) == 0) continue;
                for (int j = 0; j < x.n; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return z;
    }

    RationalMatrix inverse() const {
        RationalMatrix w = *this, inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (w.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw InvalidAssignment("matrix is not invertible");
            if (piv != col)
                for (int c = 0; c < n; ++c) {
                    std::swap(w.at(piv, c), w.at(col, c));
                    std::swap(inv.at(piv, c), inv.at(col, c));
                }
            mpq_class d = w.at(col, col);
            for (int c = 0; c < n; ++c) {
                w.at(col, c) /= d;
                inv.at(col, c) /= d;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || w.at(r, col) == 0) continue;
                mpq_class f = w.at(r, col);
                for (int c = 0; c < n; ++c) {
                    w.at(r, c) -= f * w.at(col, c);
                    inv.at(r, c) -= f * inv.at(col, c);
                }
            }
        }
        return inv;
    }

    RationalMatrix pow(long e) const {
        RationalMatrix base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        RationalMatrix acc = identity(n);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }
};

inline std::string rational_str(const mpq_class& q) {
    mpq_class r = q;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline mpq_class rational_from_str(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

// Assignment JSON: { "dimension": n, "matrices": { name: [["p/q", ...], ...] } }
struct RepAssignment {
    int dimension = 0;
    std::map<std::string, RationalMatrix> matrices;

    json to_json() const {
        json j;
        j["dimension"] = dimension;
        json ms;
        for (const auto& [name, m] : matrices) {
            json rows = json::array();
            for (int r = 0; r < m.n; ++r) {
                json row = json::array();
                for (int c = 0; c < m.n; ++c) row.push_back(rational_str(m.at(r, c)));
                rows.push_back(row);
            }
            ms[name] = rows;
        }
        j["matrices"] = ms;
        return j;
    }

    static RepAssignment from_json(const json& j) {
        RepAssignment a;
        a.dimension = j.at("dimension").get<int>();
        if (a.dimension <= 0) throw std::invalid_argument("dimension must be positive");
        for (const auto& [name, rows] : j.at("matrices").items()) {
            RationalMatrix m(a.dimension);
            if (static_cast<int>(rows.size()) != a.dimension)
                throw DimensionError("matrix " + name + " has wrong row count");
            for (int r = 0; r < a.dimension; ++r) {
                if (static_cast<int>(rows.at(r).size()) != a.dimension)
                    throw DimensionError("matrix " + name + " has wrong column count");
                for (int c = 0; c < a.dimension; ++c)
                    m.at(r, c) = rational_from_str(rows.at(r).at(c).get<std::string>());
            }
            a.matrices.emplace(name, std::move(m));
        }
        return a;
    }
};

struct ScalarReport {
    struct Entry {
        std::string label;
        bool is_scalar;
        mpq_class scalar;     // when is_scalar
        mpq_class deviation;  // max |M_ij - c d_ij| otherwise
    };
    std::vector<Entry> entries;

    bool all_scalar() const {
        for (const auto& e : entries)
            if (!e.is_scalar) return false;
        return true;
    }

    bool all_one() const {
        for (const auto& e : entries)
            if (!e.is_scalar || e.scalar != 1) return false;
        return true;
    }
};

// For each relator, either the scalar c with image == c * Id, or a failure
// entry carrying the max-norm deviation from c * Id with c = M(0,0).
inline ScalarReport verify_projective_rep(const Presentation& p, const RepAssignment& assign) {
    std::map<std::string, RationalMatrix> inv;
    for (const auto& name : p.alphabet.names()) {
        auto it = assign.matrices.find(name);
        if (it == assign.matrices.end()) throw MissingAssignment("no matrix assigned to " + name);
        if (it->second.n != assign.dimension)
            throw DimensionError("matrix " + name + " has wrong dimension");
        inv.emplace(name, it->second.inverse());  // throws InvalidAssignment if singular
    }
    ScalarReport rep;
    for (const auto& [label, word] : p.relators) {
        RationalMatrix m = RationalMatrix::identity(assign.dimension);
        for (const auto& l : word.letters()) {
            const std::string& name = p.alphabet.name(l.sym);
            if (!l.exp.fits_slong_p()) throw std::overflow_error("exponent too large to evaluate");
            long e = l.exp.get_si();
            const RationalMatrix& base = e < 0 ? inv.at(name) : assign.matrices.at(name);
            RationalMatrix powed = base.pow(e < 0 ? -e : e);
            m = m * powed;
        }
        mpq_class c = m.at(0, 0);
        mpq_class dev = 0;
        for (int r = 0; r < m.n; ++r)
            for (int col = 0; col < m.n; ++col) {
                mpq_class want = (r == col) ? c : mpq_class(0);
                mpq_class d = abs(m.at(r, col) - want);
                if (d > dev) dev = d;
            }
        if (dev == 0)
            rep.entries.push_back({label, true, c, 0});
        else
            rep.entries.push_back({label, false, 0, dev});
    }
    return rep;
}

// The symplectic transvection assignment as a rational-matrix fixture, with
// every curve generator scaled by lambda. mu is sent to the lambda power that
// keeps the mu-bearing relators scalar (10 for the chain relation's exponent
// balance in the wajnryb family, 9 for the gervais star balance).
inline RepAssignment symplectic_fixture(const Presentation& p, const mpq_class& lambda = 1) {
    if (lambda == 0) throw InvalidAssignment("lambda must be nonzero");
    RepAssignment a;
    a.dimension = 2 * p.g;
    auto sys = TransvectionSystem::for_family(p.family, p.g, p.r);
    for (const auto& [name, cls] : sys.classes) {
        const auto t = transvection(cls);
        RationalMatrix m(a.dimension);
        for (int r = 0; r < a.dimension; ++r)
            for (int c = 0; c < a.dimension; ++c)
                m.at(r, c) = lambda * mpq_class(static_cast<long>(t.at(r, c)));
        a.matrices.emplace(name, std::move(m));
    }
    if (p.alphabet.contains("mu")) {
        long k = p.family == Family::gervais_lift ? 9 : 10;
        mpq_class s = 1;
        for (long i = 0; i < k; ++i) s *= lambda;
        RationalMatrix m(a.dimension);
        for (int i = 0; i < a.dimension; ++i) m.at(i, i) = s;
        a.matrices.emplace("mu", std::move(m));
    }
    return a;
}

}  // namespace mcgx
