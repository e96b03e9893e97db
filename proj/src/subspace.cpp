#include "linrel/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace linrel {

Vector zero_vector(const FieldSpec& f, std::size_t n) {
    return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

Vector make_vector(const FieldSpec& f, const std::vector<long long>& entries) {
    Vector v;
    v.reserve(entries.size());
    for (long long e : entries) v.push_back(Scalar::from_int(f, e));
    return v;
}

bool vector_is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector vector_add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ in add");
    Vector r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

Vector vector_sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ in sub");
    Vector r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

Vector vector_scale(const Scalar& c, const Vector& v) {
    Vector r;
    r.reserve(v.size());
    for (const Scalar& s : v) r.push_back(c * s);
    return r;
}

namespace detail {

std::size_t pivot_column(const Vector& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) return j;
    return row.size();
}

std::size_t rref(std::vector<Vector>& rows, const FieldSpec& field, std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (!rows[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][col].inverse();
        rows[rank] = vector_scale(inv, rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            Scalar c = rows[i][col];
            rows[i] = vector_sub(rows[i], vector_scale(c, rows[rank]));
        }
        ++rank;
    }
    rows.resize(rank);
    // Rows are already ordered by strictly increasing pivot column.
    return rank;
}

Vector reduce_against(const std::vector<Vector>& rref_basis, Vector v) {
    for (const Vector& row : rref_basis) {
        std::size_t p = pivot_column(row);
        if (p < v.size() && !v[p].is_zero()) {
            Scalar c = v[p];
            v = vector_sub(v, vector_scale(c, row));
        }
    }
    return v;
}

} // namespace detail

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, std::vector<Vector> generators) {
    for (const Vector& g : generators) {
        if (g.size() != ambient_dim)
            throw DimensionMismatch("generator has length " + std::to_string(g.size()) +
                                    ", ambient dimension is " + std::to_string(ambient_dim));
        for (const Scalar& s : g)
            if (!(s.field() == field)) throw FieldMismatch("generator entry from a different field");
    }
    detail::rref(generators, field, ambient_dim);
    Subspace s(field, ambient_dim);
    s.basis_ = std::move(generators);
    return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
    std::vector<Vector> gens;
    gens.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(unit_vector(field, ambient_dim, i));
    return span(field, ambient_dim, std::move(gens));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_)
        throw DimensionMismatch("vector length does not match ambient dimension");
    return vector_is_zero(detail::reduce_against(basis_, v));
}

bool Subspace::contains(const Subspace& w) const {
    if (!(w.field_ == field_)) throw FieldMismatch("subspaces over different fields");
    if (w.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient dimension");
    return std::all_of(w.basis_.begin(), w.basis_.end(),
                       [this](const Vector& row) { return contains(row); });
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace sum(const Subspace& u, const Subspace& w) {
    if (!(u.field() == w.field())) throw FieldMismatch("subspaces over different fields");
    if (u.ambient_dim() != w.ambient_dim())
        throw DimensionMismatch("subspaces of different ambient dimension");
    std::vector<Vector> gens = u.basis();
    gens.insert(gens.end(), w.basis().begin(), w.basis().end());
    return Subspace::span(u.field(), u.ambient_dim(), std::move(gens));
}

// Zassenhaus block elimination: rows [u|u] for u in U and [w|0] for w in W
// span {(u+w, u)}; the rows whose left block vanished carry a basis of the
// intersection in the right block.
Subspace intersect(const Subspace& u, const Subspace& w) {
    if (!(u.field() == w.field())) throw FieldMismatch("subspaces over different fields");
    if (u.ambient_dim() != w.ambient_dim())
        throw DimensionMismatch("subspaces of different ambient dimension");
    const FieldSpec& f = u.field();
    const std::size_t n = u.ambient_dim();

    std::vector<Vector> rows;
    rows.reserve(u.dim() + w.dim());
    for (const Vector& row : u.basis()) {
        Vector r = row;
        r.insert(r.end(), row.begin(), row.end());
        rows.push_back(std::move(r));
    }
    for (const Vector& row : w.basis()) {
        Vector r = row;
        Vector zeros = zero_vector(f, n);
        r.insert(r.end(), zeros.begin(), zeros.end());
        rows.push_back(std::move(r));
    }
    detail::rref(rows, f, 2 * n);

    std::vector<Vector> inter;
    for (const Vector& r : rows) {
        if (detail::pivot_column(r) >= n)
            inter.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    }
    return Subspace::span(f, n, std::move(inter));
}

Subspace complement(const Subspace& u, const Subspace& w) {
    if (!w.contains(u)) throw NotContained("complement requires U subseteq W");
    std::vector<Vector> working = u.basis();
    std::vector<Vector> picks;
    for (const Vector& cand : w.basis()) {
        if (!vector_is_zero(detail::reduce_against(working, cand))) {
            picks.push_back(cand);
            working.push_back(cand);
            detail::rref(working, u.field(), u.ambient_dim());
        }
    }
    return Subspace::span(u.field(), u.ambient_dim(), std::move(picks));
}

std::size_t codim(const Subspace& u, const Subspace& w) {
    if (!w.contains(u)) throw NotContained("codim requires U subseteq W");
    return w.dim() - u.dim();
}

} // namespace linrel
