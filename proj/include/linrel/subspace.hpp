#pragma once

#include <cstddef>
#include <vector>

#include "linrel/field.hpp"

namespace linrel {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
Vector make_vector(const FieldSpec& f, const std::vector<long long>& entries);
bool vector_is_zero(const Vector& v);
Vector vector_add(const Vector& a, const Vector& b);
Vector vector_sub(const Vector& a, const Vector& b);
Vector vector_scale(const Scalar& c, const Vector& v);

// A linear subspace of K^n held as its reduced row-echelon basis: pivots
// strictly increasing, pivot entries 1, pivot columns otherwise zero, no
// zero rows. The representation is unique per subspace, so operator== is
// subspace equality. The zero subspace has an empty basis; ambient
// dimension 0 is legal. Instances are immutable and safe to share across
// threads.
class Subspace {
public:
    Subspace(FieldSpec field, std::size_t ambient_dim);  // the zero subspace {0}

    // Canonicalizes the span of arbitrary generators. Generator order and
    // scaling do not affect the result. Throws DimensionMismatch if a
    // generator has the wrong length, FieldMismatch on foreign scalars.
    static Subspace span(FieldSpec field, std::size_t ambient_dim, std::vector<Vector> generators);
    static Subspace full(FieldSpec field, std::size_t ambient_dim);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& w) const;  // W subseteq this

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

// A direct summand X0 with u (+) X0 = w, for u subseteq w (else throws
// NotContained). Deterministic: w's canonical basis vectors are taken in
// order, keeping each one that is independent of u and the picks so far.
Subspace complement(const Subspace& u, const Subspace& w);

// dim w - dim u for u subseteq w.
std::size_t codim(const Subspace& u, const Subspace& w);

namespace detail {

// In-place reduced row echelon form over the exact field; returns the rank.
// Rows end up sorted by pivot column with zero rows removed.
std::size_t rref(std::vector<Vector>& rows, const FieldSpec& field, std::size_t ncols);

// Reduces v against an RREF basis; the returned remainder is zero iff v
// lies in the span.
Vector reduce_against(const std::vector<Vector>& rref_basis, Vector v);

std::size_t pivot_column(const Vector& row);

} // namespace detail

} // namespace linrel
