#pragma once

#include <cstddef>
#include <optional>

#include "linrel/report.hpp"
#include "linrel/subspace.hpp"

namespace linrel {

// The four distinguished subspaces of a relation. Always canonical;
// ker subseteq dom and mul subseteq ran.
struct RelationParts {
    Subspace dom, ran, ker, mul;
};

// A linear relation (multivalued operator) from K^n to K^m: a subspace of
// K^(n+m) whose vectors are read as concatenated pairs [x | y]. The graph
// is canonical and the parts are computed eagerly at construction, so
// values are immutable and freely shareable across threads.
class LinearRelation {
public:
    static LinearRelation from_generators(FieldSpec field, std::size_t dom_dim,
                                          std::size_t cod_dim, std::vector<Vector> pair_rows);
    static LinearRelation from_graph(std::size_t dom_dim, std::size_t cod_dim, Subspace graph);
    static LinearRelation identity(FieldSpec field, std::size_t n);
    static LinearRelation zero(FieldSpec field, std::size_t dom_dim, std::size_t cod_dim);
    // Graph of the total linear map sending x to matrix*x; matrix rows are
    // indexed by codomain coordinates (cod_dim x dom_dim entries).
    static LinearRelation from_matrix(FieldSpec field, std::size_t dom_dim, std::size_t cod_dim,
                                      const std::vector<Vector>& matrix);

    const FieldSpec& field() const { return graph_.field(); }
    std::size_t dom_dim() const { return dom_dim_; }
    std::size_t cod_dim() const { return cod_dim_; }
    const Subspace& graph() const { return graph_; }

    const Subspace& dom() const { return parts_.dom; }
    const Subspace& ran() const { return parts_.ran; }
    const Subspace& ker() const { return parts_.ker; }
    const Subspace& mul() const { return parts_.mul; }
    const RelationParts& parts() const { return parts_; }

    // Single-valued where defined; a relation and the graph of an operator
    // are identified.
    bool is_operator() const { return parts_.mul.is_zero(); }
    bool is_injective_operator() const { return is_operator() && parts_.ker.is_zero(); }

    bool same_shape(const LinearRelation& other) const {
        return field() == other.field() && dom_dim_ == other.dom_dim_ && cod_dim_ == other.cod_dim_;
    }

    friend bool operator==(const LinearRelation& a, const LinearRelation& b);

private:
    LinearRelation(std::size_t dom_dim, std::size_t cod_dim, Subspace graph);

    std::size_t dom_dim_, cod_dim_;
    Subspace graph_;
    RelationParts parts_;
};

LinearRelation inverse(const LinearRelation& r);

// The product SR = {(x, z) : (x, y) in R, (y, z) in S for some y}, computed
// by intersecting the block-lifted graphs in K^(n+m+p) and projecting onto
// (x, z). Works unchanged over Q; element enumeration lives only in the
// oracle module.
LinearRelation compose(const LinearRelation& s, const LinearRelation& r);

// {(x, y + y') : (x, y) in R, (x, y') in S} and the pointwise negative.
LinearRelation add(const LinearRelation& r, const LinearRelation& s);
LinearRelation negate(const LinearRelation& r);
LinearRelation subtract(const LinearRelation& r, const LinearRelation& s);

// R(U) = {y : (x, y) in R for some x in U}.
Subspace image(const LinearRelation& r, const Subspace& u);
// R^{-1}(V).
Subspace preimage(const LinearRelation& r, const Subspace& v);
// The fiber R(x) as (particular, mul R); nullopt when x is outside dom R.
// The particular element is the canonical one: coordinates against the
// graph's RREF basis with all free variables zero.
std::optional<Vector> fiber_particular(const LinearRelation& r, const Vector& x);

// R|_U: the graph intersected with U x K^m.
LinearRelation restrict(const LinearRelation& r, const Subspace& u);

// Relation intersection (graphs intersected, shapes equal).
LinearRelation intersect(const LinearRelation& a, const LinearRelation& b);
bool contains(const LinearRelation& outer, const LinearRelation& inner);

// Delta_U = {(u, u) : u in U}, an operator with dom = ran = U.
LinearRelation diagonal(const Subspace& u);

// Arens: with R subseteq S, R = S iff ker R = ker S and ran R = ran S.
// The report carries the containment and the two equalities; its verdict
// always agrees with direct graph equality.
DecisionReport arens_equal(const LinearRelation& r, const LinearRelation& s);

// Containment via parts: A subseteq B iff ker A subseteq ker B and
// ran(A cap B) = ran A; the dual mul/dom form is evaluated too and all
// routes must agree with direct graph containment.
DecisionReport contained_c12(const LinearRelation& a, const LinearRelation& b);

} // namespace linrel
