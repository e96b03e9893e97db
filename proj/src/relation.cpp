#include "linrel/relation.hpp"

#include <cassert>

namespace linrel {

namespace {

// Spans the images of the basis rows under a row-wise linear map.
template <typename Map>
Subspace map_rows(const Subspace& s, std::size_t out_dim, Map&& f) {
    std::vector<Vector> rows;
    rows.reserve(s.dim());
    for (const Vector& r : s.basis()) rows.push_back(f(r));
    return Subspace::span(s.field(), out_dim, std::move(rows));
}

Vector slice(const Vector& v, std::size_t begin, std::size_t end) {
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(begin),
                  v.begin() + static_cast<std::ptrdiff_t>(end));
}

Vector concat(const Vector& a, const Vector& b) {
    Vector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// U x V inside K^(dim U ambient + dim V ambient).
Subspace block_product(const Subspace& u, const Subspace& v) {
    const FieldSpec& f = u.field();
    std::size_t n = u.ambient_dim(), m = v.ambient_dim();
    std::vector<Vector> rows;
    rows.reserve(u.dim() + v.dim());
    for (const Vector& x : u.basis()) rows.push_back(concat(x, zero_vector(f, m)));
    for (const Vector& y : v.basis()) rows.push_back(concat(zero_vector(f, n), y));
    return Subspace::span(f, n + m, std::move(rows));
}

RelationParts compute_parts(const Subspace& graph, std::size_t n, std::size_t m) {
    const FieldSpec& f = graph.field();

    Subspace dom = map_rows(graph, n, [&](const Vector& r) { return slice(r, 0, n); });
    Subspace ran = map_rows(graph, m, [&](const Vector& r) { return slice(r, n, n + m); });

    // In the RREF of the graph (x-columns first), the rows with pivot in
    // the y-block have zero x-part; their y-parts are a basis of mul.
    std::vector<Vector> mul_rows;
    for (const Vector& r : graph.basis())
        if (detail::pivot_column(r) >= n) mul_rows.push_back(slice(r, n, n + m));
    Subspace mul = Subspace::span(f, m, std::move(mul_rows));

    // Same trick with the blocks swapped gives the kernel.
    std::vector<Vector> swapped;
    swapped.reserve(graph.dim());
    for (const Vector& r : graph.basis())
        swapped.push_back(concat(slice(r, n, n + m), slice(r, 0, n)));
    detail::rref(swapped, f, n + m);
    std::vector<Vector> ker_rows;
    for (const Vector& r : swapped)
        if (detail::pivot_column(r) >= m) ker_rows.push_back(slice(r, m, m + n));
    Subspace ker = Subspace::span(f, n, std::move(ker_rows));

    assert(dom.contains(ker));
    assert(ran.contains(mul));
    return RelationParts{std::move(dom), std::move(ran), std::move(ker), std::move(mul)};
}

void require_same_shape(const LinearRelation& a, const LinearRelation& b, const char* what) {
    if (!a.same_shape(b)) throw ShapeMismatch(std::string(what) + ": relations have different shapes");
}

} // namespace

LinearRelation::LinearRelation(std::size_t dom_dim, std::size_t cod_dim, Subspace graph)
    : dom_dim_(dom_dim), cod_dim_(cod_dim), graph_(std::move(graph)),
      parts_(compute_parts(graph_, dom_dim_, cod_dim_)) {}

LinearRelation LinearRelation::from_generators(FieldSpec field, std::size_t dom_dim,
                                               std::size_t cod_dim, std::vector<Vector> pair_rows) {
    return from_graph(dom_dim, cod_dim,
                      Subspace::span(field, dom_dim + cod_dim, std::move(pair_rows)));
}

LinearRelation LinearRelation::from_graph(std::size_t dom_dim, std::size_t cod_dim, Subspace graph) {
    if (graph.ambient_dim() != dom_dim + cod_dim)
        throw DimensionMismatch("graph ambient dimension is not dom_dim + cod_dim");
    return LinearRelation(dom_dim, cod_dim, std::move(graph));
}

LinearRelation LinearRelation::identity(FieldSpec field, std::size_t n) {
    return diagonal(Subspace::full(field, n));
}

LinearRelation LinearRelation::zero(FieldSpec field, std::size_t dom_dim, std::size_t cod_dim) {
    return from_graph(dom_dim, cod_dim, Subspace(field, dom_dim + cod_dim));
}

LinearRelation LinearRelation::from_matrix(FieldSpec field, std::size_t dom_dim,
                                           std::size_t cod_dim, const std::vector<Vector>& matrix) {
    if (matrix.size() != cod_dim) throw DimensionMismatch("matrix row count is not cod_dim");
    for (const Vector& row : matrix)
        if (row.size() != dom_dim) throw DimensionMismatch("matrix row length is not dom_dim");
    std::vector<Vector> rows;
    rows.reserve(dom_dim);
    for (std::size_t j = 0; j < dom_dim; ++j) {
        Vector y;
        y.reserve(cod_dim);
        for (std::size_t i = 0; i < cod_dim; ++i) y.push_back(matrix[i][j]);
        rows.push_back(concat(unit_vector(field, dom_dim, j), y));
    }
    return from_generators(field, dom_dim, cod_dim, std::move(rows));
}

bool operator==(const LinearRelation& a, const LinearRelation& b) {
    return a.dom_dim_ == b.dom_dim_ && a.cod_dim_ == b.cod_dim_ && a.graph_ == b.graph_;
}

LinearRelation inverse(const LinearRelation& r) {
    std::size_t n = r.dom_dim(), m = r.cod_dim();
    std::vector<Vector> rows;
    rows.reserve(r.graph().dim());
    for (const Vector& row : r.graph().basis())
        rows.push_back(concat(slice(row, n, n + m), slice(row, 0, n)));
    return LinearRelation::from_generators(r.field(), m, n, std::move(rows));
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& r) {
    if (!(s.field() == r.field())) throw FieldMismatch("compose over different fields");
    if (r.cod_dim() != s.dom_dim())
        throw DimensionMismatch("compose: R's codomain dimension differs from S's domain dimension");
    const FieldSpec& f = r.field();
    std::size_t n = r.dom_dim(), m = r.cod_dim(), p = s.cod_dim();

    // Lift both graphs into K^(n+m+p) and intersect:
    //   {(x, y, z) : (x, y) in R} and {(x, y, z) : (y, z) in S}.
    std::vector<Vector> lift_r;
    for (const Vector& row : r.graph().basis()) lift_r.push_back(concat(row, zero_vector(f, p)));
    for (std::size_t k = 0; k < p; ++k)
        lift_r.push_back(unit_vector(f, n + m + p, n + m + k));

    std::vector<Vector> lift_s;
    for (std::size_t i = 0; i < n; ++i) lift_s.push_back(unit_vector(f, n + m + p, i));
    for (const Vector& row : s.graph().basis()) lift_s.push_back(concat(zero_vector(f, n), row));

    Subspace chained = intersect(Subspace::span(f, n + m + p, std::move(lift_r)),
                                 Subspace::span(f, n + m + p, std::move(lift_s)));

    Subspace graph = map_rows(chained, n + p, [&](const Vector& row) {
        return concat(slice(row, 0, n), slice(row, n + m, n + m + p));
    });
    return LinearRelation::from_graph(n, p, std::move(graph));
}

LinearRelation add(const LinearRelation& r, const LinearRelation& s) {
    require_same_shape(r, s, "add");
    const FieldSpec& f = r.field();
    std::size_t n = r.dom_dim(), m = r.cod_dim();

    // {(x, y, y') : (x, y) in R} cap {(x, y, y') : (x, y') in S}, then
    // map (x, y, y') to (x, y + y').
    std::vector<Vector> lift_r;
    for (const Vector& row : r.graph().basis()) lift_r.push_back(concat(row, zero_vector(f, m)));
    for (std::size_t k = 0; k < m; ++k) lift_r.push_back(unit_vector(f, n + 2 * m, n + m + k));

    std::vector<Vector> lift_s;
    for (const Vector& row : s.graph().basis())
        lift_s.push_back(concat(concat(slice(row, 0, n), zero_vector(f, m)), slice(row, n, n + m)));
    for (std::size_t k = 0; k < m; ++k) lift_s.push_back(unit_vector(f, n + 2 * m, n + k));

    Subspace paired = intersect(Subspace::span(f, n + 2 * m, std::move(lift_r)),
                                Subspace::span(f, n + 2 * m, std::move(lift_s)));

    Subspace graph = map_rows(paired, n + m, [&](const Vector& row) {
        return concat(slice(row, 0, n),
                      vector_add(slice(row, n, n + m), slice(row, n + m, n + 2 * m)));
    });
    return LinearRelation::from_graph(n, m, std::move(graph));
}

LinearRelation negate(const LinearRelation& r) {
    std::size_t n = r.dom_dim(), m = r.cod_dim();
    std::vector<Vector> rows;
    for (const Vector& row : r.graph().basis()) {
        Vector y = slice(row, n, n + m);
        rows.push_back(concat(slice(row, 0, n), vector_scale(-Scalar::one(r.field()), y)));
    }
    return LinearRelation::from_generators(r.field(), n, m, std::move(rows));
}

LinearRelation subtract(const LinearRelation& r, const LinearRelation& s) {
    return add(r, negate(s));
}

LinearRelation restrict(const LinearRelation& r, const Subspace& u) {
    if (u.ambient_dim() != r.dom_dim())
        throw DimensionMismatch("restriction subspace has wrong ambient dimension");
    Subspace window = block_product(u, Subspace::full(r.field(), r.cod_dim()));
    return LinearRelation::from_graph(r.dom_dim(), r.cod_dim(), intersect(r.graph(), window));
}

Subspace image(const LinearRelation& r, const Subspace& u) {
    return restrict(r, u).ran();
}

Subspace preimage(const LinearRelation& r, const Subspace& v) {
    return image(inverse(r), v);
}

std::optional<Vector> fiber_particular(const LinearRelation& r, const Vector& x) {
    if (x.size() != r.dom_dim()) throw DimensionMismatch("fiber point has wrong length");
    const FieldSpec& f = r.field();
    std::size_t n = r.dom_dim(), m = r.cod_dim();
    const std::vector<Vector>& g = r.graph().basis();
    std::size_t d = g.size();

    // Solve sum_i c_i * g_i.x = x for the coefficients c, free variables
    // zero. The augmented system has one row per x-coordinate.
    std::vector<Vector> sys;
    sys.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector row;
        row.reserve(d + 1);
        for (std::size_t i = 0; i < d; ++i) row.push_back(g[i][j]);
        row.push_back(x[j]);
        sys.push_back(std::move(row));
    }
    detail::rref(sys, f, d + 1);

    Vector c = zero_vector(f, d);
    for (const Vector& row : sys) {
        std::size_t p = detail::pivot_column(row);
        if (p >= d) return std::nullopt;  // pivot in the rhs column: x outside dom R
        c[p] = row[d];  // free variables stay zero, so the pivot value is the rhs
    }

    Vector y = zero_vector(f, m);
    for (std::size_t i = 0; i < d; ++i)
        if (!c[i].is_zero()) y = vector_add(y, vector_scale(c[i], slice(g[i], n, n + m)));
    return y;
}

LinearRelation intersect(const LinearRelation& a, const LinearRelation& b) {
    require_same_shape(a, b, "intersect");
    return LinearRelation::from_graph(a.dom_dim(), a.cod_dim(), intersect(a.graph(), b.graph()));
}

bool contains(const LinearRelation& outer, const LinearRelation& inner) {
    require_same_shape(outer, inner, "contains");
    return outer.graph().contains(inner.graph());
}

LinearRelation diagonal(const Subspace& u) {
    std::vector<Vector> rows;
    rows.reserve(u.dim());
    for (const Vector& v : u.basis()) rows.push_back(concat(v, v));
    return LinearRelation::from_generators(u.field(), u.ambient_dim(), u.ambient_dim(),
                                           std::move(rows));
}

DecisionReport arens_equal(const LinearRelation& r, const LinearRelation& s) {
    require_same_shape(r, s, "arens_equal");
    bool contained = contains(s, r);
    bool ker_eq = r.ker() == s.ker();
    bool ran_eq = r.ran() == s.ran();
    DecisionReport rep = make_report(
        "p0", {{"R contained in S", contained,
                "dim R = " + std::to_string(r.graph().dim()) +
                    ", dim S = " + std::to_string(s.graph().dim())},
               {"ker R = ker S", ker_eq,
                "dims " + std::to_string(r.ker().dim()) + " vs " + std::to_string(s.ker().dim())},
               {"ran R = ran S", ran_eq,
                "dims " + std::to_string(r.ran().dim()) + " vs " + std::to_string(s.ran().dim())}});
    if (rep.verdict != (r == s))
        throw std::logic_error("arens_equal: criterion disagrees with graph equality");
    return rep;
}

DecisionReport contained_c12(const LinearRelation& a, const LinearRelation& b) {
    require_same_shape(a, b, "contained_c12");
    LinearRelation meet = intersect(a, b);
    bool ker_inc = b.ker().contains(a.ker());
    bool ran_meet = meet.ran() == a.ran();
    bool mul_inc = b.mul().contains(a.mul());
    bool dom_meet = meet.dom() == a.dom();

    DecisionReport rep = make_report(
        "c12", {{"ker A contained in ker B", ker_inc,
                 "dims " + std::to_string(a.ker().dim()) + " vs " + std::to_string(b.ker().dim())},
                {"ran(A cap B) = ran A", ran_meet,
                 "dims " + std::to_string(meet.ran().dim()) + " vs " + std::to_string(a.ran().dim())}});
    bool alt = mul_inc && dom_meet;
    bool direct = contains(b, a);
    if (rep.verdict != alt || rep.verdict != direct)
        throw std::logic_error("contained_c12: the two criteria and direct containment disagree");
    rep.evidence.push_back({"mul A contained in mul B", mul_inc, ""});
    rep.evidence.push_back({"dom(A cap B) = dom A", dom_meet, ""});
    return rep;
}

} // namespace linrel
