#include "linrel/oracle.hpp"

#include <algorithm>

namespace linrel {

namespace {

void require_prime(const FieldSpec& f) {
    if (!f.is_prime_field())
        throw BudgetExceeded("enumeration is only available over prime fields");
}

// p^e with overflow guard against the candidate cap.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > cap / p + 1) return cap + 1;
        r *= p;
        if (r > cap) return cap + 1;
    }
    return r;
}

void check_points(const FieldSpec& f, std::size_t ambient, const EnumerationBudget& b) {
    std::uint64_t pts = checked_pow(f.characteristic(), ambient, b.max_total_points);
    if (pts > b.max_total_points)
        throw BudgetExceeded("|K|^" + std::to_string(ambient) + " exceeds max_total_points of " +
                             std::to_string(b.max_total_points));
}

// Odometer over `slots` base-p digits; calls f(digits) for every setting.
template <typename F>
void for_each_assignment(std::uint32_t p, std::size_t slots, F&& f) {
    std::vector<std::uint32_t> digits(slots, 0);
    while (true) {
        f(digits);
        std::size_t i = 0;
        while (i < slots && ++digits[i] == p) digits[i++] = 0;
        if (i == slots) return;
    }
}

} // namespace

std::uint64_t count_subspaces(std::uint32_t p, std::size_t n) {
    // Gaussian binomial [n choose k]_p summed over k.
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        // [n k]_p = prod_{i=0}^{k-1} (p^(n-i) - 1) / (p^(i+1) - 1)
        std::uint64_t num = 1, den = 1;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t pn = 1, pi = 1;
            for (std::size_t j = 0; j < n - i; ++j) pn *= p;
            for (std::size_t j = 0; j < i + 1; ++j) pi *= p;
            num *= pn - 1;
            den *= pi - 1;
        }
        total += num / den;
    }
    return total;
}

std::vector<LinearRelation> enumerate_operators(const FieldSpec& field, std::size_t dom_dim,
                                                std::size_t cod_dim,
                                                const EnumerationBudget& budget) {
    require_prime(field);
    std::uint32_t p = field.characteristic();
    std::uint64_t count = checked_pow(p, dom_dim * cod_dim, budget.max_candidates);
    if (count > budget.max_candidates)
        throw BudgetExceeded("p^(dom*cod) = p^" + std::to_string(dom_dim * cod_dim) +
                             " exceeds max_candidates");

    std::vector<LinearRelation> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_assignment(p, dom_dim * cod_dim, [&](const std::vector<std::uint32_t>& digits) {
        std::vector<Vector> matrix;  // cod_dim rows of dom_dim entries
        matrix.reserve(cod_dim);
        for (std::size_t i = 0; i < cod_dim; ++i) {
            Vector row;
            row.reserve(dom_dim);
            for (std::size_t j = 0; j < dom_dim; ++j)
                row.push_back(Scalar::from_int(field, digits[i * dom_dim + j]));
            matrix.push_back(std::move(row));
        }
        out.push_back(LinearRelation::from_matrix(field, dom_dim, cod_dim, matrix));
    });
    return out;
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, std::size_t n,
                                          const EnumerationBudget& budget) {
    require_prime(field);
    check_points(field, n, budget);
    std::uint32_t p = field.characteristic();
    if (count_subspaces(p, n) > budget.max_candidates)
        throw BudgetExceeded("subspace count exceeds max_candidates");

    std::vector<Subspace> out;
    // One RREF shape per pivot-column subset, encoded as an n-bit mask.
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1ull << j)) pivots.push_back(j);

        // Free entries: row i, column j with j > pivots[i] and j not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = pivots[i] + 1; j < n; ++j)
                if (!(mask & (1ull << j))) free_slots.emplace_back(i, j);

        for_each_assignment(p, free_slots.size(), [&](const std::vector<std::uint32_t>& digits) {
            std::vector<Vector> rows;
            rows.reserve(pivots.size());
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                Vector row = zero_vector(field, n);
                row[pivots[i]] = Scalar::one(field);
                rows.push_back(std::move(row));
            }
            for (std::size_t t = 0; t < free_slots.size(); ++t)
                rows[free_slots[t].first][free_slots[t].second] =
                    Scalar::from_int(field, digits[t]);
            out.push_back(Subspace::span(field, n, std::move(rows)));
        });
    }
    return out;
}

std::vector<Vector> enumerate_elements(const Subspace& s, const EnumerationBudget& budget) {
    require_prime(s.field());
    std::uint32_t p = s.field().characteristic();
    std::uint64_t count = checked_pow(p, s.dim(), budget.max_total_points);
    if (count > budget.max_total_points)
        throw BudgetExceeded("subspace has too many elements to enumerate");

    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_assignment(p, s.dim(), [&](const std::vector<std::uint32_t>& digits) {
        Vector v = zero_vector(s.field(), s.ambient_dim());
        for (std::size_t i = 0; i < s.dim(); ++i)
            v = vector_add(v, vector_scale(Scalar::from_int(s.field(), digits[i]), s.basis()[i]));
        out.push_back(std::move(v));
    });
    return out;
}

LinearRelation oracle_compose(const LinearRelation& s, const LinearRelation& r,
                              const EnumerationBudget& budget) {
    if (r.cod_dim() != s.dom_dim())
        throw DimensionMismatch("oracle_compose: shapes do not chain");
    std::size_t n = r.dom_dim(), m = r.cod_dim(), p = s.cod_dim();

    std::vector<Vector> pairs;
    for (const Vector& xy : enumerate_elements(r.graph(), budget)) {
        Vector x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(n));
        Vector y(xy.begin() + static_cast<std::ptrdiff_t>(n), xy.end());
        for (const Vector& yz : enumerate_elements(s.graph(), budget)) {
            Vector y2(yz.begin(), yz.begin() + static_cast<std::ptrdiff_t>(m));
            if (y2 != y) continue;
            Vector xz = x;
            xz.insert(xz.end(), yz.begin() + static_cast<std::ptrdiff_t>(m), yz.end());
            pairs.push_back(std::move(xz));
        }
    }
    return LinearRelation::from_generators(r.field(), n, p, std::move(pairs));
}

bool oracle_exists(Problem problem, const LinearRelation& a,
                   const std::optional<LinearRelation>& b, const EnumerationBudget& budget) {
    if (problem == Problem::OperatorPart) {
        if (b.has_value())
            throw ShapeMismatch("OperatorPart takes a single relation");
        const LinearRelation& r = a;
        for (const Subspace& g : enumerate_subspaces(r.field(), r.graph().ambient_dim(), budget)) {
            LinearRelation c = LinearRelation::from_graph(r.dom_dim(), r.cod_dim(), g);
            if (c.is_operator() && r.graph().contains(c.graph()) && c.ran() == r.ran()) return true;
        }
        return false;
    }

    if (!b.has_value()) throw ShapeMismatch("this problem needs both A and B");
    const LinearRelation& rel_b = *b;
    if (!(a.field() == rel_b.field())) throw FieldMismatch("oracle over different fields");

    switch (problem) {
    case Problem::RightRelation:
    case Problem::RightOperator: {
        // A in X x Z, B in Y x Z; candidates C in X x Y.
        if (a.cod_dim() != rel_b.cod_dim())
            throw ShapeMismatch("right problems share the codomain space");
        std::size_t nx = a.dom_dim(), ny = rel_b.dom_dim();
        for (const Subspace& g : enumerate_subspaces(a.field(), nx + ny, budget)) {
            LinearRelation c = LinearRelation::from_graph(nx, ny, g);
            if (problem == Problem::RightOperator && !c.is_operator()) continue;
            if (contains(compose(rel_b, c), a)) return true;
        }
        return false;
    }
    case Problem::LeftOperator:
    case Problem::LeftInjectiveOperator: {
        // A in X x Z, B in X x Y; candidates C in Y x Z.
        if (a.dom_dim() != rel_b.dom_dim())
            throw ShapeMismatch("left problems share the domain space");
        std::size_t ny = rel_b.cod_dim(), nz = a.cod_dim();
        for (const Subspace& g : enumerate_subspaces(a.field(), ny + nz, budget)) {
            LinearRelation c = LinearRelation::from_graph(ny, nz, g);
            if (!c.is_operator()) continue;
            if (problem == Problem::LeftInjectiveOperator && !c.ker().is_zero()) continue;
            if (contains(compose(c, rel_b), a)) return true;
        }
        return false;
    }
    default:
        throw std::logic_error("unreachable problem kind");
    }
}

} // namespace linrel
