#include "linrel/generate.hpp"

namespace linrel {

Subspace random_subspace(Rng& rng, const FieldSpec& field, std::size_t ambient, std::size_t dim) {
    if (dim > ambient) throw DimensionMismatch("requested dimension exceeds the ambient space");
    if (field.is_prime_field()) {
        std::uint32_t p = field.characteristic();
        while (true) {
            std::vector<Vector> rows;
            rows.reserve(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                Vector row;
                row.reserve(ambient);
                for (std::size_t j = 0; j < ambient; ++j)
                    row.push_back(Scalar::from_int(field, static_cast<long long>(rng.below(p))));
                rows.push_back(std::move(row));
            }
            Subspace s = Subspace::span(field, ambient, std::move(rows));
            if (s.dim() == dim) return s;
        }
    }
    std::vector<Vector> rows;
    rows.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vector row;
        row.reserve(ambient);
        for (std::size_t j = 0; j < ambient; ++j)
            row.push_back(Scalar::from_int(field, static_cast<long long>(rng.below(5)) - 2));
        rows.push_back(std::move(row));
    }
    return Subspace::span(field, ambient, std::move(rows));
}

LinearRelation random_relation(Rng& rng, const FieldSpec& field, std::size_t dom_dim,
                               std::size_t cod_dim) {
    std::size_t total = dom_dim + cod_dim;
    std::size_t d = static_cast<std::size_t>(rng.below(total + 1));
    return LinearRelation::from_graph(dom_dim, cod_dim, random_subspace(rng, field, total, d));
}

} // namespace linrel
