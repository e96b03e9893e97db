#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linrel/relation.hpp"

namespace linrel {

// Caps on brute-force enumeration; prime fields only. Enumeration refuses
// to start when the predicted work exceeds the caps.
struct EnumerationBudget {
    std::uint64_t max_total_points = 4096;   // |K|^(ambient of the searched product space)
    std::uint64_t max_candidates = 1000000;  // enumerated maps / subspaces
};

// Every total linear map K^dom_dim -> K^cod_dim as a graph relation,
// exactly once; count = p^(dom_dim * cod_dim).
std::vector<LinearRelation> enumerate_operators(const FieldSpec& field, std::size_t dom_dim,
                                                std::size_t cod_dim,
                                                const EnumerationBudget& budget = {});

// Every subspace of K^n exactly once, generated RREF-shape by RREF-shape
// (one pivot-column subset at a time), so no deduplication is needed.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, std::size_t n,
                                          const EnumerationBudget& budget = {});

// All p^dim(S) elements of a subspace.
std::vector<Vector> enumerate_elements(const Subspace& s, const EnumerationBudget& budget = {});

// Number of subspaces of K^n over GF(p): the sum of Gaussian binomials.
std::uint64_t count_subspaces(std::uint32_t p, std::size_t n);

// Product SR computed from the definition by exhaustive element chaining;
// the independent cross-check for compose().
LinearRelation oracle_compose(const LinearRelation& s, const LinearRelation& r,
                              const EnumerationBudget& budget = {});

enum class Problem {
    RightRelation,         // exists a relation C with A subseteq BC
    RightOperator,         // exists an operator C with A subseteq BC
    LeftOperator,          // exists an operator C with A subseteq CB
    LeftInjectiveOperator, // exists an injective operator C with A subseteq CB
    OperatorPart,          // exists an operator C subseteq R with ran C = ran R
};

// Decides existence by enumerating every candidate subspace of the product
// space (operators are the candidates with trivial multivalued part). For
// OperatorPart the subject relation goes in `a` and `b` must be absent.
// This is ground truth for the factorization criteria and must never be
// called by the solvers themselves.
bool oracle_exists(Problem problem, const LinearRelation& a,
                   const std::optional<LinearRelation>& b = std::nullopt,
                   const EnumerationBudget& budget = {});

} // namespace linrel
