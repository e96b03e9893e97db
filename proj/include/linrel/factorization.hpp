#pragma once

#include <optional>

#include "linrel/relation.hpp"

namespace linrel {

// The basis families behind a left solution: a basis {z} of ran A whose
// leading block spans A(dom A cap ker B), the matching family {y} with
// y_a in BA^-1(z_a) (drawn from mul B on the leading block), a basis {x'}
// of ker A whose leading block spans ker A cap ker B, and y'_b in B(x'_b)
// with y'_b = 0 on that leading block.
struct SolutionBasis {
    std::vector<Vector> z, y, x_prime, y_prime;
    std::vector<std::size_t> split_I0, split_J0;  // indices of the leading blocks
};

// An operator solution together with the re-verification performed on it.
// Construction re-checks everything from scratch; an OperatorSolution in
// hand is always a certified solution.
struct OperatorSolution {
    LinearRelation C;
    std::optional<SolutionBasis> basis;  // present for left solutions
    DecisionReport validation;
};

// --- Relation solutions -------------------------------------------------

// A in X x Z, B in Y x Z. Criterion t1: a relation C with A subseteq BC
// exists iff ran A subseteq ran B; the solution returned is C = B^-1 A.
DecisionReport right_relation_criterion(const LinearRelation& a, const LinearRelation& b);
std::optional<LinearRelation> solve_right_relation(const LinearRelation& a,
                                                   const LinearRelation& b);

// A in X x Z, B in X x Y. Criterion c2: a relation C with A subseteq CB
// exists iff dom A subseteq dom B; the solution returned is C = A B^-1.
DecisionReport left_relation_criterion(const LinearRelation& a, const LinearRelation& b);
std::optional<LinearRelation> solve_left_relation(const LinearRelation& a,
                                                  const LinearRelation& b);

// --- Exactness ----------------------------------------------------------

// c3: A = BB^-1A iff mul B subseteq ran A subseteq ran B and
// A^-1(mul B) subseteq ker A. The report also carries the direct graph
// equality, which always agrees.
DecisionReport exact_right_check(const LinearRelation& a, const LinearRelation& b);

// c4: A = AB^-1B iff ker B subseteq dom A subseteq dom B and
// A(ker B) subseteq mul A.
DecisionReport exact_left_check(const LinearRelation& a, const LinearRelation& b);

// --- Operator solutions, right problem A subseteq BX ---------------------

// t5 (ii): ran A subseteq ran B and mul A subseteq mul B.
DecisionReport right_operator_criterion(const LinearRelation& a, const LinearRelation& b);
// t5 (iii): for every basis vector x of dom A there is y in dom B with
// A(x) subseteq B(y); checked on the canonical basis.
DecisionReport right_pointwise_criterion(const LinearRelation& a, const LinearRelation& b);
std::optional<OperatorSolution> solve_right_operator(const LinearRelation& a,
                                                     const LinearRelation& b);

// r7: an operator C solves A subseteq BX iff dom C contains dom A and
// (C - C0)|_{dom A} maps into ker B, for any particular solution C0.
DecisionReport is_right_solution_general_form(const LinearRelation& a, const LinearRelation& b,
                                              const OperatorSolution& c0,
                                              const LinearRelation& c);

// --- Operator solutions, left problem A subseteq XB ----------------------

// t21 (ii): dom A subseteq dom B and dim(mul B) >= dim A(dom A cap ker B).
DecisionReport left_criterion(const LinearRelation& a, const LinearRelation& b);
std::optional<OperatorSolution> solve_left_operator(const LinearRelation& a,
                                                    const LinearRelation& b);

// c20 (ii): dom A subseteq dom B, ker A subseteq ker B and
// dim A(dom A cap ker B) <= dim B(ker A).
DecisionReport left_injective_criterion(const LinearRelation& a, const LinearRelation& b);
std::optional<OperatorSolution> solve_left_operator_injective(const LinearRelation& a,
                                                              const LinearRelation& b);

// c22 sufficient condition for operators A: dom A subseteq dom B and
// ker B cap dom A subseteq ker A; when B is an operator too, the
// complement-based c17 condition is evaluated as well (they agree), and a
// true verdict is cross-validated by running the constructive solver.
DecisionReport operators_left_sufficient(const LinearRelation& a, const LinearRelation& b);

// --- Operator part and independent selections ----------------------------

// c24 (iii): an operator C subseteq R with ran C = ran R exists iff
// dim ker R >= dim mul R.
DecisionReport operator_part_criterion(const LinearRelation& r);
std::optional<OperatorSolution> operator_part(const LinearRelation& r);

// A basis {x} of dom R with an independent family y_a in R(x_a).
struct SelectionWitness {
    std::vector<Vector> x, y;
};
struct SelectionReport {
    DecisionReport report;
    std::optional<SelectionWitness> witness;  // present when the verdict holds
};

// c18 (iii): such a selection exists iff dim ker R <= dim mul R. The
// witness is rebuilt per the constructive proof and re-verified.
SelectionReport independent_selection_check(const LinearRelation& r);
// The same check specialized to R = BA^-1 (r19); the report says so.
SelectionReport independent_selection_check_r19(const LinearRelation& a, const LinearRelation& b);

} // namespace linrel
