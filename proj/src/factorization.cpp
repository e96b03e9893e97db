#include "linrel/factorization.hpp"

namespace linrel {

namespace {

std::string dims(const Subspace& u, const Subspace& w) {
    return "dims " + std::to_string(u.dim()) + " vs " + std::to_string(w.dim());
}

void require_shared_codomain(const LinearRelation& a, const LinearRelation& b, const char* what) {
    if (!(a.field() == b.field()) || a.cod_dim() != b.cod_dim())
        throw ShapeMismatch(std::string(what) + ": A and B must share the codomain space");
}

void require_shared_domain(const LinearRelation& a, const LinearRelation& b, const char* what) {
    if (!(a.field() == b.field()) || a.dom_dim() != b.dom_dim())
        throw ShapeMismatch(std::string(what) + ": A and B must share the domain space");
}

Vector concat(const Vector& a, const Vector& b) {
    Vector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

LinearRelation from_pairs(const FieldSpec& f, std::size_t dom_dim, std::size_t cod_dim,
                          const std::vector<Vector>& xs, const std::vector<Vector>& ys) {
    std::vector<Vector> rows;
    rows.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back(concat(xs[i], ys[i]));
    return LinearRelation::from_generators(f, dom_dim, cod_dim, std::move(rows));
}

Vector must_fiber(const LinearRelation& r, const Vector& x, const char* stage) {
    auto y = fiber_particular(r, x);
    if (!y) throw std::logic_error(std::string("construction invariant broken: ") + stage);
    return *y;
}

bool spans_independently(const FieldSpec& f, std::size_t n, const std::vector<Vector>& family) {
    return Subspace::span(f, n, family).dim() == family.size();
}

} // namespace

// --- Relation solutions --------------------------------------------------

DecisionReport right_relation_criterion(const LinearRelation& a, const LinearRelation& b) {
    require_shared_codomain(a, b, "right_relation_criterion");
    bool ran_inc = b.ran().contains(a.ran());
    return make_report("t1", {{"ran A contained in ran B", ran_inc, dims(a.ran(), b.ran())}});
}

std::optional<LinearRelation> solve_right_relation(const LinearRelation& a,
                                                   const LinearRelation& b) {
    if (!right_relation_criterion(a, b).verdict) return std::nullopt;
    LinearRelation c = compose(inverse(b), a);
    if (!contains(compose(b, c), a))
        throw std::logic_error("solve_right_relation: B(B^-1 A) does not contain A");
    return c;
}

DecisionReport left_relation_criterion(const LinearRelation& a, const LinearRelation& b) {
    require_shared_domain(a, b, "left_relation_criterion");
    bool dom_inc = b.dom().contains(a.dom());
    return make_report("c2", {{"dom A contained in dom B", dom_inc, dims(a.dom(), b.dom())}});
}

std::optional<LinearRelation> solve_left_relation(const LinearRelation& a,
                                                  const LinearRelation& b) {
    if (!left_relation_criterion(a, b).verdict) return std::nullopt;
    LinearRelation c = compose(a, inverse(b));
    if (!contains(compose(c, b), a))
        throw std::logic_error("solve_left_relation: (A B^-1)B does not contain A");
    return c;
}

// --- Exactness -----------------------------------------------------------

DecisionReport exact_right_check(const LinearRelation& a, const LinearRelation& b) {
    require_shared_codomain(a, b, "exact_right_check");
    bool mul_in_ran = a.ran().contains(b.mul());
    bool ran_inc = b.ran().contains(a.ran());
    bool pre_in_ker = a.ker().contains(preimage(a, b.mul()));
    DecisionReport rep = make_report(
        "c3", {{"mul B contained in ran A", mul_in_ran, dims(b.mul(), a.ran())},
               {"ran A contained in ran B", ran_inc, dims(a.ran(), b.ran())},
               {"A^-1(mul B) contained in ker A", pre_in_ker, ""}});
    bool direct = a == compose(b, compose(inverse(b), a));
    if (direct != rep.verdict)
        throw std::logic_error("exact_right_check disagrees with direct graph equality");
    rep.evidence.push_back({"A = BB^-1A directly", direct, ""});
    return rep;
}

DecisionReport exact_left_check(const LinearRelation& a, const LinearRelation& b) {
    require_shared_domain(a, b, "exact_left_check");
    bool ker_in_dom = a.dom().contains(b.ker());
    bool dom_inc = b.dom().contains(a.dom());
    bool img_in_mul = a.mul().contains(image(a, b.ker()));
    DecisionReport rep = make_report(
        "c4", {{"ker B contained in dom A", ker_in_dom, dims(b.ker(), a.dom())},
               {"dom A contained in dom B", dom_inc, dims(a.dom(), b.dom())},
               {"A(ker B) contained in mul A", img_in_mul, ""}});
    bool direct = a == compose(compose(a, inverse(b)), b);
    if (direct != rep.verdict)
        throw std::logic_error("exact_left_check disagrees with direct graph equality");
    rep.evidence.push_back({"A = AB^-1B directly", direct, ""});
    return rep;
}

// --- Right operator problem ----------------------------------------------

DecisionReport right_operator_criterion(const LinearRelation& a, const LinearRelation& b) {
    require_shared_codomain(a, b, "right_operator_criterion");
    bool ran_inc = b.ran().contains(a.ran());
    bool mul_inc = b.mul().contains(a.mul());
    return make_report("t5", {{"ran A contained in ran B", ran_inc, dims(a.ran(), b.ran())},
                              {"mul A contained in mul B", mul_inc, dims(a.mul(), b.mul())}});
}

DecisionReport right_pointwise_criterion(const LinearRelation& a, const LinearRelation& b) {
    require_shared_codomain(a, b, "right_pointwise_criterion");
    // A(x) subseteq B(y) for some y means: some z in A(x) lies in ran B,
    // and mul A subseteq mul B so the whole fiber follows along.
    std::vector<Evidence> rows;
    for (std::size_t i = 0; i < a.dom().dim(); ++i) {
        const Vector& x = a.dom().basis()[i];
        Vector z = must_fiber(a, x, "dom basis vector has no image");
        rows.push_back({"some z in A(x_" + std::to_string(i + 1) + ") lies in ran B",
                        b.ran().contains(z), ""});
    }
    rows.push_back({"mul A contained in mul B", b.mul().contains(a.mul()), dims(a.mul(), b.mul())});
    return make_report("t5(iii)", std::move(rows));
}

std::optional<OperatorSolution> solve_right_operator(const LinearRelation& a,
                                                     const LinearRelation& b) {
    if (!right_operator_criterion(a, b).verdict) return std::nullopt;

    // One pass over a basis of dom A: x -> canonical z in A(x) -> canonical
    // y with (y, z) in B. Linear extension is the solution.
    LinearRelation b_inv = inverse(b);
    std::vector<Vector> xs, ys;
    for (const Vector& x : a.dom().basis()) {
        Vector z = must_fiber(a, x, "dom basis vector has no image");
        ys.push_back(must_fiber(b_inv, z, "z outside ran B despite criterion"));
        xs.push_back(x);
    }
    LinearRelation c = from_pairs(a.field(), a.dom_dim(), b.dom_dim(), xs, ys);

    DecisionReport validation =
        make_report("t5 solution", {{"mul C = {0}", c.is_operator(), ""},
                                    {"A contained in BC", contains(compose(b, c), a), ""}});
    if (!validation.verdict)
        throw std::logic_error("solve_right_operator: constructed C failed re-verification");
    return OperatorSolution{std::move(c), std::nullopt, std::move(validation)};
}

DecisionReport is_right_solution_general_form(const LinearRelation& a, const LinearRelation& b,
                                              const OperatorSolution& c0,
                                              const LinearRelation& c) {
    require_shared_codomain(a, b, "is_right_solution_general_form");
    if (!c.is_operator()) throw NotAnOperator("candidate C is not an operator");
    if (!c0.C.is_operator()) throw NotAnOperator("C0 is not an operator");
    if (!c.same_shape(c0.C) || c.dom_dim() != a.dom_dim() || c.cod_dim() != b.dom_dim())
        throw ShapeMismatch("candidate C has the wrong shape");
    if (!contains(compose(b, c0.C), a)) throw NotContained("C0 does not solve A in BX");

    bool dom_ok = c.dom().contains(a.dom());
    LinearRelation diff = restrict(subtract(c, c0.C), a.dom());
    bool into_ker = b.ker().contains(diff.ran());
    DecisionReport rep = make_report(
        "r7", {{"dom C contains dom A", dom_ok, dims(a.dom(), c.dom())},
               {"(C - C0)|dom A maps into ker B", into_ker, dims(diff.ran(), b.ker())}});
    bool direct = contains(compose(b, c), a);
    if (direct != rep.verdict)
        throw std::logic_error("general-form test disagrees with the direct containment");
    rep.evidence.push_back({"A contained in BC directly", direct, ""});
    return rep;
}

// --- Left operator problem -----------------------------------------------

DecisionReport left_criterion(const LinearRelation& a, const LinearRelation& b) {
    require_shared_domain(a, b, "left_criterion");
    bool dom_inc = b.dom().contains(a.dom());
    Subspace obstruction = image(a, intersect(a.dom(), b.ker()));
    bool dim_ok = b.mul().dim() >= obstruction.dim();
    return make_report(
        "t21", {{"dom A contained in dom B", dom_inc, dims(a.dom(), b.dom())},
                {"dim(mul B) >= dim A(dom A cap ker B)", dim_ok,
                 "dim mul B = " + std::to_string(b.mul().dim()) +
                     ", dim A(dom A cap ker B) = " + std::to_string(obstruction.dim())}});
}

namespace {

// Shared construction behind the left solvers: builds the basis families
// and the operator they define. Callers have already checked a criterion
// that makes every step here succeed.
OperatorSolution build_left_solution(const LinearRelation& a, const LinearRelation& b,
                                     const char* criterion_name) {
    const FieldSpec& f = a.field();
    std::size_t ny = b.cod_dim(), nz = a.cod_dim();

    // z: a basis of A(dom A cap ker B) extended to one of ran A.
    Subspace k0 = image(a, intersect(a.dom(), b.ker()));
    std::vector<Vector> z = k0.basis();
    std::vector<std::size_t> split_i0(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) split_i0[i] = i;
    for (const Vector& v : complement(k0, a.ran()).basis()) z.push_back(v);

    // y: an independent family in mul B on the leading block, canonical
    // fibers of BA^-1 beyond it.
    std::vector<Vector> y;
    for (std::size_t i = 0; i < split_i0.size(); ++i) y.push_back(b.mul().basis()[i]);
    LinearRelation ba_inv = compose(b, inverse(a));
    for (std::size_t i = split_i0.size(); i < z.size(); ++i)
        y.push_back(must_fiber(ba_inv, z[i], "z outside dom(BA^-1)"));

    // x': a basis of ker A cap ker B extended to one of ker A; y' vanishes
    // on the leading block and is a canonical B-fiber beyond it.
    Subspace j0 = intersect(a.ker(), b.ker());
    std::vector<Vector> x_prime = j0.basis();
    std::vector<std::size_t> split_j0(x_prime.size());
    for (std::size_t i = 0; i < x_prime.size(); ++i) split_j0[i] = i;
    for (const Vector& v : complement(j0, a.ker()).basis()) x_prime.push_back(v);

    std::vector<Vector> y_prime;
    for (std::size_t i = 0; i < x_prime.size(); ++i) {
        if (i < split_j0.size())
            y_prime.push_back(zero_vector(f, ny));
        else
            y_prime.push_back(must_fiber(b, x_prime[i], "ker A vector outside dom B"));
    }

    // The operator: y_a -> z_a and y'_b -> 0, linearly extended.
    std::vector<Vector> cx, cy;
    for (std::size_t i = 0; i < z.size(); ++i) {
        cx.push_back(y[i]);
        cy.push_back(z[i]);
    }
    for (std::size_t i = split_j0.size(); i < x_prime.size(); ++i) {
        cx.push_back(y_prime[i]);
        cy.push_back(zero_vector(f, nz));
    }
    LinearRelation c = from_pairs(f, ny, nz, cx, cy);

    // Re-verify the family invariants and the solution itself.
    Subspace span_y = Subspace::span(f, ny, y);
    Subspace span_yp = Subspace::span(f, ny, y_prime);
    bool families_ok = spans_independently(f, nz, z) && Subspace::span(f, nz, z) == a.ran() &&
                       Subspace::span(f, a.dom_dim(), x_prime) == a.ker() &&
                       spans_independently(f, ny, y) && intersect(span_y, span_yp).is_zero();
    DecisionReport validation = make_report(
        criterion_name,
        {{"basis families satisfy the side conditions", families_ok, ""},
         {"mul C = {0}", c.is_operator(), ""},
         {"A contained in CB", contains(compose(c, b), a), ""},
         {"ran C = ran A", c.ran() == a.ran(), dims(c.ran(), a.ran())},
         {"ker C = Sp{y'}", c.ker() == span_yp, dims(c.ker(), span_yp)},
         {"dom C = Sp{y} (+) Sp{y'}", c.dom() == sum(span_y, span_yp), ""}});
    if (!validation.verdict)
        throw std::logic_error("left solver: constructed C failed re-verification");

    SolutionBasis basis{std::move(z), std::move(y), std::move(x_prime), std::move(y_prime),
                        std::move(split_i0), std::move(split_j0)};
    return OperatorSolution{std::move(c), std::move(basis), std::move(validation)};
}

} // namespace

std::optional<OperatorSolution> solve_left_operator(const LinearRelation& a,
                                                    const LinearRelation& b) {
    if (!left_criterion(a, b).verdict) return std::nullopt;
    return build_left_solution(a, b, "t9/t21 solution");
}

DecisionReport left_injective_criterion(const LinearRelation& a, const LinearRelation& b) {
    require_shared_domain(a, b, "left_injective_criterion");
    bool dom_inc = b.dom().contains(a.dom());
    bool ker_inc = b.ker().contains(a.ker());
    Subspace obstruction = image(a, intersect(a.dom(), b.ker()));
    Subspace b_of_ker = image(b, a.ker());
    bool dim_ok = obstruction.dim() <= b_of_ker.dim();
    return make_report(
        "c20", {{"dom A contained in dom B", dom_inc, dims(a.dom(), b.dom())},
                {"ker A contained in ker B", ker_inc, dims(a.ker(), b.ker())},
                {"dim A(dom A cap ker B) <= dim B(ker A)", dim_ok,
                 "dims " + std::to_string(obstruction.dim()) + " vs " +
                     std::to_string(b_of_ker.dim())}});
}

std::optional<OperatorSolution> solve_left_operator_injective(const LinearRelation& a,
                                                              const LinearRelation& b) {
    if (!left_injective_criterion(a, b).verdict) return std::nullopt;
    // With ker A inside ker B the x' block is all of ker A cap ker B, so
    // every y' vanishes and the generic construction is already injective.
    OperatorSolution sol = build_left_solution(a, b, "c11/c20 solution");
    if (!sol.C.ker().is_zero())
        throw std::logic_error("injective left solver produced a non-injective operator");
    sol.validation.evidence.push_back({"ker C = {0}", true, ""});
    return sol;
}

DecisionReport operators_left_sufficient(const LinearRelation& a, const LinearRelation& b) {
    require_shared_domain(a, b, "operators_left_sufficient");
    if (!a.is_operator()) throw NotAnOperator("A must be an operator for the c22 condition");

    bool dom_inc = b.dom().contains(a.dom());
    Subspace cap = intersect(b.ker(), a.dom());
    bool cap_in_ker = a.ker().contains(cap);
    std::vector<Evidence> rows = {
        {"dom A contained in dom B", dom_inc, dims(a.dom(), b.dom())},
        {"ker B cap dom A contained in ker A", cap_in_ker, dims(cap, a.ker())}};

    if (b.is_operator()) {
        // c17 with the deterministic complement X0 of ker A in dom A: X0 is
        // a valid witness iff it avoids ker B, and then the image condition
        // decides existence.
        Subspace x0 = complement(a.ker(), a.dom());
        bool avoids = intersect(x0, b.ker()).is_zero();
        bool images_meet_trivially =
            intersect(image(b, a.ker()), image(b, x0)).is_zero();
        rows.push_back({"X0 cap ker B = {0} (c17 witness)", avoids, ""});
        rows.push_back({"B(ker A) cap B(X0) = {0} (c17)", images_meet_trivially, ""});
        bool c17_ok = dom_inc && avoids && images_meet_trivially;
        if (c17_ok != (dom_inc && cap_in_ker))
            throw std::logic_error("c17 and c22 disagree for operator inputs");
    }

    DecisionReport rep = make_report("c22", std::move(rows));
    if (rep.verdict) {
        // The sufficient condition promises a solution; confirm one emerges.
        if (!solve_left_operator(a, b).has_value())
            throw std::logic_error("c22 held but the constructive solver found nothing");
        rep.evidence.push_back({"constructive solver produced a verified solution", true, ""});
    }
    return rep;
}

// --- Operator part and independent selections -----------------------------

DecisionReport operator_part_criterion(const LinearRelation& r) {
    bool dim_ok = r.ker().dim() >= r.mul().dim();
    return make_report("c24", {{"dim(ker R) >= dim(mul R)", dim_ok,
                                "dims " + std::to_string(r.ker().dim()) + " vs " +
                                    std::to_string(r.mul().dim())}});
}

std::optional<OperatorSolution> operator_part(const LinearRelation& r) {
    if (!operator_part_criterion(r).verdict) return std::nullopt;
    const FieldSpec& f = r.field();

    // Canonical fibers on a complement of ker R; the kernel basis is matched
    // to a basis of mul R padded with zeros, so dom C = dom R.
    std::vector<Vector> xs, ys;
    for (const Vector& x : complement(r.ker(), r.dom()).basis()) {
        xs.push_back(x);
        ys.push_back(must_fiber(r, x, "dom vector without image"));
    }
    const std::vector<Vector>& ker_basis = r.ker().basis();
    for (std::size_t j = 0; j < ker_basis.size(); ++j) {
        xs.push_back(ker_basis[j]);
        ys.push_back(j < r.mul().dim() ? r.mul().basis()[j] : zero_vector(f, r.cod_dim()));
    }
    LinearRelation c = from_pairs(f, r.dom_dim(), r.cod_dim(), xs, ys);

    DecisionReport validation = make_report(
        "c24 solution", {{"mul C = {0}", c.is_operator(), ""},
                         {"C contained in R", contains(r, c), ""},
                         {"ran C = ran R", c.ran() == r.ran(), dims(c.ran(), r.ran())}});
    if (!validation.verdict)
        throw std::logic_error("operator_part: constructed C failed re-verification");
    return OperatorSolution{std::move(c), std::nullopt, std::move(validation)};
}

namespace {

SelectionReport selection_check(const LinearRelation& r, const std::string& criterion) {
    bool dim_ok = r.ker().dim() <= r.mul().dim();
    DecisionReport rep = make_report(
        criterion, {{"dim(ker R) <= dim(mul R)", dim_ok,
                     "dims " + std::to_string(r.ker().dim()) + " vs " +
                         std::to_string(r.mul().dim())}});
    if (!dim_ok) return SelectionReport{std::move(rep), std::nullopt};

    // Witness: the kernel basis paired with an independent family inside
    // mul R, a complement basis paired with canonical fibers.
    SelectionWitness w;
    const std::vector<Vector>& ker_basis = r.ker().basis();
    for (std::size_t j = 0; j < ker_basis.size(); ++j) {
        w.x.push_back(ker_basis[j]);
        w.y.push_back(r.mul().basis()[j]);
    }
    for (const Vector& x : complement(r.ker(), r.dom()).basis()) {
        w.x.push_back(x);
        w.y.push_back(must_fiber(r, x, "dom vector without image"));
    }

    bool pairs_ok = true;
    for (std::size_t i = 0; i < w.x.size(); ++i)
        pairs_ok = pairs_ok && r.graph().contains(concat(w.x[i], w.y[i]));
    bool x_is_basis = Subspace::span(r.field(), r.dom_dim(), w.x) == r.dom() &&
                      w.x.size() == r.dom().dim();
    bool y_independent = spans_independently(r.field(), r.cod_dim(), w.y);
    if (!pairs_ok || !x_is_basis || !y_independent)
        throw std::logic_error("selection witness failed re-verification");
    rep.evidence.push_back({"witness family re-verified independent", true, ""});
    return SelectionReport{std::move(rep), std::move(w)};
}

} // namespace

SelectionReport independent_selection_check(const LinearRelation& r) {
    return selection_check(r, "c18");
}

SelectionReport independent_selection_check_r19(const LinearRelation& a,
                                                const LinearRelation& b) {
    require_shared_domain(a, b, "independent_selection_check_r19");
    return selection_check(compose(b, inverse(a)), "c18 (r19: R = BA^-1)");
}

} // namespace linrel
