#include "linrel/verify.hpp"

#include <algorithm>
#include <functional>

#include "linrel/factorization.hpp"
#include "linrel/format.hpp"
#include "linrel/generate.hpp"
#include "linrel/oracle.hpp"

namespace linrel {

namespace {

struct Recorder {
    SuiteResult* out;

    void check(bool ok, const std::string& desc,
               std::initializer_list<std::pair<const char*, const LinearRelation*>> rels = {}) {
        ++out->checks;
        if (ok) return;
        Failure f;
        f.description = desc;
        for (const auto& [label, rel] : rels)
            f.reproducers.emplace_back(label, serialize_relation(*rel));
        out->failures.push_back(std::move(f));
    }
};

// Every relation the harness generates passes through here, so the
// codimension identity is checked on all of them.
LinearRelation gen_relation(Recorder& rec, Rng& rng, const FieldSpec& f, std::size_t n,
                            std::size_t m) {
    LinearRelation r = random_relation(rng, f, n, m);
    bool c16 = codim(r.ker(), r.dom()) == codim(r.mul(), r.ran());
    rec.check(c16, "c16: codim_{dom R}(ker R) = codim_{ran R}(mul R)", {{"R", &r}});
    return r;
}

Vector random_element(Rng& rng, const Subspace& s) {
    Vector v = zero_vector(s.field(), s.ambient_dim());
    for (const Vector& b : s.basis()) {
        long long c = s.field().is_prime_field()
                          ? static_cast<long long>(rng.below(s.field().characteristic()))
                          : static_cast<long long>(rng.below(5)) - 2;
        v = vector_add(v, vector_scale(Scalar::from_int(s.field(), c), b));
    }
    return v;
}

std::size_t dim_pick(Rng& rng, std::size_t max_dim) { return rng.below(max_dim + 1); }

// A deterministic per-(suite, field) seed stream.
Rng seeded(const RunConfig& cfg, std::size_t suite_index, std::size_t field_index) {
    return Rng(cfg.seed * 0x9e3779b97f4a7c15ull + suite_index * 1000003ull + field_index * 101ull +
               1);
}

void suite_compose_identities(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t n = dim_pick(rng, cfg.max_dim), m = dim_pick(rng, cfg.max_dim),
                    q = dim_pick(rng, cfg.max_dim);
        LinearRelation r = gen_relation(rec, rng, f, n, m);
        LinearRelation s = gen_relation(rec, rng, f, m, q);
        LinearRelation sr = compose(s, r);
        rec.check(sr.dom() == preimage(r, intersect(s.dom(), r.ran())),
                  "eq0: dom(SR) = R^-1(dom S cap ran R)", {{"R", &r}, {"S", &s}});
        rec.check(sr.ker() == preimage(r, intersect(s.ker(), r.ran())),
                  "eq0: ker(SR) = R^-1(ker S cap ran R)", {{"R", &r}, {"S", &s}});
        rec.check(sr.ran() == image(s, intersect(s.dom(), r.ran())),
                  "eq0p: ran(SR) = S(dom S cap ran R)", {{"R", &r}, {"S", &s}});
        rec.check(sr.mul() == image(s, intersect(s.dom(), r.mul())),
                  "eq0p: mul(SR) = S(dom S cap mul R)", {{"R", &r}, {"S", &s}});

        // Shared codomain pair for the BB^-1A identities.
        std::size_t na = dim_pick(rng, cfg.max_dim), nb = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, na, nz);
        LinearRelation b = gen_relation(rec, rng, f, nb, nz);
        LinearRelation bbia = compose(b, compose(inverse(b), a));
        rec.check(bbia.ran() == sum(a.ran(), b.mul()), "eq3: ran(BB^-1A) = ran A + mul B",
                  {{"A", &a}, {"B", &b}});
        rec.check(bbia.ker() == preimage(a, b.mul()), "eq4: ker(BB^-1A) = A^-1(mul B)",
                  {{"A", &a}, {"B", &b}});
    }
}

void suite_arens_c12(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t n = dim_pick(rng, cfg.max_dim), m = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, n, m);
        LinearRelation b = gen_relation(rec, rng, f, n, m);

        rec.check(contained_c12(a, b).verdict == b.graph().contains(a.graph()),
                  "c12 verdict equals direct graph containment", {{"A", &a}, {"B", &b}});
        rec.check(arens_equal(a, b).verdict == (a == b),
                  "p0 verdict equals direct graph equality", {{"A", &a}, {"B", &b}});

        // A contained pair exercises the kernel/range route of p0.
        LinearRelation big = LinearRelation::from_graph(
            n, m, sum(a.graph(), random_relation(rng, f, n, m).graph()));
        rec.check(arens_equal(a, big).verdict == (a == big),
                  "p0 on a contained pair", {{"R", &a}, {"S", &big}});
    }
}

void suite_c16(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t)
        gen_relation(rec, rng, f, dim_pick(rng, cfg.max_dim), dim_pick(rng, cfg.max_dim));
}

void suite_solvers_relation(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, cfg.max_dim), ny = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, ny, nz);
        auto c = solve_right_relation(a, b);
        rec.check(c.has_value() == right_relation_criterion(a, b).verdict,
                  "t1: solver success iff ran A in ran B", {{"A", &a}, {"B", &b}});
        if (c) rec.check(contains(compose(b, *c), a), "t1: returned C satisfies A in BC",
                         {{"A", &a}, {"B", &b}});

        LinearRelation a2 = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b2 = gen_relation(rec, rng, f, nx, ny);
        auto c2 = solve_left_relation(a2, b2);
        rec.check(c2.has_value() == left_relation_criterion(a2, b2).verdict,
                  "c2: solver success iff dom A in dom B", {{"A", &a2}, {"B", &b2}});
        if (c2) rec.check(contains(compose(*c2, b2), a2), "c2: returned C satisfies A in CB",
                          {{"A", &a2}, {"B", &b2}});
        rec.check(c2.has_value() == solve_right_relation(inverse(a2), inverse(b2)).has_value(),
                  "duality: left solvable iff right solvable for the inverses",
                  {{"A", &a2}, {"B", &b2}});
    }
}

void suite_exactness(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, cfg.max_dim), ny = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, ny, nz);
        bool direct_right = a == compose(b, compose(inverse(b), a));
        rec.check(exact_right_check(a, b).verdict == direct_right,
                  "c3 verdict equals A = BB^-1A", {{"A", &a}, {"B", &b}});

        LinearRelation a2 = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b2 = gen_relation(rec, rng, f, nx, ny);
        bool direct_left = a2 == compose(compose(a2, inverse(b2)), b2);
        rec.check(exact_left_check(a2, b2).verdict == direct_left,
                  "c4 verdict equals A = AB^-1B", {{"A", &a2}, {"B", &b2}});
    }
}

void suite_right_operator(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, cfg.max_dim), ny = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, ny, nz);
        auto sol = solve_right_operator(a, b);
        bool crit = right_operator_criterion(a, b).verdict;
        rec.check(sol.has_value() == crit, "t5: solver success iff criterion (ii)",
                  {{"A", &a}, {"B", &b}});
        rec.check(right_pointwise_criterion(a, b).verdict == crit,
                  "t5: pointwise criterion (iii) iff criterion (ii)", {{"A", &a}, {"B", &b}});
        if (sol) {
            rec.check(sol->C.is_operator() && contains(compose(b, sol->C), a),
                      "t5: solution re-verifies", {{"A", &a}, {"B", &b}});
            rec.check(sol->validation.verdict, "t5: recorded validation holds",
                      {{"A", &a}, {"B", &b}});
        }
    }
}

void suite_left_operator(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, cfg.max_dim), ny = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, nx, ny);
        auto sol = solve_left_operator(a, b);
        rec.check(sol.has_value() == left_criterion(a, b).verdict,
                  "t9/t21: solver success iff criterion", {{"A", &a}, {"B", &b}});
        if (!sol) continue;

        const SolutionBasis& fam = *sol->basis;
        Subspace span_y = Subspace::span(f, ny, fam.y);
        Subspace span_yp = Subspace::span(f, ny, fam.y_prime);
        rec.check(sol->C.is_operator() && contains(compose(sol->C, b), a),
                  "t9/t21: solution re-verifies", {{"A", &a}, {"B", &b}});
        rec.check(sol->C.ran() == a.ran(), "r10: ran C = ran A", {{"A", &a}, {"B", &b}});
        rec.check(sol->C.ker() == span_yp, "r10: ker C = Sp{y'}", {{"A", &a}, {"B", &b}});
        rec.check(sol->C.dom() == sum(span_y, span_yp) && intersect(span_y, span_yp).is_zero(),
                  "r10: dom C = Sp{y} (+) Sp{y'}", {{"A", &a}, {"B", &b}});
    }
}

void suite_left_injective(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, cfg.max_dim), ny = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, nx, ny);
        auto sol = solve_left_operator_injective(a, b);
        rec.check(sol.has_value() == left_injective_criterion(a, b).verdict,
                  "c20: solver success iff criterion", {{"A", &a}, {"B", &b}});
        if (sol)
            rec.check(sol->C.is_injective_operator() && contains(compose(sol->C, b), a),
                      "c20: injective solution re-verifies", {{"A", &a}, {"B", &b}});
    }
}

void suite_operator_part(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        LinearRelation r =
            gen_relation(rec, rng, f, dim_pick(rng, cfg.max_dim), dim_pick(rng, cfg.max_dim));
        auto sol = operator_part(r);
        rec.check(sol.has_value() == (r.ker().dim() >= r.mul().dim()),
                  "c24: operator part exists iff dim ker >= dim mul", {{"R", &r}});
        if (sol)
            rec.check(sol->C.is_operator() && contains(r, sol->C) && sol->C.ran() == r.ran(),
                      "c24: operator part re-verifies", {{"R", &r}});

        SelectionReport sel = independent_selection_check(r);
        rec.check(sel.report.verdict == (r.ker().dim() <= r.mul().dim()),
                  "c18: selection verdict is the dimension test", {{"R", &r}});
        if (sel.witness) {
            bool pairs_ok = true;
            for (std::size_t i = 0; i < sel.witness->x.size(); ++i) {
                Vector pair = sel.witness->x[i];
                pair.insert(pair.end(), sel.witness->y[i].begin(), sel.witness->y[i].end());
                pairs_ok = pairs_ok && r.graph().contains(pair);
            }
            bool indep =
                Subspace::span(f, r.cod_dim(), sel.witness->y).dim() == sel.witness->y.size();
            rec.check(pairs_ok && indep, "c18: witness pairs lie in R and are independent",
                      {{"R", &r}});
        }

        // The r19 specialization agrees with the dimension test on BA^-1.
        std::size_t ny = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, r.dom_dim(), dim_pick(rng, cfg.max_dim));
        LinearRelation b = gen_relation(rec, rng, f, r.dom_dim(), ny);
        LinearRelation ba_inv = compose(b, inverse(a));
        rec.check(independent_selection_check_r19(a, b).report.verdict ==
                      (ba_inv.ker().dim() <= ba_inv.mul().dim()),
                  "r19: specialization matches the dimension test on BA^-1",
                  {{"A", &a}, {"B", &b}});
    }
}

void suite_general_form(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, cfg.max_dim), ny = dim_pick(rng, cfg.max_dim),
                    nz = dim_pick(rng, cfg.max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, ny, nz);
        auto c0 = solve_right_operator(a, b);
        if (!c0) continue;

        // C0 itself must pass the general-form test with C1 = 0.
        rec.check(is_right_solution_general_form(a, b, *c0, c0->C).verdict,
                  "r7: C0 recognizes itself", {{"A", &a}, {"B", &b}});

        // C0 plus an operator into ker B stays a solution.
        std::vector<Vector> xs, ys;
        for (const Vector& x : a.dom().basis()) {
            xs.push_back(x);
            ys.push_back(random_element(rng, b.ker()));
        }
        LinearRelation c1 = LinearRelation::from_graph(
            nx, ny, [&] {
                std::vector<Vector> rows;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    Vector row = xs[i];
                    row.insert(row.end(), ys[i].begin(), ys[i].end());
                    rows.push_back(std::move(row));
                }
                return Subspace::span(f, nx + ny, std::move(rows));
            }());
        LinearRelation c = add(c0->C, c1);
        if (c.is_operator()) {
            DecisionReport rep = is_right_solution_general_form(a, b, *c0, c);
            rec.check(rep.verdict, "r7: C0 + (operator into ker B) solves A in BX",
                      {{"A", &a}, {"B", &b}});
            rec.check(contains(compose(b, c), a), "r7: direct containment for the shifted solution",
                      {{"A", &a}, {"B", &b}});
        }

        // A perturbation outside ker B must agree with the direct check.
        if (!b.ker().is_full() && nx > 0 && a.dom().dim() > 0) {
            Vector outside = unit_vector(f, ny, 0);
            for (std::size_t j = 0; j < ny && b.ker().contains(outside); ++j)
                outside = unit_vector(f, ny, j);
            if (!b.ker().contains(outside)) {
                std::vector<Vector> rows;
                for (std::size_t i = 0; i < a.dom().basis().size(); ++i) {
                    Vector row = a.dom().basis()[i];
                    row.insert(row.end(), outside.begin(), outside.end());
                    rows.push_back(std::move(row));
                }
                LinearRelation bad =
                    add(c0->C, LinearRelation::from_generators(f, nx, ny, std::move(rows)));
                if (bad.is_operator()) {
                    DecisionReport rep = is_right_solution_general_form(a, b, *c0, bad);
                    rec.check(rep.verdict == contains(compose(b, bad), a),
                              "r7: verdict equals direct containment for perturbed candidates",
                              {{"A", &a}, {"B", &b}});
                }
            }
        }
    }
}

void oracle_case(Recorder& rec, const LinearRelation& a, const LinearRelation& b) {
    rec.check(oracle_exists(Problem::RightRelation, a, b) ==
                  right_relation_criterion(a, b).verdict,
              "oracle: RightRelation matches t1", {{"A", &a}, {"B", &b}});
    rec.check(oracle_exists(Problem::RightOperator, a, b) ==
                  right_operator_criterion(a, b).verdict,
              "oracle: RightOperator matches t5", {{"A", &a}, {"B", &b}});
}

void oracle_case_left(Recorder& rec, const LinearRelation& a, const LinearRelation& b) {
    rec.check(oracle_exists(Problem::LeftOperator, a, b) == left_criterion(a, b).verdict,
              "oracle: LeftOperator matches t21", {{"A", &a}, {"B", &b}});
    rec.check(oracle_exists(Problem::LeftInjectiveOperator, a, b) ==
                  left_injective_criterion(a, b).verdict,
              "oracle: LeftInjectiveOperator matches c20", {{"A", &a}, {"B", &b}});
}

void suite_oracle(const RunConfig& cfg, Recorder& rec, const FieldSpec& f, Rng& rng) {
    if (!f.is_prime_field()) return;
    std::size_t cap = f.characteristic() == 2 ? 2 : 1;
    std::size_t max_dim = std::min(cfg.max_dim, cap);

    if (f.characteristic() == 2) {
        // Named counterexample: mul-obstructed right problem. A = {0} x K
        // has mul A = K, B = identity has mul B = {0}: a relation solution
        // exists but no operator solution does.
        LinearRelation a0 = LinearRelation::from_generators(
            f, 1, 1, {make_vector(f, {0, 1})});
        LinearRelation b0 = LinearRelation::identity(f, 1);
        rec.check(oracle_exists(Problem::RightRelation, a0, b0), "t5 counterexample: relation exists",
                  {{"A", &a0}, {"B", &b0}});
        rec.check(!oracle_exists(Problem::RightOperator, a0, b0),
                  "t5 counterexample: no operator solution", {{"A", &a0}, {"B", &b0}});
        oracle_case(rec, a0, b0);

        // Named counterexample: the projection instance of the left problem.
        LinearRelation a1 = LinearRelation::identity(f, 2);
        LinearRelation b1 = LinearRelation::from_generators(
            f, 2, 1, {make_vector(f, {1, 0, 1}), make_vector(f, {0, 1, 0})});
        rec.check(!oracle_exists(Problem::LeftOperator, a1, b1),
                  "t21 counterexample: projection obstructs", {{"A", &a1}, {"B", &b1}});
        oracle_case_left(rec, a1, b1);
    }

    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::size_t nx = dim_pick(rng, max_dim), ny = dim_pick(rng, max_dim),
                    nz = dim_pick(rng, max_dim);
        LinearRelation a = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b = gen_relation(rec, rng, f, ny, nz);
        oracle_case(rec, a, b);

        LinearRelation a2 = gen_relation(rec, rng, f, nx, nz);
        LinearRelation b2 = gen_relation(rec, rng, f, nx, ny);
        oracle_case_left(rec, a2, b2);

        LinearRelation r = gen_relation(rec, rng, f, nx, ny);
        rec.check(oracle_exists(Problem::OperatorPart, r) == operator_part_criterion(r).verdict,
                  "oracle: OperatorPart matches c24", {{"R", &r}});
    }
}

using SuiteFn = void (*)(const RunConfig&, Recorder&, const FieldSpec&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"compose-identities", suite_compose_identities},
        {"arens-c12", suite_arens_c12},
        {"c16", suite_c16},
        {"solvers-relation", suite_solvers_relation},
        {"exactness", suite_exactness},
        {"right-operator", suite_right_operator},
        {"left-operator", suite_left_operator},
        {"left-injective", suite_left_injective},
        {"operator-part", suite_operator_part},
        {"general-form", suite_general_form},
        {"oracle", suite_oracle},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    const auto& table = suite_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].first != name) continue;
        SuiteResult result;
        result.name = name;
        Recorder rec{&result};
        for (std::size_t fi = 0; fi < cfg.fields.size(); ++fi) {
            Rng rng = seeded(cfg, i, fi);
            table[i].second(cfg, rec, cfg.fields[fi], rng);
        }
        return result;
    }
    throw Error("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_verification(const RunConfig& cfg) {
    std::vector<SuiteResult> results;
    for (const std::string& name : suite_names()) {
        if (name == "oracle" && !cfg.with_oracle) continue;
        if (!cfg.suites.empty() &&
            std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end())
            continue;
        results.push_back(run_suite(name, cfg));
    }
    return results;
}

std::string render_report(const RunConfig& cfg, const std::vector<SuiteResult>& results) {
    std::string out = "linrel verify\n";
    out += "seed " + std::to_string(cfg.seed) + " trials " + std::to_string(cfg.trials) +
           " max-dim " + std::to_string(cfg.max_dim) + " oracle " +
           (cfg.with_oracle ? "on" : "off") + " fields";
    for (const FieldSpec& f : cfg.fields) out += " " + f.name();
    out += "\n";

    std::uint64_t total_failures = 0;
    for (const SuiteResult& r : results) {
        if (r.ok()) {
            out += "ok " + r.name + " (checks=" + std::to_string(r.checks) + ")\n";
            continue;
        }
        total_failures += r.failures.size();
        out += "FAIL " + r.name + " (checks=" + std::to_string(r.checks) + ", failures=" +
               std::to_string(r.failures.size()) + ")\n";
        for (const Failure& f : r.failures) {
            out += "  violation: " + f.description + "\n";
            for (const auto& [label, text] : f.reproducers) {
                out += "  reproducer " + label + ":\n";
                std::size_t start = 0;
                while (start < text.size()) {
                    std::size_t end = text.find('\n', start);
                    if (end == std::string::npos) end = text.size();
                    out += "    " + text.substr(start, end - start) + "\n";
                    start = end + 1;
                }
            }
        }
    }
    out += total_failures == 0 ? "VERIFY OK\n"
                               : "VERIFY FAILED (" + std::to_string(total_failures) + " violations)\n";
    return out;
}

} // namespace linrel
