#include "stab/cnf.hpp"
#include "stab/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace stab;

static CnfFormula eight_block() { return CnfFormula(3, full_block(1, 2, 3)); }

TEST_CASE("clause invariants")
{
    REQUIRE_THROWS_AS(CnfFormula(2, {{1, -1}}), std::domain_error);
    REQUIRE_THROWS_AS(CnfFormula(2, {{1, 1}}), std::domain_error);
    REQUIRE_THROWS_AS(CnfFormula(2, {{3}}), std::domain_error);
    CnfFormula f(3, {{1, -2}, {2, 3}});
    REQUIRE(f.widths() == std::vector<int>{2, 2});
    REQUIRE_FALSE(f.is_exact_kcnf(3));
}

TEST_CASE("satisfiability")
{
    REQUIRE_FALSE(is_satisfiable(CnfFormula(2, {{1, 2}, {-1}, {-2}})));
    REQUIRE(is_satisfiable(CnfFormula(0, {})));
    REQUIRE_FALSE(is_satisfiable(eight_block()));
    REQUIRE_FALSE(is_satisfiable(CnfFormula(1, {{}})));
    for (int t = 0; t < 200; ++t) {
        CnfFormula f = random_3cnf(4, 1 + t % 9, 500 + t);
        REQUIRE(is_satisfiable(f) == oracle::satisfiable(f));
    }
}

TEST_CASE("formula stability")
{
    // a satisfiable formula is stable by definition
    auto sat = formula_stability(CnfFormula(3, {{1, 2, 3}}));
    REQUIRE(sat.satisfiable);
    REQUIRE(sat.stable);

    // the 8-block is minimally unsatisfiable, hence not stable
    auto blk = formula_stability(eight_block());
    REQUIRE_FALSE(blk.satisfiable);
    REQUIRE_FALSE(blk.stable);
    REQUIRE(blk.per_clause.size() == 8);
    for (auto& [i, sub_sat] : blk.per_clause)
        REQUIRE(sub_sat);

    // two disjoint 8-blocks: unsatisfiable and stable
    std::vector<Clause> both = full_block(1, 2, 3);
    for (auto& c : full_block(4, 5, 6))
        both.push_back(c);
    auto two = formula_stability(CnfFormula(6, both));
    REQUIRE_FALSE(two.satisfiable);
    REQUIRE(two.stable);
}

TEST_CASE("exact-3CNF conversion shapes")
{
    // (l1 v l2 v l3 v l4): four chain clauses, both width-2 ends doubled
    CnfFormula four(4, {{1, 2, 3, 4}});
    CnfFormula out = to_exact_3cnf(four);
    REQUIRE(out.is_exact_kcnf(3));
    REQUIRE(out.num_clauses() == 6);

    // (x): quadrupled over two fresh variables
    CnfFormula unit(1, {{1}});
    CnfFormula padded = to_exact_3cnf(unit);
    REQUIRE(padded.num_clauses() == 4);
    REQUIRE(padded.num_vars() == 3);
    for (const auto& c : padded.clauses())
        REQUIRE(c[0] == 1);

    // exact-3CNF input comes back unchanged
    CnfFormula id = random_3cnf(4, 5, 11);
    REQUIRE(to_exact_3cnf(id).clauses() == id.clauses());

    // the empty clause becomes an unsatisfiable block
    CnfFormula empty_clause(0, {{}});
    CnfFormula blk = to_exact_3cnf(empty_clause);
    REQUIRE(blk.is_exact_kcnf(3));
    REQUIRE_FALSE(oracle::satisfiable(blk));
}

TEST_CASE("unsat padding")
{
    CnfFormula sat(3, {{1, 2, 3}});
    CnfFormula padded = unsat_padding(sat);
    REQUIRE(padded.num_clauses() == sat.num_clauses() + 8);
    REQUIRE_FALSE(oracle::satisfiable(padded));
    REQUIRE_FALSE(oracle::formula_stable(padded));

    CnfFormula blk = unsat_padding(eight_block());
    REQUIRE_FALSE(oracle::satisfiable(blk));
    REQUIRE(oracle::formula_stable(blk));

    REQUIRE_THROWS_AS(unsat_padding(CnfFormula(2, {{1, 2}})),
        std::domain_error);
}

TEST_CASE("sat-to-stable construction")
{
    CnfFormula sat(3, {{1, 2, 3}});
    // output variable counts outgrow the brute-force oracle; the DPLL
    // stability check is itself oracle-validated on this file's corpus
    REQUIRE(formula_stability(sat_to_stable_cnf(sat)).stable);

    CnfFormula out = sat_to_stable_cnf(eight_block());
    REQUIRE_FALSE(is_satisfiable(out));
    REQUIRE_FALSE(formula_stability(out).stable);
    REQUIRE(out.is_exact_kcnf(3));

    // pre-conversion intermediate has 3m+1 clauses; after conversion each
    // width-4 clause becomes 6 exact-3 clauses
    REQUIRE(sat_to_stable_cnf(sat).num_clauses() == 3 * 6 + 1);
}

TEST_CASE("or2 combination")
{
    CnfFormula a(3, {{1, 2, 3}, {-1, -2, -3}});
    CnfFormula b(3, {{1, 2, -3}, {-1, 2, 3}});
    // product shape: m * m' width-6 clauses before conversion; each width-6
    // clause then splits into 6 chain clauses whose width-2 ends double,
    // giving 8 exact-3 clauses per product clause
    CnfFormula out = or2_combine(a, b);
    REQUIRE(out.is_exact_kcnf(3));
    REQUIRE(out.num_clauses() == 4 * 8);

    // one satisfiable input makes the combination satisfiable hence stable
    REQUIRE(is_satisfiable(out));
    REQUIRE(formula_stability(out).stable);
}

TEST_CASE("random formulas are deterministic and well-formed")
{
    CnfFormula a = random_3cnf(4, 6, 77);
    CnfFormula b = random_3cnf(4, 6, 77);
    REQUIRE(a.clauses() == b.clauses());
    REQUIRE(a.num_clauses() == 6);
    REQUIRE(a.is_exact_kcnf(3));
    REQUIRE_THROWS_AS(random_3cnf(2, 3, 1), std::domain_error);
}

TEST_CASE("dimacs cnf round-trip")
{
    CnfFormula f = random_3cnf(5, 7, 3);
    CnfFormula back = parse_dimacs_cnf(write_dimacs_cnf(f));
    REQUIRE(back.num_vars() == f.num_vars());
    REQUIRE(back.clauses() == f.clauses());
    REQUIRE_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2\n"), ParseErrorCnf);
    REQUIRE_THROWS_AS(parse_dimacs_cnf("1 2 0\n"), ParseErrorCnf);
    // construction notes ride on comment lines
    CnfFormula padded = unsat_padding(random_3cnf(3, 2, 5));
    std::string text = write_dimacs_cnf(padded);
    REQUIRE(text.find("c origin") != std::string::npos);
}
