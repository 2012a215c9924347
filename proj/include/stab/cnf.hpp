#pragma once

#include "stab/budget.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stab {

// Clause = set of distinct literals in DIMACS convention: literal v > 0 is
// the variable v, -v its negation. No variable appears twice in a clause.
using Clause = std::vector<int>;

class CnfFormula {
public:
    CnfFormula() = default;

    CnfFormula(int num_vars, std::vector<Clause> clauses)
        : num_vars_(num_vars), clauses_(std::move(clauses))
    {
        if (num_vars_ < 0)
            throw std::domain_error("CnfFormula: negative variable count");
        for (auto& c : clauses_)
            normalize_clause(c);
    }

    int num_vars() const { return num_vars_; }
    int num_clauses() const { return int(clauses_.size()); }
    const std::vector<Clause>& clauses() const { return clauses_; }
    const Clause& clause(int i) const { return clauses_.at(i); }

    std::vector<int> widths() const
    {
        std::vector<int> w;
        for (const auto& c : clauses_)
            w.push_back(int(c.size()));
        return w;
    }

    bool is_exact_kcnf(int k) const
    {
        for (const auto& c : clauses_)
            if (int(c.size()) != k)
                return false;
        return true;
    }

    CnfFormula without_clause(int i) const
    {
        CnfFormula out = *this;
        out.clauses_.erase(out.clauses_.begin() + i);
        out.clause_notes_.clear();
        return out;
    }

    // Optional provenance note per clause, surfaced as DIMACS comments.
    void set_clause_note(int i, std::string note)
    {
        clause_notes_.resize(clauses_.size());
        clause_notes_.at(i) = std::move(note);
    }
    const std::vector<std::string>& clause_notes() const
    {
        return clause_notes_;
    }

private:
    void normalize_clause(Clause& c)
    {
        std::sort(c.begin(), c.end(),
            [](int a, int b) { return std::abs(a) != std::abs(b)
                    ? std::abs(a) < std::abs(b)
                    : a > b; });
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0 || std::abs(c[i]) > num_vars_)
                throw std::domain_error(
                    "CnfFormula: literal out of range: " + std::to_string(c[i]));
            if (i > 0 && std::abs(c[i]) == std::abs(c[i - 1]))
                throw std::domain_error("CnfFormula: variable "
                    + std::to_string(std::abs(c[i]))
                    + " appears twice in a clause");
        }
    }

    int num_vars_ = 0;
    std::vector<Clause> clauses_;
    std::vector<std::string> clause_notes_;
};

namespace detail {

// Plain DPLL with unit propagation. assignment: 0 unset, +1 true, -1 false.
inline bool dpll(const std::vector<Clause>& clauses, std::vector<int8_t>& assign,
    BudgetClock& clock)
{
    clock.tick();
    // unit propagation
    std::vector<int> trail;
    while (true) {
        int unit = 0;
        bool conflict = false;
        for (const auto& c : clauses) {
            int unassigned = 0, last = 0;
            bool sat = false;
            for (int lit : c) {
                int val = assign[std::abs(lit)];
                if (val == 0) {
                    ++unassigned;
                    last = lit;
                } else if ((lit > 0) == (val > 0)) {
                    sat = true;
                    break;
                }
            }
            if (sat)
                continue;
            if (unassigned == 0) {
                conflict = true;
                break;
            }
            if (unassigned == 1) {
                unit = last;
                break;
            }
        }
        if (conflict) {
            for (int v : trail)
                assign[v] = 0;
            return false;
        }
        if (unit == 0)
            break;
        assign[std::abs(unit)] = unit > 0 ? 1 : -1;
        trail.push_back(std::abs(unit));
    }

    // pick lowest unassigned variable occurring in an unsatisfied clause
    int branch_var = 0;
    bool all_sat = true;
    for (const auto& c : clauses) {
        bool sat = false;
        int lowest = 0;
        for (int lit : c) {
            int val = assign[std::abs(lit)];
            if (val == 0) {
                if (lowest == 0 || std::abs(lit) < lowest)
                    lowest = std::abs(lit);
            } else if ((lit > 0) == (val > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            all_sat = false;
            if (lowest != 0 && (branch_var == 0 || lowest < branch_var))
                branch_var = lowest;
        }
    }
    if (all_sat)
        return true;

    for (int8_t val : {int8_t{1}, int8_t{-1}}) {
        assign[branch_var] = val;
        if (dpll(clauses, assign, clock))
            return true;
    }
    assign[branch_var] = 0;
    for (int v : trail)
        assign[v] = 0;
    return false;
}

} // namespace detail

inline bool is_satisfiable(const CnfFormula& f, const Budget& budget = {})
{
    BudgetClock clock(budget, "sat query (" + std::to_string(f.num_vars())
            + " vars, " + std::to_string(f.num_clauses()) + " clauses)");
    std::vector<int8_t> assign(f.num_vars() + 1, 0);
    return detail::dpll(f.clauses(), assign, clock);
}

struct FormulaStability {
    bool satisfiable = false;
    // (clause index, is the 1-clause-deleted subformula satisfiable?)
    std::vector<std::pair<int, bool>> per_clause;
    bool stable = false;
};

// A formula is stable when deleting any single clause cannot change its
// satisfiability status.
inline FormulaStability formula_stability(const CnfFormula& f,
    const Budget& budget = {})
{
    FormulaStability r;
    r.satisfiable = is_satisfiable(f, budget);
    if (r.satisfiable) {
        r.stable = true;
        return r;
    }
    r.stable = true;
    for (int i = 0; i < f.num_clauses(); ++i) {
        bool sat = is_satisfiable(f.without_clause(i), budget);
        r.per_clause.push_back({i, sat});
        if (sat)
            r.stable = false;
    }
    return r;
}

// Rewrites an arbitrary CNF into exact-3CNF, preserving satisfiability and
// stability in both directions. Long clauses are chain-split with fresh y
// variables, width-2 clauses doubled with a fresh z, width-1 clauses
// quadrupled with fresh z1, z2. A width-0 clause becomes the full 8-clause
// block over three fresh variables.
inline CnfFormula to_exact_3cnf(const CnfFormula& f)
{
    int next = f.num_vars() + 1;
    std::vector<Clause> split;
    for (const auto& c : f.clauses()) {
        int k = int(c.size());
        if (k <= 3) {
            split.push_back(c);
            continue;
        }
        int first_y = next;
        next += k - 1;
        split.push_back({c[0], first_y});
        for (int i = 1; i + 1 < k; ++i)
            split.push_back({-(first_y + i - 1), c[i], first_y + i});
        split.push_back({-(first_y + k - 2), c[k - 1]});
    }

    std::vector<Clause> out;
    for (const auto& c : split) {
        switch (c.size()) {
        case 3:
            out.push_back(c);
            break;
        case 2: {
            int z = next++;
            out.push_back({c[0], c[1], z});
            out.push_back({c[0], c[1], -z});
            break;
        }
        case 1: {
            int z1 = next++, z2 = next++;
            out.push_back({c[0], z1, z2});
            out.push_back({c[0], z1, -z2});
            out.push_back({c[0], -z1, z2});
            out.push_back({c[0], -z1, -z2});
            break;
        }
        default: { // empty clause
            int x = next++, y = next++, z = next++;
            for (int sx : {1, -1})
                for (int sy : {1, -1})
                    for (int sz : {1, -1})
                        out.push_back({sx * x, sy * y, sz * z});
            break;
        }
        }
    }
    return CnfFormula(next - 1, std::move(out));
}

// The full width-3 clause block over variables (x, y, z); unsatisfiable and
// minimally so.
inline std::vector<Clause> full_block(int x, int y, int z)
{
    std::vector<Clause> out;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1})
                out.push_back({sx * x, sy * y, sz * z});
    return out;
}

inline void require_exact_3cnf(const CnfFormula& f, const char* op)
{
    if (!f.is_exact_kcnf(3))
        throw std::domain_error(std::string(op) + ": input is not exact-3CNF");
}

// Appends the 8-clause block over three fresh variables. The output is
// always unsatisfiable, and it is stable exactly if the input was
// unsatisfiable.
inline CnfFormula unsat_padding(const CnfFormula& f)
{
    require_exact_3cnf(f, "unsat_padding");
    std::vector<Clause> out = f.clauses();
    int x = f.num_vars() + 1;
    for (auto& c : full_block(x, x + 1, x + 2))
        out.push_back(std::move(c));
    CnfFormula res(f.num_vars() + 3, std::move(out));
    for (int i = f.num_clauses(); i < res.num_clauses(); ++i)
        res.set_clause_note(i, "padding-block");
    return res;
}

// Builds (C_i v y) ^ (C_i' v y') ^ (C_i'' v y'') over primed variable copies
// plus the guard clause (~y v ~y' v ~y''), then lands in exact-3CNF. The
// result is stable exactly if the input is satisfiable.
inline CnfFormula sat_to_stable_cnf(const CnfFormula& f)
{
    require_exact_3cnf(f, "sat_to_stable_cnf");
    int n = f.num_vars();
    int y = 3 * n + 1, y1 = 3 * n + 2, y2 = 3 * n + 3;
    std::vector<Clause> out;
    for (const auto& c : f.clauses()) {
        Clause a = c, b, d;
        for (int lit : c) {
            b.push_back(lit > 0 ? lit + n : lit - n);
            d.push_back(lit > 0 ? lit + 2 * n : lit - 2 * n);
        }
        a.push_back(y);
        b.push_back(y1);
        d.push_back(y2);
        out.push_back(a);
        out.push_back(b);
        out.push_back(d);
    }
    out.push_back({-y, -y1, -y2});
    return to_exact_3cnf(CnfFormula(3 * n + 3, std::move(out)));
}

// Product construction: one width-6 clause (C_i v C_j') per clause pair,
// with the second formula's variables renamed apart; equivalent to the
// disjunction of the inputs, and stable exactly if either input is stable.
// Lands in exact-3CNF.
inline CnfFormula or2_combine(const CnfFormula& f, const CnfFormula& g)
{
    require_exact_3cnf(f, "or2_combine");
    require_exact_3cnf(g, "or2_combine");
    int n = f.num_vars();
    std::vector<Clause> out;
    for (const auto& ci : f.clauses()) {
        for (const auto& cj : g.clauses()) {
            Clause c = ci;
            for (int lit : cj)
                c.push_back(lit > 0 ? lit + n : lit - n);
            out.push_back(std::move(c));
        }
    }
    return to_exact_3cnf(CnfFormula(n + g.num_vars(), std::move(out)));
}

// Uniform exact-3CNF clauses, deterministic per seed.
inline CnfFormula random_3cnf(int num_vars, int num_clauses, uint64_t seed)
{
    if (num_vars < 3)
        throw std::domain_error("random_3cnf: need at least 3 variables");
    std::mt19937_64 rng(seed);
    std::vector<Clause> clauses;
    for (int i = 0; i < num_clauses; ++i) {
        std::vector<int> vars(num_vars);
        for (int v = 0; v < num_vars; ++v)
            vars[v] = v + 1;
        Clause c;
        for (int j = 0; j < 3; ++j) {
            size_t pick = size_t(rng() % (vars.size() - j));
            std::swap(vars[pick], vars[vars.size() - 1 - j]);
            int var = vars[vars.size() - 1 - j];
            c.push_back((rng() & 1) ? var : -var);
        }
        clauses.push_back(std::move(c));
    }
    return CnfFormula(num_vars, std::move(clauses));
}

// ---- DIMACS CNF ("p cnf n m") ----

class ParseErrorCnf : public std::runtime_error {
public:
    ParseErrorCnf(const std::string& what, int line)
        : std::runtime_error(
            what + " (line " + std::to_string(line) + ")")
    {
    }
};

inline CnfFormula parse_dimacs_cnf(std::istream& in)
{
    std::string line;
    int lineno = 0;
    bool got_header = false;
    int n = 0, m = 0;
    std::vector<Clause> clauses;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag))
            continue;
        if (tag == "c")
            continue;
        if (tag == "p") {
            std::string fmt;
            if (got_header || !(iss >> fmt >> n >> m) || fmt != "cnf" || n < 0
                || m < 0)
                throw ParseErrorCnf("malformed header", lineno);
            got_header = true;
            continue;
        }
        if (!got_header)
            throw ParseErrorCnf("clause before header", lineno);
        Clause c;
        int lit = std::stoi(tag);
        while (lit != 0) {
            c.push_back(lit);
            if (!(iss >> lit))
                throw ParseErrorCnf("clause not terminated by 0", lineno);
        }
        clauses.push_back(std::move(c));
    }
    if (!got_header)
        throw ParseErrorCnf("missing header", lineno + 1);
    if (int(clauses.size()) != m)
        throw ParseErrorCnf("header declares " + std::to_string(m)
                + " clauses but " + std::to_string(clauses.size())
                + " present",
            lineno + 1);
    return CnfFormula(n, std::move(clauses));
}

inline CnfFormula parse_dimacs_cnf(const std::string& text)
{
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

inline void write_dimacs_cnf(std::ostream& out, const CnfFormula& f)
{
    out << "p cnf " << f.num_vars() << " " << f.num_clauses() << "\n";
    const auto& notes = f.clause_notes();
    for (int i = 0; i < f.num_clauses(); ++i) {
        if (i < int(notes.size()) && !notes[i].empty())
            out << "c origin " << i << " " << notes[i] << "\n";
        for (int lit : f.clause(i))
            out << lit << " ";
        out << "0\n";
    }
}

inline std::string write_dimacs_cnf(const CnfFormula& f)
{
    std::ostringstream out;
    write_dimacs_cnf(out, f);
    return out.str();
}

} // namespace stab
