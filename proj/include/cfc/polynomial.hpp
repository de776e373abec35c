#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace cfc {

using Monomial = std::vector<int>; // sorted variable ids, each at most once

struct GrLex {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

// multilinear polynomial over {0,1} variables with exact rational coefficients;
// products apply x^2 = x
struct Polynomial {
    std::map<Monomial, mpq_class, GrLex> terms;

    static Polynomial constant(const mpq_class& c);
    static Polynomial var(int x);

    bool is_zero() const { return terms.empty(); }
    int degree() const; // -1 for the zero polynomial
    std::vector<int> variables() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const mpq_class& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& o) const { return terms == o.terms; }

    Polynomial substitute(int x, const Polynomial& p) const;
    mpq_class eval(const std::vector<char>& value) const;

    void add_term(Monomial m, const mpq_class& c);
};

struct CspInstance {
    std::vector<std::string> variables;
    std::vector<Polynomial> constraints; // each asserts value 0

    int var_index(const std::string& name) const; // -1 if absent
};

// indices of a basis of the constraints' coefficient vectors, chosen greedily in
// input order; throws InputError if some constraint exceeds degree d
std::vector<int> reduce_constraint_indices(const std::vector<Polynomial>& cs, int d);
CspInstance reduce_constraints(const CspInstance& csp, int d);

// n^d + 1, the guaranteed ceiling on a reduced list
double reduction_bound(int nvars, int d);

struct CspLimits {
    int max_vars = 24;
};
bool solve_csp_brute(const CspInstance& csp, const CspLimits& lim = {});

} // namespace cfc
