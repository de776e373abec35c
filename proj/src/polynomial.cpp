#include "cfc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "cfc/errors.hpp"

namespace cfc {

Polynomial Polynomial::constant(const mpq_class& c)
{
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::var(int x)
{
    Polynomial p;
    p.add_term({x}, 1);
    return p;
}

void Polynomial::add_term(Monomial m, const mpq_class& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms.try_emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

int Polynomial::degree() const
{
    return terms.empty() ? -1 : static_cast<int>(terms.rbegin()->first.size());
}

std::vector<int> Polynomial::variables() const
{
    std::vector<int> v;
    for (auto& [m, c] : terms)
        v.insert(v.end(), m.begin(), m.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (auto& [m, c] : o.terms)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (auto& [m, c] : o.terms)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c)
{
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, x] : terms)
        x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    Monomial u;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            u.clear();
            std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(u));
            r.add_term(u, ca * cb);
        }
    return r;
}

Polynomial Polynomial::substitute(int x, const Polynomial& p) const
{
    Polynomial keep, hit;
    for (auto& [m, c] : terms) {
        if (std::binary_search(m.begin(), m.end(), x)) {
            Monomial rest;
            for (int y : m)
                if (y != x)
                    rest.push_back(y);
            hit.add_term(std::move(rest), c);
        } else {
            keep.add_term(m, c);
        }
    }
    if (hit.is_zero())
        return keep;
    return keep + hit * p;
}

mpq_class Polynomial::eval(const std::vector<char>& value) const
{
    mpq_class s = 0;
    for (auto& [m, c] : terms) {
        bool on = true;
        for (int y : m)
            if (!value[y]) {
                on = false;
                break;
            }
        if (on)
            s += c;
    }
    return s;
}

int CspInstance::var_index(const std::string& name) const
{
    auto it = std::find(variables.begin(), variables.end(), name);
    return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

// ------------------------------------------------------------ basis selection

double reduction_bound(int nvars, int d)
{
    return std::pow(static_cast<double>(nvars), d) + 1;
}

std::vector<int> reduce_constraint_indices(const std::vector<Polynomial>& cs, int d)
{
    std::map<Monomial, int, GrLex> col;
    using Row = std::map<int, mpq_class>;
    std::map<int, Row> basis; // pivot column -> row with leading 1
    std::vector<int> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].degree() > d)
            throw InputError("constraint " + std::to_string(i) + " has degree " +
                             std::to_string(cs[i].degree()) + " > " + std::to_string(d));
        Row v;
        for (auto& [m, c] : cs[i].terms) {
            auto [it, fresh] = col.try_emplace(m, static_cast<int>(col.size()));
            v[it->second] = c;
        }
        while (!v.empty()) {
            auto lead = v.begin();
            auto b = basis.find(lead->first);
            if (b == basis.end())
                break;
            mpq_class f = lead->second;
            for (auto& [k, x] : b->second) {
                mpq_class nv = v[k] - f * x;
                if (nv == 0)
                    v.erase(k);
                else
                    v[k] = nv;
            }
        }
        if (v.empty())
            continue;
        mpq_class lead = v.begin()->second;
        for (auto& [k, x] : v)
            x /= lead;
        int piv = v.begin()->first;
        basis.emplace(piv, std::move(v));
        kept.push_back(static_cast<int>(i));
    }
    return kept;
}

CspInstance reduce_constraints(const CspInstance& csp, int d)
{
    CspInstance out;
    out.variables = csp.variables;
    for (int i : reduce_constraint_indices(csp.constraints, d))
        out.constraints.push_back(csp.constraints[i]);
    return out;
}

// ---------------------------------------------------------------- brute solve

namespace {

struct Compiled {
    std::vector<std::uint64_t> mask;
    std::vector<std::int64_t> coef; // fast path
    std::vector<mpz_class> big;     // fallback
    bool fast = true;

    bool zero_at(std::uint64_t a) const
    {
        if (fast) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < mask.size(); ++i)
                if ((mask[i] & a) == mask[i])
                    s += coef[i];
            return s == 0;
        }
        mpz_class s = 0;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if ((mask[i] & a) == mask[i])
                s += big[i];
        return s == 0;
    }
};

Compiled compile(const Polynomial& p)
{
    Compiled c;
    mpz_class l = 1;
    for (auto& [m, x] : p.terms)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_class total = 0;
    for (auto& [m, x] : p.terms) {
        std::uint64_t mk = 0;
        for (int y : m)
            mk |= std::uint64_t(1) << y;
        mpz_class v = x.get_num() * (l / x.get_den());
        c.mask.push_back(mk);
        c.big.push_back(v);
        total += abs(v);
    }
    mpz_class cap = mpz_class(1) << 62;
    c.fast = total < cap;
    if (c.fast)
        for (auto& v : c.big)
            c.coef.push_back(v.get_si());
    return c;
}

} // namespace

bool solve_csp_brute(const CspInstance& csp, const CspLimits& lim)
{
    int n = static_cast<int>(csp.variables.size());
    if (n > lim.max_vars || n > 63)
        throw ResourceLimit("solve_csp_brute: " + std::to_string(n) + " variables exceed guard " +
                            std::to_string(lim.max_vars));
    std::vector<std::vector<Compiled>> at(n);
    for (auto& p : csp.constraints) {
        auto vars = p.variables();
        for (int y : vars)
            if (y < 0 || y >= n)
                throw InputError("constraint names an unknown variable");
        Compiled c = compile(p);
        if (vars.empty()) {
            if (!c.zero_at(0))
                return false;
            continue;
        }
        at[vars.back()].push_back(std::move(c));
    }
    auto run = [&](auto&& self, int i, std::uint64_t a) -> bool {
        if (i == n)
            return true;
        for (int b = 0; b < 2; ++b) {
            std::uint64_t na = a | (std::uint64_t(b) << i);
            bool ok = true;
            for (auto& c : at[i])
                if (!c.zero_at(na)) {
                    ok = false;
                    break;
                }
            if (ok && self(self, i + 1, na))
                return true;
        }
        return false;
    };
    return run(run, 0, 0);
}

} // namespace cfc
