#include "sliceforge/witt_oracle.hpp"

#include <algorithm>
#include <optional>

namespace sliceforge::witt {

using gf::GF;

namespace {

// exhaustive isotropy search: nonzero v with sum diag_i v_i^2 = 0
std::optional<std::vector<int>> isotropic_vector(const GF& f, const std::vector<int>& diag)
{
    const std::size_t r = diag.size();
    if (r == 0)
        return std::nullopt;
    // per-coordinate value tables diag_i * x^2
    std::vector<std::vector<int>> val(r, std::vector<int>(f.q));
    for (std::size_t i = 0; i < r; ++i)
        for (int x = 0; x < f.q; ++x)
            val[i][x] = f.mul(diag[i], f.mul(x, x));
    std::vector<int> v(r, 0);
    for (;;) {
        // advance odometer
        std::size_t i = 0;
        while (i < r) {
            if (++v[i] < f.q)
                break;
            v[i] = 0;
            ++i;
        }
        if (i == r)
            return std::nullopt;
        int s = 0;
        for (std::size_t k = 0; k < r; ++k)
            s = f.add(s, val[k][v[k]]);
        if (s == 0)
            return v;
    }
}

// Gram matrix of the restriction of the diagonal form to span(basis)
std::vector<std::vector<int>> gram(const GF& f, const std::vector<int>& diag,
                                   const std::vector<std::vector<int>>& basis)
{
    std::size_t n = basis.size();
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            int acc = 0;
            for (std::size_t i = 0; i < diag.size(); ++i)
                acc = f.add(acc, f.mul(diag[i], f.mul(basis[s][i], basis[t][i])));
            g[s][t] = acc;
        }
    return g;
}

// diagonalize a symmetric Gram matrix over F_q (char != 2)
std::vector<int> diagonalize(const GF& f, std::vector<std::vector<int>> g)
{
    std::vector<int> out;
    std::size_t n = g.size();
    std::vector<bool> used(n, false);
    for (;;) {
        // find a live index with g_ss != 0; if all diagonal entries vanish,
        // mix two live indices with g_st != 0 (f(b_s + b_t) = 2 g_st != 0)
        std::size_t s = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i] && g[i][i] != 0) {
                s = i;
                break;
            }
        if (s == n) {
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!used[i] && !used[j] && g[i][j] != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n)
                break;  // restriction is zero on the remaining space
            // b_a := b_a + b_b
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j])
                    g[a][j] = f.add(g[a][j], g[b][j]);
            for (std::size_t i = 0; i < n; ++i)
                if (!used[i])
                    g[i][a] = f.add(g[i][a], g[i][b]);
            continue;
        }
        int pivot = g[s][s];
        out.push_back(pivot);
        used[s] = true;
        int pinv = f.inv(pivot);
        for (std::size_t t = 0; t < n; ++t) {
            if (used[t] || g[s][t] == 0)
                continue;
            int c = f.mul(g[s][t], pinv);  // b_t := b_t - c b_s
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j])
                    g[t][j] = f.sub(g[t][j], f.mul(c, g[s][j]));
            for (std::size_t i = 0; i < n; ++i)
                if (!used[i])
                    g[i][t] = f.sub(g[i][t], f.mul(c, g[i][s]));
        }
    }
    return out;
}

// split off the hyperbolic plane spanned by the isotropic v and a partner,
// returning a diagonalization of the orthogonal complement
std::vector<int> split_complement(const GF& f, const std::vector<int>& diag,
                                  const std::vector<int>& v)
{
    const std::size_t r = diag.size();
    // partner basis vector with B(v, e_j) = diag_j v_j != 0
    std::size_t j = r;
    for (std::size_t i = 0; i < r; ++i)
        if (v[i] != 0) {
            j = i;
            break;
        }
    std::vector<int> w(r, 0);
    w[j] = 1;
    // complement: B(x, v) = 0 and B(x, w) = 0
    std::vector<std::vector<int>> rows = {std::vector<int>(r), std::vector<int>(r)};
    for (std::size_t i = 0; i < r; ++i) {
        rows[0][i] = f.mul(diag[i], v[i]);
        rows[1][i] = f.mul(diag[i], w[i]);
    }
    // Gaussian elimination to a reduced echelon form
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < r && rank < 2; ++col) {
        std::size_t pr = rank;
        while (pr < 2 && rows[pr][col] == 0)
            ++pr;
        if (pr == 2)
            continue;
        std::swap(rows[rank], rows[pr]);
        int inv = f.inv(rows[rank][col]);
        for (std::size_t c = 0; c < r; ++c)
            rows[rank][c] = f.mul(rows[rank][c], inv);
        for (std::size_t other = 0; other < 2; ++other)
            if (other != rank && rows[other][col] != 0) {
                int c0 = rows[other][col];
                for (std::size_t c = 0; c < r; ++c)
                    rows[other][c] = f.sub(rows[other][c], f.mul(c0, rows[rank][c]));
            }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<std::vector<int>> basis;
    std::vector<bool> is_pivot(r, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < r; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<int> x(r, 0);
        x[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = f.neg(rows[k][free]);
        basis.push_back(x);
    }
    return diagonalize(f, gram(f, diag, basis));
}

std::vector<int> normalize_classes(const GF& f, std::vector<int> diag)
{
    int s = f.least_nonsquare();
    for (auto& a : diag)
        a = f.is_square(a) ? 1 : s;
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace

std::vector<int> anisotropic_kernel(const GF& f, std::vector<int> diagonal)
{
    for (;;) {
        if (diagonal.size() < 2)
            return normalize_classes(f, diagonal);
        auto v = isotropic_vector(f, diagonal);
        if (!v)
            return normalize_classes(f, diagonal);
        diagonal = split_complement(f, diagonal, *v);
    }
}

int WittOracle::class_of(const std::vector<int>& diagonal) const
{
    GF f(q);
    std::vector<int> k = anisotropic_kernel(f, diagonal);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].size() != k.size())
            continue;
        std::vector<int> test = k;
        for (int a : classes[i])
            test.push_back(f.neg(a));
        if (anisotropic_kernel(f, test).empty())
            return static_cast<int>(i);
    }
    throw std::runtime_error("witt oracle: class not found");
}

WittOracle::GWElt WittOracle::gw_of(const std::vector<int>& diagonal) const
{
    return {static_cast<long long>(diagonal.size()), class_of(diagonal)};
}

WittOracle::GWElt WittOracle::gw_mul(GWElt a, GWElt b) const
{
    return {a.rank * b.rank, mul[a.witt][b.witt]};
}

std::size_t WittOracle::gw_torsion_order() const
{
    // torsion of GW = classes of even anisotropic rank (rank-zero GW elements)
    std::size_t n = 0;
    for (const auto& c : classes)
        if (c.size() % 2 == 0)
            ++n;
    return n;
}

WittOracle brute_force_witt(int q, int bound)
{
    if (q > bound)
        throw BoundExceeded("witt oracle: q = " + std::to_string(q) + " exceeds bound " +
                            std::to_string(bound));
    GF f(q);
    WittOracle w;
    w.q = q;
    int s = f.least_nonsquare();

    // enumerate diagonal forms with entries in {1, s} up to rank 4
    w.classes.push_back({});  // zero class
    for (int rank = 1; rank <= 4; ++rank)
        for (int nonsquares = 0; nonsquares <= rank; ++nonsquares) {
            std::vector<int> diag(rank, 1);
            for (int i = 0; i < nonsquares; ++i)
                diag[i] = s;
            std::vector<int> k = anisotropic_kernel(f, diag);
            bool found = false;
            for (const auto& c : w.classes) {
                if (c.size() != k.size())
                    continue;
                std::vector<int> test = k;
                for (int a : c)
                    test.push_back(f.neg(a));
                if (anisotropic_kernel(f, test).empty()) {
                    found = true;
                    break;
                }
            }
            if (!found)
                w.classes.push_back(k);
        }

    const std::size_t n = w.classes.size();
    w.add.assign(n, std::vector<int>(n, 0));
    w.mul.assign(n, std::vector<int>(n, 0));
    w.neg.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> m = w.classes[i];
        for (auto& a : m)
            a = f.neg(a);
        w.neg[i] = w.class_of(m);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> sum = w.classes[i];
            sum.insert(sum.end(), w.classes[j].begin(), w.classes[j].end());
            w.add[i][j] = w.class_of(sum);
            std::vector<int> prod;
            for (int a : w.classes[i])
                for (int b : w.classes[j])
                    prod.push_back(f.mul(a, b));
            w.mul[i][j] = w.class_of(prod);
        }
    }

    // group shape from element orders under addition
    std::size_t max_order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ord = 1;
        int x = static_cast<int>(i);
        while (x != 0) {
            x = w.add[x][i];
            ++ord;
        }
        max_order = std::max(max_order, ord);
    }
    if (max_order == n) {
        w.witt_group = abgrp::FgAbGroup::cyclic(abgrp::Int(n));
    } else {
        // abelian of exponent max_order; for the supported q this is (Z/2)^2
        std::vector<abgrp::Int> rels;
        std::size_t covered = 1;
        while (covered < n) {
            rels.push_back(abgrp::Int(max_order));
            covered *= max_order;
        }
        w.witt_group = abgrp::FgAbGroup(std::move(rels));
    }
    return w;
}

}  // namespace sliceforge::witt
