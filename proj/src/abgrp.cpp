#include "sliceforge/abgrp.hpp"

#include <algorithm>
#include <sstream>

namespace sliceforge::abgrp {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols; ++j)
            os << (j ? "," : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

IntMatrix hcat(const IntMatrix& x, const IntMatrix& y)
{
    if (x.rows != y.rows)
        throw std::invalid_argument("hcat: row mismatch");
    IntMatrix r(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j)
            r.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j)
            r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Int det(IntMatrix m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("det: not square");
    std::size_t n = m.rows;
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k) == 0)
                ++s;
            if (s == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfState {
    IntMatrix d, u, uinv, v, vinv;

    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t k = 0; k < d.cols; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
        for (std::size_t k = 0; k < uinv.rows; ++k) std::swap(uinv.at(k, i), uinv.at(k, j));
    }
    // row_i += c * row_j
    void row_addmul(std::size_t i, std::size_t j, const Int& c)
    {
        if (c == 0) return;
        for (std::size_t k = 0; k < d.cols; ++k) d.at(i, k) += c * d.at(j, k);
        for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) += c * u.at(j, k);
        for (std::size_t k = 0; k < uinv.rows; ++k) uinv.at(k, j) -= c * uinv.at(k, i);
    }
    void row_negate(std::size_t i)
    {
        for (std::size_t k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
        for (std::size_t k = 0; k < uinv.rows; ++k) uinv.at(k, i) = -uinv.at(k, i);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t k = 0; k < d.rows; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
        for (std::size_t k = 0; k < vinv.cols; ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
    }
    // col_i += c * col_j
    void col_addmul(std::size_t i, std::size_t j, const Int& c)
    {
        if (c == 0) return;
        for (std::size_t k = 0; k < d.rows; ++k) d.at(k, i) += c * d.at(k, j);
        for (std::size_t k = 0; k < v.rows; ++k) v.at(k, i) += c * v.at(k, j);
        for (std::size_t k = 0; k < vinv.cols; ++k) vinv.at(j, k) -= c * vinv.at(i, k);
    }
};

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IntMatrix a)
{
    SnfState s;
    s.d = std::move(a);
    s.u = IntMatrix::identity(s.d.rows);
    s.uinv = IntMatrix::identity(s.d.rows);
    s.v = IntMatrix::identity(s.d.cols);
    s.vinv = IntMatrix::identity(s.d.cols);

    const std::size_t nmin = std::min(s.d.rows, s.d.cols);
    std::size_t t = 0;
    while (t < nmin) {
        // locate a pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = s.d.rows, pj = s.d.cols;
        Int best = 0;
        for (std::size_t i = t; i < s.d.rows; ++i)
            for (std::size_t j = t; j < s.d.cols; ++j) {
                const Int& x = s.d.at(i, j);
                if (x == 0) continue;
                if (pi == s.d.rows || iabs(x) < best) {
                    best = iabs(x);
                    pi = i;
                    pj = j;
                }
            }
        if (pi == s.d.rows)
            break;  // trailing block is zero
        s.row_swap(t, pi);
        s.col_swap(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < s.d.rows; ++i) {
            if (s.d.at(i, t) == 0) continue;
            Int q = s.d.at(i, t) / s.d.at(t, t);
            s.row_addmul(i, t, -q);
            if (s.d.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < s.d.cols; ++j) {
            if (s.d.at(t, j) == 0) continue;
            Int q = s.d.at(t, j) / s.d.at(t, t);
            s.col_addmul(j, t, -q);
            if (s.d.at(t, j) != 0) clean = false;
        }
        if (!clean)
            continue;  // remainders became new, smaller pivot candidates

        // divisibility fixup: d_t must divide the whole trailing block
        bool fixed = false;
        for (std::size_t i = t + 1; i < s.d.rows && !fixed; ++i)
            for (std::size_t j = t + 1; j < s.d.cols && !fixed; ++j)
                if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                    s.row_addmul(t, i, 1);
                    fixed = true;
                }
        if (fixed)
            continue;

        if (s.d.at(t, t) < 0)
            s.row_negate(t);
        ++t;
    }

    SmithResult r;
    r.rank = t;
    r.u = std::move(s.u);
    r.uinv = std::move(s.uinv);
    r.d = std::move(s.d);
    r.v = std::move(s.v);
    r.vinv = std::move(s.vinv);
    return r;
}

IntMatrix int_kernel_basis(const IntMatrix& m)
{
    SmithResult s = smith_normal_form(m);
    const std::size_t n = m.cols;
    IntMatrix k(n, n - s.rank);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            k.at(i, j - s.rank) = s.v.at(i, j);
    return k;
}

IntMatrix lattice_column_basis(const IntMatrix& l)
{
    SmithResult s = smith_normal_form(l);
    // span(l) = span(uinv * d); the nonzero columns of uinv*d are independent
    IntMatrix b(l.rows, s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < l.rows; ++i)
            b.at(i, j) = s.uinv.at(i, j) * s.d.at(j, j);
    return b;
}

IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& m)
{
    if (basis.rows != m.rows)
        throw std::invalid_argument("solve_in_lattice: row mismatch");
    SmithResult s = smith_normal_form(basis);
    IntMatrix um = mul(s.u, m);
    IntMatrix x(basis.cols, m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
        IntMatrix y(basis.cols, 1);
        for (std::size_t i = 0; i < basis.rows; ++i) {
            const Int& rhs = um.at(i, c);
            if (i < s.rank) {
                if (rhs % s.d.at(i, i) != 0)
                    throw std::runtime_error("solve_in_lattice: column not in lattice");
                y.at(i, 0) = rhs / s.d.at(i, i);
            } else if (rhs != 0) {
                throw std::runtime_error("solve_in_lattice: column not in lattice");
            }
        }
        IntMatrix xc = mul(s.v, y);
        for (std::size_t i = 0; i < basis.cols; ++i)
            x.at(i, c) = xc.at(i, 0);
    }
    return x;
}

// ---------------------------------------------------------------------------
// F_2

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool F2Matrix::is_zero() const
{
    for (auto x : a)
        if (x)
            return false;
    return true;
}

std::string F2Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols; ++j)
            os << (j ? "," : "") << int(at(i, j));
    }
    os << "]";
    return os.str();
}

F2Matrix f2_mul(const F2Matrix& x, const F2Matrix& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("f2_mul: dimension mismatch");
    F2Matrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k)
            if (x.at(i, k))
                for (std::size_t j = 0; j < y.cols; ++j)
                    r.at(i, j) ^= y.at(k, j);
    return r;
}

F2Matrix f2_add(const F2Matrix& x, const F2Matrix& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("f2_add: dimension mismatch");
    F2Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        r.a[i] ^= y.a[i];
    return r;
}

F2Matrix f2_vcat(const F2Matrix& x, const F2Matrix& y)
{
    if (x.cols != y.cols)
        throw std::invalid_argument("f2_vcat: column mismatch");
    F2Matrix r(x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + static_cast<long>(x.a.size()));
    return r;
}

F2Matrix f2_hcat(const F2Matrix& x, const F2Matrix& y)
{
    if (x.rows != y.rows)
        throw std::invalid_argument("f2_hcat: row mismatch");
    F2Matrix r(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j)
            r.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j)
            r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

std::size_t f2_rank(F2Matrix m)
{
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m.cols && rank < m.rows; ++j) {
        std::size_t piv = rank;
        while (piv < m.rows && !m.at(piv, j))
            ++piv;
        if (piv == m.rows)
            continue;
        for (std::size_t k = 0; k < m.cols; ++k)
            std::swap(m.at(rank, k), m.at(piv, k));
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != rank && m.at(i, j))
                for (std::size_t k = 0; k < m.cols; ++k)
                    m.at(i, k) ^= m.at(rank, k);
        ++rank;
    }
    return rank;
}

F2KerIm f2_kernel_image(const F2Matrix& m)
{
    // column-reduce a copy, tracking the column operations
    F2Matrix w = m;
    F2Matrix ops = F2Matrix::identity(m.cols);
    std::size_t lead = 0;
    for (std::size_t i = 0; i < w.rows && lead < w.cols; ++i) {
        std::size_t piv = lead;
        while (piv < w.cols && !w.at(i, piv))
            ++piv;
        if (piv == w.cols)
            continue;
        for (std::size_t r = 0; r < w.rows; ++r)
            std::swap(w.at(r, lead), w.at(r, piv));
        for (std::size_t r = 0; r < ops.rows; ++r)
            std::swap(ops.at(r, lead), ops.at(r, piv));
        for (std::size_t c = 0; c < w.cols; ++c)
            if (c != lead && w.at(i, c)) {
                for (std::size_t r = 0; r < w.rows; ++r)
                    w.at(r, c) ^= w.at(r, lead);
                for (std::size_t r = 0; r < ops.rows; ++r)
                    ops.at(r, c) ^= ops.at(r, lead);
            }
        ++lead;
    }
    F2KerIm res;
    res.image = F2Matrix(m.rows, lead);
    for (std::size_t j = 0; j < lead; ++j)
        for (std::size_t i = 0; i < m.rows; ++i)
            res.image.at(i, j) = w.at(i, j);
    res.kernel = F2Matrix(m.cols, m.cols - lead);
    for (std::size_t j = lead; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.cols; ++i)
            res.kernel.at(i, j - lead) = ops.at(i, j);
    return res;
}

std::size_t f2_quotient_dim(const F2Matrix& ker, const F2Matrix& im)
{
    if (im.cols == 0)
        return f2_rank(ker);
    if (ker.rows != im.rows)
        throw std::invalid_argument("f2_quotient_dim: row mismatch");
    return f2_rank(ker) - f2_rank(im);
}

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup FgAbGroup::free_group(std::size_t r, std::vector<std::string> names)
{
    return FgAbGroup(std::vector<Int>(r, 0), std::move(names));
}

FgAbGroup FgAbGroup::cyclic(const Int& d, std::string name)
{
    std::vector<std::string> names;
    if (!name.empty())
        names.push_back(std::move(name));
    return FgAbGroup({d}, std::move(names));
}

FgAbGroup FgAbGroup::elementary_2(std::size_t k, std::vector<std::string> names)
{
    return FgAbGroup(std::vector<Int>(k, 2), std::move(names));
}

bool FgAbGroup::is_trivial() const
{
    for (const auto& d : rel)
        if (d != 1)
            return false;
    return true;
}

std::size_t FgAbGroup::free_rank() const
{
    std::size_t r = 0;
    for (const auto& d : rel)
        if (d == 0)
            ++r;
    return r;
}

std::vector<Int> FgAbGroup::invariant_factors() const
{
    std::vector<Int> tors;
    for (const auto& d : rel)
        if (d > 1)
            tors.push_back(d);
    std::sort(tors.begin(), tors.end());
    // generator relations here are always diagonal, so only the chain
    // condition may fail; fix it pairwise via gcd/lcm
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < tors.size(); ++i)
            if (tors[i + 1] % tors[i] != 0) {
                Int g = gcd(tors[i], tors[i + 1]);
                Int l = tors[i] / g * tors[i + 1];
                tors[i] = g;
                tors[i + 1] = l;
                changed = true;
            }
        if (changed)
            std::sort(tors.begin(), tors.end());
    }
    while (!tors.empty() && tors.front() == 1)
        tors.erase(tors.begin());
    return tors;
}

std::optional<Int> FgAbGroup::order() const
{
    if (free_rank() > 0)
        return std::nullopt;
    Int n = 1;
    for (const auto& d : rel)
        if (d > 1)
            n *= d;
    return n;
}

std::string FgAbGroup::label(std::size_t i) const
{
    if (i < labels.size() && !labels[i].empty())
        return labels[i];
    return "g" + std::to_string(i);
}

std::string FgAbGroup::to_string() const
{
    std::size_t r = free_rank();
    std::vector<Int> tors = invariant_factors();
    if (r == 0 && tors.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (r == 1) {
        os << "Z";
        first = false;
    } else if (r > 1) {
        os << "Z^" << r;
        first = false;
    }
    for (const auto& d : tors) {
        os << (first ? "" : " + ") << "Z/" << d.str();
        first = false;
    }
    return os.str();
}

bool FgAbGroup::same_normal_form(const FgAbGroup& o) const
{
    return free_rank() == o.free_rank() && invariant_factors() == o.invariant_factors();
}

FgAbGroup direct_sum(const FgAbGroup& x, const FgAbGroup& y)
{
    FgAbGroup r = x;
    r.rel.insert(r.rel.end(), y.rel.begin(), y.rel.end());
    if (!x.labels.empty() || !y.labels.empty()) {
        r.labels.resize(x.rel.size());
        for (std::size_t i = 0; i < x.rel.size(); ++i)
            r.labels[i] = x.label(i);
        for (std::size_t i = 0; i < y.rel.size(); ++i)
            r.labels.push_back(y.label(i));
    }
    return r;
}

// ---------------------------------------------------------------------------
// GroupHom and homology

GroupHom::GroupHom(FgAbGroup d, FgAbGroup c, IntMatrix m)
    : dom(std::move(d)), cod(std::move(c)), mat(std::move(m))
{
    if (mat.rows != cod.gens() || mat.cols != dom.gens())
        throw std::invalid_argument("GroupHom: matrix shape mismatch");
}

GroupHom GroupHom::zero(FgAbGroup d, FgAbGroup c)
{
    IntMatrix m(c.gens(), d.gens());
    return GroupHom(std::move(d), std::move(c), std::move(m));
}

bool is_zero_in_group(const FgAbGroup& g, const std::vector<Int>& v)
{
    for (std::size_t i = 0; i < g.gens(); ++i) {
        if (g.rel[i] == 0) {
            if (v[i] != 0)
                return false;
        } else if (v[i] % g.rel[i] != 0) {
            return false;
        }
    }
    return true;
}

bool GroupHom::well_defined() const
{
    for (std::size_t j = 0; j < dom.gens(); ++j) {
        if (dom.rel[j] == 0)
            continue;
        std::vector<Int> v(cod.gens());
        for (std::size_t i = 0; i < cod.gens(); ++i)
            v[i] = dom.rel[j] * mat.at(i, j);
        if (!is_zero_in_group(cod, v))
            return false;
    }
    return true;
}

bool GroupHom::is_zero_map() const
{
    for (std::size_t j = 0; j < dom.gens(); ++j) {
        std::vector<Int> v(cod.gens());
        for (std::size_t i = 0; i < cod.gens(); ++i)
            v[i] = mat.at(i, j);
        if (!is_zero_in_group(cod, v))
            return false;
    }
    return true;
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    if (!f.cod.same_normal_form(g.dom) || f.cod.gens() != g.dom.gens())
        throw std::invalid_argument("compose: middle group mismatch");
    return GroupHom(f.dom, g.cod, mul(g.mat, f.mat));
}

namespace {

// columns d_i * e_i for the torsion generators of g
IntMatrix relation_columns(const FgAbGroup& g)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.gens(); ++i)
        if (g.rel[i] != 0)
            idx.push_back(i);
    IntMatrix r(g.gens(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        r.at(idx[j], j) = g.rel[idx[j]];
    return r;
}

std::string label_of_vector(const FgAbGroup& g, const std::vector<Int>& v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < g.gens(); ++i) {
        if (v[i] == 0)
            continue;
        if (!first)
            os << "+";
        if (v[i] != 1)
            os << v[i].str() << "*";
        os << g.label(i);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

HomologyResult homology_at(const GroupHom& f, const GroupHom& g)
{
    if (f.cod.gens() != g.dom.gens() || !f.cod.same_normal_form(g.dom))
        throw std::invalid_argument("homology_at: cod(f) != dom(g)");
    {
        IntMatrix gf = mul(g.mat, f.mat);
        for (std::size_t j = 0; j < gf.cols; ++j) {
            std::vector<Int> v(gf.rows);
            for (std::size_t i = 0; i < gf.rows; ++i)
                v[i] = gf.at(i, j);
            if (!is_zero_in_group(g.cod, v))
                throw CompositeNonZero("homology_at: g o f != 0");
        }
    }

    const std::size_t n = g.dom.gens();
    const IntMatrix rel_b = relation_columns(g.dom);
    const IntMatrix rel_c = relation_columns(g.cod);

    // kernel of the induced map: x with g(x) in the relation lattice of cod(g)
    IntMatrix w = hcat(g.mat, rel_c);
    IntMatrix kfull = int_kernel_basis(w);
    IntMatrix kx(n, kfull.cols);
    for (std::size_t j = 0; j < kfull.cols; ++j)
        for (std::size_t i = 0; i < n; ++i)
            kx.at(i, j) = kfull.at(i, j);
    IntMatrix ker_lattice = lattice_column_basis(hcat(kx, rel_b));

    HomologyResult out;
    if (ker_lattice.cols == 0) {
        out.group = FgAbGroup::trivial();
        out.reps = IntMatrix(n, 0);
        return out;
    }

    IntMatrix img = hcat(f.mat, rel_b);
    IntMatrix x = solve_in_lattice(ker_lattice, img);
    SmithResult s = smith_normal_form(x);

    // quotient Z^s / im(x): invariant factor d_i for i < rank, free beyond
    const std::size_t sdim = ker_lattice.cols;
    std::vector<std::size_t> free_idx, tors_idx;
    std::vector<Int> tors_val;
    for (std::size_t i = 0; i < sdim; ++i) {
        if (i < s.rank) {
            if (s.d.at(i, i) > 1) {
                tors_idx.push_back(i);
                tors_val.push_back(s.d.at(i, i));
            }
        } else {
            free_idx.push_back(i);
        }
    }

    std::vector<Int> rels;
    std::vector<std::string> names;
    out.reps = IntMatrix(n, free_idx.size() + tors_idx.size());
    std::size_t col = 0;
    auto emit = [&](std::size_t i, const Int& relval) {
        // representative: ker_lattice * (uinv column i), reduced mod dom relations
        std::vector<Int> rep(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            Int acc = 0;
            for (std::size_t k = 0; k < sdim; ++k)
                acc += ker_lattice.at(r, k) * s.uinv.at(k, i);
            rep[r] = acc;
        }
        for (std::size_t r = 0; r < n; ++r)
            if (g.dom.rel[r] != 0) {
                rep[r] %= g.dom.rel[r];
                if (rep[r] < 0)
                    rep[r] += g.dom.rel[r];
            }
        for (std::size_t r = 0; r < n; ++r)
            out.reps.at(r, col) = rep[r];
        rels.push_back(relval);
        names.push_back(label_of_vector(g.dom, rep));
        ++col;
    };
    for (std::size_t i : free_idx)
        emit(i, 0);
    for (std::size_t k = 0; k < tors_idx.size(); ++k)
        emit(tors_idx[k], tors_val[k]);

    out.group = FgAbGroup(std::move(rels), std::move(names));
    return out;
}

}  // namespace sliceforge::abgrp
