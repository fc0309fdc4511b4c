#include "sliceforge/mwk.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sliceforge::mwk {

// ---------------------------------------------------------------------------
// expressions

bool MWExpression::homogeneous(int* degree_out) const
{
    bool have = false;
    int deg = 0;
    for (const auto& t : terms) {
        if (t.coef == 0)
            continue;
        if (!have) {
            deg = t.degree();
            have = true;
        } else if (t.degree() != deg) {
            return false;
        }
    }
    if (degree_out)
        *degree_out = have ? deg : 0;
    return true;
}

std::map<int, MWExpression> MWExpression::graded() const
{
    std::map<int, MWExpression> parts;
    for (const auto& t : terms)
        if (t.coef != 0)
            parts[t.degree()].terms.push_back(t);
    return parts;
}

MWExpression mw_mul(const MWExpression& a, const MWExpression& b)
{
    MWExpression r;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            MWMonomial m;
            m.coef = x.coef * y.coef;
            m.eta = x.eta + y.eta;  // eta is central by relation (3)
            m.units = x.units;
            m.units.insert(m.units.end(), y.units.begin(), y.units.end());
            r.terms.push_back(std::move(m));
        }
    return r;
}

MWExpression mw_add(const MWExpression& a, const MWExpression& b)
{
    MWExpression r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

MWExpression mw_scale(const Int& c, const MWExpression& a)
{
    MWExpression r = a;
    for (auto& t : r.terms)
        t.coef *= c;
    return r;
}

MWExpression mw_unit_symbol(int unit)
{
    MWMonomial m;
    m.coef = 1;
    m.units = {unit};
    return MWExpression{{m}};
}

MWExpression mw_eta()
{
    MWMonomial m;
    m.coef = 1;
    m.eta = 1;
    return MWExpression{{m}};
}

MWExpression mw_int(const Int& n)
{
    MWMonomial m;
    m.coef = n;
    return MWExpression{{m}};
}

int canonical_unit(const FieldModel& f, long long raw, std::size_t pos)
{
    switch (f.kind) {
    case FieldKind::ComplexLike:
        if (raw == 0)
            throw UnknownUnit(pos, "0 is not a unit");
        return 1;
    case FieldKind::RealLike:
        if (raw == 0)
            throw UnknownUnit(pos, "0 is not a unit");
        return raw > 0 ? 1 : -1;
    case FieldKind::FiniteOdd: {
        int v = f.fq->from_integer(raw);
        if (v == 0)
            throw UnknownUnit(pos, std::to_string(raw) + " is not a unit class of " + f.name());
        return v;
    }
    }
    throw UnknownUnit(pos, "bad model");
}

static int minus_one_unit(const FieldModel& f)
{
    switch (f.kind) {
    case FieldKind::ComplexLike: return 1;
    case FieldKind::RealLike: return -1;
    case FieldKind::FiniteOdd: return f.fq->neg(1);
    }
    return 1;
}

MWExpression mw_form(const FieldModel& f, int unit)
{
    (void)f;
    return mw_add(mw_int(1), mw_mul(mw_eta(), mw_unit_symbol(unit)));
}

MWExpression mw_eps(const FieldModel& f)
{
    return mw_scale(-1, mw_add(mw_int(1), mw_mul(mw_unit_symbol(minus_one_unit(f)), mw_eta())));
}

// ---------------------------------------------------------------------------
// parser
//
// expr   := ['-'] term (('+'|'-') term)*
// term   := [integer] factor*
// factor := '[' unit ']' | 'eta' | 'eps' | '<' unit '>' | '(' expr ')'
// unit   := integer | 'u'

namespace {

struct Parser {
    const std::string& src;
    const FieldModel& model;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    bool accept(char c)
    {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(pos, std::string("expected '") + c + "' at byte " + std::to_string(pos));
    }
    bool keyword(const char* kw)
    {
        skip_ws();
        std::size_t n = std::string_view(kw).size();
        if (src.compare(pos, n, kw) == 0) {
            // must not be followed by an identifier character
            if (pos + n < src.size() && std::isalpha(static_cast<unsigned char>(src[pos + n])))
                return false;
            pos += n;
            return true;
        }
        return false;
    }
    bool at_integer()
    {
        skip_ws();
        std::size_t i = pos;
        if (i < src.size() && (src[i] == '+' || src[i] == '-'))
            ++i;
        return i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]));
    }
    long long integer()
    {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
            neg = src[pos] == '-';
            ++pos;
        }
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError(start, "expected integer at byte " + std::to_string(start));
        long long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
    int unit()
    {
        skip_ws();
        std::size_t upos = pos;
        if (keyword("u")) {
            if (model.kind == FieldKind::FiniteOdd)
                return model.fq->least_nonsquare();
            if (model.kind == FieldKind::RealLike)
                return -1;
            return 1;
        }
        return canonical_unit(model, integer(), upos);
    }

    MWExpression factor()
    {
        skip_ws();
        std::size_t start = pos;
        if (accept('[')) {
            int v = unit();
            expect(']');
            return mw_unit_symbol(v);
        }
        if (accept('<')) {
            int v = unit();
            expect('>');
            return mw_form(model, v);
        }
        if (accept('(')) {
            MWExpression e = expr();
            expect(')');
            return e;
        }
        if (keyword("eta"))
            return mw_eta();
        if (keyword("eps"))
            return mw_eps(model);
        throw ParseError(start, "expected factor at byte " + std::to_string(start));
    }

    bool at_factor()
    {
        skip_ws();
        if (pos >= src.size())
            return false;
        char c = src[pos];
        return c == '[' || c == '<' || c == '(' ||
               src.compare(pos, 3, "eta") == 0 || src.compare(pos, 3, "eps") == 0;
    }

    MWExpression term()
    {
        MWExpression acc = mw_int(1);
        bool have = false;
        if (at_integer()) {
            acc = mw_int(integer());
            have = true;
        }
        while (at_factor()) {
            acc = mw_mul(acc, factor());
            have = true;
        }
        if (!have)
            throw ParseError(pos, "expected term at byte " + std::to_string(pos));
        return acc;
    }

    MWExpression expr()
    {
        skip_ws();
        bool neg = false;
        if (peek('-')) {
            ++pos;
            neg = true;
        }
        MWExpression acc = term();
        if (neg)
            acc = mw_scale(-1, acc);
        for (;;) {
            if (accept('+')) {
                acc = mw_add(acc, term());
            } else if (accept('-')) {
                acc = mw_add(acc, mw_scale(-1, term()));
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

MWExpression parse_expression(const std::string& src, const FieldModel& f)
{
    Parser p{src, f};
    MWExpression e = p.expr();
    p.skip_ws();
    if (p.pos != src.size())
        throw ParseError(p.pos, "trailing input at byte " + std::to_string(p.pos));
    return e;
}

// ---------------------------------------------------------------------------
// Witt-ring coordinates
//
//   FiniteOdd, q = 3 mod 4:  W = Z/4, coordinate = sum of +-1 per diagonal
//                            entry (+1 for squares, -1 for nonsquares)
//   FiniteOdd, q = 1 mod 4:  W = Z/2 x Z/2, coordinates (rank, disc) mod 2
//   RealLike:                W = Z, coordinate = signature
//   ComplexLike:             W = Z/2, coordinate = rank mod 2

FgAbGroup witt_group_shape(const FieldModel& f)
{
    switch (f.kind) {
    case FieldKind::ComplexLike: return FgAbGroup::cyclic(2, "<1>");
    case FieldKind::RealLike: return FgAbGroup::free_group(1, {"<1>"});
    case FieldKind::FiniteOdd:
        if (f.fq->q % 4 == 3)
            return FgAbGroup::cyclic(4, "<1>");
        return FgAbGroup({2, 2}, {"<1>", "<u>-<1>"});
    }
    return FgAbGroup::trivial();
}

std::vector<Int> witt_zero(const FieldModel& f)
{
    return std::vector<Int>(witt_group_shape(f).gens(), 0);
}

std::vector<Int> witt_of_form_class(const FieldModel& f, int unit)
{
    switch (f.kind) {
    case FieldKind::ComplexLike:
        return {1};
    case FieldKind::RealLike:
        return {unit > 0 ? Int(1) : Int(-1)};
    case FieldKind::FiniteOdd: {
        bool sq = f.fq->is_square(unit);
        if (f.fq->q % 4 == 3)
            return {sq ? Int(1) : Int(3)};
        return {1, sq ? Int(0) : Int(1)};  // (rank, disc)
    }
    }
    return {};
}

static std::vector<Int> witt_reduce(const FieldModel& f, std::vector<Int> v)
{
    FgAbGroup g = witt_group_shape(f);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (g.rel[i] != 0) {
            v[i] %= g.rel[i];
            if (v[i] < 0)
                v[i] += g.rel[i];
        }
    return v;
}

std::vector<Int> witt_add(const FieldModel& f, std::vector<Int> a, const std::vector<Int>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return witt_reduce(f, std::move(a));
}

std::vector<Int> witt_mul(const FieldModel& f, const std::vector<Int>& a, const std::vector<Int>& b)
{
    switch (f.kind) {
    case FieldKind::ComplexLike:
    case FieldKind::RealLike:
        return witt_reduce(f, {a[0] * b[0]});
    case FieldKind::FiniteOdd:
        if (f.fq->q % 4 == 3)
            return witt_reduce(f, {a[0] * b[0]});
        // (r1,d1)(r2,d2) = (r1 r2, r1 d2 + r2 d1)
        return witt_reduce(f, {a[0] * b[0], a[0] * b[1] + a[1] * b[0]});
    }
    return {};
}

// ---------------------------------------------------------------------------
// frozen bases and reduction

namespace {

std::string eta_power_name(int j)
{
    return j == 1 ? "eta" : "eta^" + std::to_string(j);
}

}  // namespace

MWBasis mw_basis(const FieldModel& f, int degree)
{
    MWBasis b;
    switch (f.kind) {
    case FieldKind::ComplexLike:
        if (degree > 0) {
            b.group = FgAbGroup::trivial();
        } else if (degree == 0) {
            b.group = FgAbGroup::free_group(1, {"<1>"});
            b.names = {"<1>"};
        } else {
            b.group = FgAbGroup::cyclic(2, eta_power_name(-degree));
            b.names = {eta_power_name(-degree)};
        }
        return b;
    case FieldKind::RealLike:
        if (degree >= 1) {
            std::string n = degree == 1 ? "[-1]" : "[-1]^" + std::to_string(degree);
            b.group = FgAbGroup::free_group(1, {n});
            b.names = {n};
        } else if (degree == 0) {
            b.group = FgAbGroup::free_group(2, {"<1>", "eta[-1]"});
            b.names = {"<1>", "eta[-1]"};
        } else {
            b.group = FgAbGroup::free_group(1, {eta_power_name(-degree)});
            b.names = {eta_power_name(-degree)};
        }
        return b;
    case FieldKind::FiniteOdd: {
        int q = f.fq->q;
        int u = f.fq->least_nonsquare();
        int g = f.fq->primitive_root();
        if (degree >= 2) {
            b.group = FgAbGroup::trivial();
        } else if (degree == 1) {
            std::string n = "[" + std::to_string(g) + "]";
            b.group = FgAbGroup::cyclic(q - 1, n);
            b.names = {n};
        } else if (degree == 0) {
            std::string e = "eta[" + std::to_string(u) + "]";
            b.group = FgAbGroup({0, 2}, {"<1>", e});
            b.names = {"<1>", e};
        } else {
            int j = -degree;
            if (q % 4 == 3) {
                b.group = FgAbGroup::cyclic(4, eta_power_name(j));
                b.names = {eta_power_name(j)};
            } else {
                std::string second = eta_power_name(j) + "(<" + std::to_string(u) + ">-<1>)";
                b.group = FgAbGroup({2, 2}, {eta_power_name(j), second});
                b.names = {eta_power_name(j), second};
            }
        }
        return b;
    }
    }
    return b;
}

namespace {

// coordinates of a single monomial in the degree-n basis
std::vector<Int> eval_monomial(const FieldModel& f, const MWMonomial& m)
{
    const int deg = m.degree();
    const std::size_t dim = mw_basis(f, deg).group.gens();
    std::vector<Int> out(dim, 0);
    const Int& c = m.coef;
    if (c == 0)
        return out;

    switch (f.kind) {
    case FieldKind::ComplexLike: {
        // [1] = 0, so any symbol kills the monomial
        if (!m.units.empty())
            return out;
        out[0] = c;  // eta^k evaluates to <1> in W (k >= 1) or the ring unit
        return out;
    }
    case FieldKind::RealLike: {
        for (int u : m.units)
            if (u > 0)
                return out;  // [+1] = 0
        // reduce eta^k [-1]^s by eta [-1]^2 = -2 [-1] and [-1] eta^2 = -2 eta
        Int coef = c;
        int k = m.eta;
        int s = static_cast<int>(m.units.size());
        while (k >= 1 && s >= 2) {
            --k;
            --s;
            coef *= -2;
        }
        if (s == 1 && k >= 2) {
            --k;
            s = 0;
            coef *= -2;
        }
        if (k == 0) {
            if (s >= 1) {
                out[0] = coef;  // [-1]^s
            } else {
                out[0] = coef;  // rank coordinate of <1>
            }
        } else if (s == 0) {
            out[0] = coef;  // eta^k, signature coordinate
        } else {
            // k == 1, s == 1: eta[-1] in degree 0
            out[1] = coef;
        }
        return out;
    }
    case FieldKind::FiniteOdd: {
        const auto& F = *f.fq;
        int q = F.q;
        if (m.units.size() >= 2)
            return out;  // degree >= 2 Milnor-Witt groups of F_q vanish
        if (m.units.empty()) {
            if (m.eta == 0) {
                out[0] = c;  // c * <1> in GW
            } else {
                // eta^k -> <1> in W
                auto w = witt_of_form_class(f, 1);
                for (std::size_t i = 0; i < w.size(); ++i)
                    out[i] = c * w[i];
            }
            return out;
        }
        int u0 = m.units[0];
        if (m.eta == 0) {
            out[0] = c * F.dlog(u0);  // degree 1: dlog coordinates
            return out;
        }
        bool nonsq = !F.is_square(u0);
        if (m.eta == 1) {
            // eta[u] = <u> - 1 in GW: rank 0, disc class of u
            if (nonsq)
                out[1] = c;
            return out;
        }
        // eta^k [u] = eta^{k-1}(<u> - <1>) in W * eta^{k-1}
        if (nonsq) {
            if (q % 4 == 3) {
                out[0] = 2 * c;  // <u> - <1> = -2<1> in Z/4
            } else {
                out[1] = c;  // (0, 1) in (rank, disc)
            }
        }
        return out;
    }
    }
    return out;
}

std::vector<Int> reduce_coords(const FgAbGroup& g, std::vector<Int> v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (g.rel[i] != 0) {
            v[i] %= g.rel[i];
            if (v[i] < 0)
                v[i] += g.rel[i];
        }
    return v;
}

std::string coords_to_string(const std::vector<Int>& coords, const std::vector<std::string>& names)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        if (!first)
            os << " + ";
        if (coords[i] == 1) {
            os << names[i];
        } else if (coords[i] == -1) {
            os << "-" << names[i];
        } else {
            os << coords[i].str() << "*" << names[i];
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

bool MWNormalForm::is_zero() const
{
    for (const auto& c : coords)
        if (c != 0)
            return false;
    return true;
}

std::string MWNormalForm::to_string() const
{
    return coords_to_string(coords, basis.names);
}

MWNormalForm reduce(const MWExpression& e, const FieldModel& f)
{
    int deg = 0;
    if (!e.homogeneous(&deg))
        throw std::invalid_argument("reduce: expression is not homogeneous; split it first");
    MWNormalForm nf;
    nf.degree = deg;
    nf.basis = mw_basis(f, deg);
    nf.coords.assign(nf.basis.group.gens(), 0);
    for (const auto& t : e.terms) {
        if (t.coef == 0)
            continue;
        auto v = eval_monomial(f, t);
        for (std::size_t i = 0; i < v.size(); ++i)
            nf.coords[i] += v[i];
    }
    nf.coords = reduce_coords(nf.basis.group, std::move(nf.coords));
    return nf;
}

std::map<int, MWNormalForm> reduce_graded(const MWExpression& e, const FieldModel& f)
{
    std::map<int, MWNormalForm> out;
    for (const auto& [deg, part] : e.graded())
        out[deg] = reduce(part, f);
    return out;
}

std::string GWInvariants::to_string() const
{
    std::ostringstream os;
    os << "rank " << rank.str();
    for (std::size_t i = 0; i < extra.size(); ++i)
        os << ", " << extra_kind << " " << extra[i].str();
    return os.str();
}

GWInvariants gw_invariants(const MWExpression& e, const FieldModel& f)
{
    MWNormalForm nf = reduce(e, f);
    if (nf.degree != 0 && !nf.is_zero())
        throw std::invalid_argument("gw_invariants: expression must have degree 0");
    GWInvariants inv;
    if (nf.coords.empty())
        return inv;
    inv.rank = nf.coords[0];
    switch (f.kind) {
    case FieldKind::ComplexLike:
        break;
    case FieldKind::RealLike:
        // basis {<1>, eta[-1]}: signature of <1> is 1, of eta[-1] is -2
        inv.extra = {nf.coords[0] - 2 * nf.coords[1]};
        inv.extra_kind = "signature";
        break;
    case FieldKind::FiniteOdd:
        inv.extra = {nf.coords[1]};
        inv.extra_kind = "disc";
        break;
    }
    return inv;
}

// ---------------------------------------------------------------------------
// eta-quotient

std::string MilnorElement::symbol_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, us] : symbols) {
        if (!first)
            os << " + ";
        if (c != 1 || us.empty())
            os << c.str() << (us.empty() ? "" : "*");
        if (!us.empty()) {
            os << "{";
            for (std::size_t i = 0; i < us.size(); ++i)
                os << (i ? "," : "") << us[i];
            os << "}";
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::string MilnorElement::to_string() const
{
    if (group.gens() == 0)
        return "0";
    std::vector<std::string> names;
    for (std::size_t i = 0; i < group.gens(); ++i)
        names.push_back(group.label(i));
    return coords_to_string(coords, names);
}

MilnorElement quotient_eta(const MWExpression& e, const FieldModel& f)
{
    int deg = 0;
    if (!e.homogeneous(&deg))
        throw std::invalid_argument("quotient_eta: expression is not homogeneous");
    MilnorElement out;
    out.degree = deg;
    for (const auto& t : e.terms)
        if (t.eta == 0 && t.coef != 0)
            out.symbols.push_back({t.coef, t.units});

    // coordinates in K^M_degree of the model
    if (deg < 0) {
        out.group = FgAbGroup::trivial();
        return out;
    }
    switch (f.kind) {
    case FieldKind::ComplexLike:
        out.group = deg == 0 ? FgAbGroup::free_group(1, {"1"}) : FgAbGroup::trivial();
        break;
    case FieldKind::RealLike:
        if (deg == 0) {
            out.group = FgAbGroup::free_group(1, {"1"});
        } else {
            std::string n = "{" + std::string("-1");
            for (int i = 1; i < deg; ++i)
                n += ",-1";
            n += "}";
            out.group = FgAbGroup::cyclic(2, n);
        }
        break;
    case FieldKind::FiniteOdd:
        if (deg == 0) {
            out.group = FgAbGroup::free_group(1, {"1"});
        } else if (deg == 1) {
            out.group = FgAbGroup::cyclic(f.fq->q - 1,
                                          "{" + std::to_string(f.fq->primitive_root()) + "}");
        } else {
            out.group = FgAbGroup::trivial();
        }
        break;
    }
    out.coords.assign(out.group.gens(), 0);
    for (const auto& [c, us] : out.symbols) {
        if (out.group.gens() == 0)
            continue;
        switch (f.kind) {
        case FieldKind::ComplexLike:
            out.coords[0] += c;  // deg 0 only
            break;
        case FieldKind::RealLike: {
            bool zero = false;
            for (int u : us)
                if (u > 0)
                    zero = true;
            if (!zero)
                out.coords[0] += c;
            break;
        }
        case FieldKind::FiniteOdd:
            if (deg == 0)
                out.coords[0] += c;
            else
                out.coords[0] += c * f.fq->dlog(us[0]);
            break;
        }
    }
    out.coords = reduce_coords(out.group, std::move(out.coords));
    return out;
}

// ---------------------------------------------------------------------------
// eta-localization

bool WittLaurent::is_zero() const
{
    for (const auto& c : coords)
        if (c != 0)
            return false;
    return true;
}

bool witt_laurent_is_unit(const FieldModel& f, const WittLaurent& w)
{
    if (w.is_zero())
        return false;
    // invertible iff the W(F) coefficient is a unit of the Witt ring
    if (w.group.free_rank() > 0)
        return w.coords[0] == 1 || w.coords[0] == -1;  // signature over R
    // finite coordinate ring: search for an inverse
    std::vector<Int> identity = witt_of_form_class(f, 1);
    std::size_t n = w.coords.size();
    std::vector<Int> cand(n, 0);
    for (;;) {
        if (witt_mul(f, w.coords, cand) == identity)
            return true;
        std::size_t i = 0;
        while (i < n) {
            cand[i] += 1;
            if (cand[i] < w.group.rel[i])
                break;
            cand[i] = 0;
            ++i;
        }
        if (i == n)
            return false;
    }
}

std::string WittLaurent::to_string() const
{
    if (is_zero())
        return "0";
    std::vector<std::string> names;
    for (std::size_t i = 0; i < group.gens(); ++i)
        names.push_back(group.label(i));
    std::string w = coords_to_string(coords, names);
    if (eta_exp == 0)
        return w;
    std::string e = eta_exp == 1 ? "eta" : "eta^" + std::to_string(eta_exp);
    if (w == "<1>")
        return e;
    return "(" + w + ")*" + e;
}

WittLaurent localize_eta(const MWExpression& e, const FieldModel& f)
{
    int deg = 0;
    if (!e.homogeneous(&deg))
        throw std::invalid_argument("localize_eta: expression is not homogeneous");
    WittLaurent out;
    out.eta_exp = -deg;
    out.group = witt_group_shape(f);
    out.coords = witt_zero(f);
    for (const auto& t : e.terms) {
        if (t.coef == 0)
            continue;
        // eta^k [u1]...[um] -> (product of (<ui> - <1>)) * eta^{k-m}
        std::vector<Int> w = witt_of_form_class(f, 1);  // <1>
        for (int u : t.units) {
            std::vector<Int> d = witt_of_form_class(f, u);
            std::vector<Int> one = witt_of_form_class(f, 1);
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] -= one[i];
            w = witt_mul(f, w, d);
        }
        for (std::size_t i = 0; i < w.size(); ++i)
            out.coords[i] += t.coef * w[i];
    }
    // reduce
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        if (out.group.rel[i] != 0) {
            out.coords[i] %= out.group.rel[i];
            if (out.coords[i] < 0)
                out.coords[i] += out.group.rel[i];
        }
    return out;
}

}  // namespace sliceforge::mwk
