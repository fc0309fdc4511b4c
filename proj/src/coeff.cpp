#include "sliceforge/coeff.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace sliceforge::coeff {

// ---------------------------------------------------------------------------
// FieldModel

FieldModel FieldModel::complex_like()
{
    FieldModel f;
    f.kind = FieldKind::ComplexLike;
    return f;
}

FieldModel FieldModel::real_like()
{
    FieldModel f;
    f.kind = FieldKind::RealLike;
    return f;
}

FieldModel FieldModel::finite_odd(int q)
{
    FieldModel f;
    f.kind = FieldKind::FiniteOdd;
    f.fq = std::make_shared<gf::GF>(q);
    return f;
}

FieldModel FieldModel::parse(const std::string& s)
{
    if (s == "C")
        return complex_like();
    if (s == "R")
        return real_like();
    std::string digits;
    if (s.size() > 1 && s[0] == 'F') {
        digits = s.substr(1);
        if (digits.rfind("q:", 0) == 0)
            digits = digits.substr(2);
    }
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
        return finite_odd(std::stoi(digits));
    throw gf::BadField("unrecognized field spec '" + s + "' (expected C, R, or F<q>)");
}

bool FieldModel::minus_one_square() const
{
    switch (kind) {
    case FieldKind::ComplexLike: return true;
    case FieldKind::RealLike: return false;
    case FieldKind::FiniteOdd: return fq->minus_one_is_square();
    }
    return true;
}

int FieldModel::cd2_bound() const
{
    switch (kind) {
    case FieldKind::ComplexLike: return 0;
    case FieldKind::RealLike: return -1;
    case FieldKind::FiniteOdd: return 1;
    }
    return -1;
}

std::string FieldModel::name() const
{
    switch (kind) {
    case FieldKind::ComplexLike: return "C";
    case FieldKind::RealLike: return "R";
    case FieldKind::FiniteOdd: return "F" + std::to_string(fq->q);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// mod-2 coefficients

namespace {

std::string power_name(const std::string& base, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return base;
    return base + "^" + std::to_string(e);
}

std::string mono_name(int u_or_rho, const std::string& sym, int tau_exp)
{
    std::string a = power_name(sym, u_or_rho);
    std::string b = power_name("tau", tau_exp);
    if (a.empty() && b.empty())
        return "1";
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    return a + " " + b;
}

}  // namespace

int h_dim(const FieldModel& f, int p, int q)
{
    if (p < 0 || q < 0 || p > q)
        return 0;
    switch (f.kind) {
    case FieldKind::ComplexLike: return p == 0 ? 1 : 0;
    case FieldKind::RealLike: return 1;
    case FieldKind::FiniteOdd: return p <= 1 ? 1 : 0;
    }
    return 0;
}

CoeffEntry h(const FieldModel& f, int p, int q)
{
    CoeffEntry e;
    e.p = p;
    e.q = q;
    e.dim = h_dim(f, p, q);
    if (e.dim == 1) {
        switch (f.kind) {
        case FieldKind::ComplexLike: e.basis_label = mono_name(0, "", q); break;
        case FieldKind::RealLike: e.basis_label = mono_name(p, "rho", q - p); break;
        case FieldKind::FiniteOdd: e.basis_label = mono_name(p, "u", q - p); break;
        }
    }
    return e;
}

FgAbGroup CoeffEntry::group() const
{
    if (dim == 0)
        return FgAbGroup::trivial();
    return FgAbGroup::elementary_2(1, {basis_label});
}

// ---------------------------------------------------------------------------
// lookup tables for the symbolic integral cells

std::string table_directory()
{
    if (const char* env = std::getenv("SLICE_FORGE_TABLES"))
        return env;
    return SLICEFORGE_DATA_DIR;
}

namespace {

std::map<std::pair<int, int>, IntTableCell> load_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open coefficient table " + path);
    std::map<std::pair<int, int>, IntTableCell> table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        int p, q;
        IntTableCell cell;
        if (!(ls >> p >> q >> cell.type))
            throw std::runtime_error("malformed table line in " + path + ": " + line);
        std::getline(ls, cell.citation);
        while (!cell.citation.empty() && cell.citation.front() == ' ')
            cell.citation.erase(cell.citation.begin());
        table[{p, q}] = cell;
    }
    return table;
}

}  // namespace

const std::map<std::pair<int, int>, IntTableCell>& integral_table(FieldKind kind)
{
    static std::map<std::pair<int, int>, IntTableCell> real_table, complex_table;
    static std::once_flag once_r, once_c;
    if (kind == FieldKind::RealLike) {
        std::call_once(once_r, [] { real_table = load_table(table_directory() + "/real_integral.tab"); });
        return real_table;
    }
    std::call_once(once_c, [] { complex_table = load_table(table_directory() + "/complex_integral.tab"); });
    return complex_table;
}

// ---------------------------------------------------------------------------
// integral coefficients

namespace {

IntCoeffEntry exact_entry(int p, int q, FgAbGroup g, std::string symbol, std::string cite)
{
    IntCoeffEntry e;
    e.p = p;
    e.q = q;
    e.symbol = std::move(symbol);
    e.citation = std::move(cite);
    bool finite_cyclic = !g.is_trivial() && g.free_rank() == 0;
    if (g.free_rank() == 1 && g.invariant_factors().empty()) {
        e.mod2_dim = 1;
        e.tors2_dim = 0;
        e.bock_rank = 0;
    } else if (finite_cyclic) {
        Int d = g.invariant_factors().front();
        e.mod2_dim = d % 2 == 0 ? 1 : 0;
        e.tors2_dim = e.mod2_dim;
        // generator of G[2] is (d/2)g; it reduces to (d/2 mod 2) * gbar in G/2
        e.bock_rank = (d % 2 == 0 && (d / 2) % 2 == 1) ? 1 : 0;
    }
    e.exact = std::move(g);
    return e;
}

IntCoeffEntry symbolic_entry(int p, int q, const IntTableCell& cell)
{
    IntCoeffEntry e;
    e.p = p;
    e.q = q;
    e.symbol = cell.type;
    e.citation = cell.citation;
    if (cell.type == "Z2xDiv") {
        e.mod2_dim = 1;
        e.tors2_dim = 1;
        e.bock_rank = 1;
    } else if (cell.type == "QZ2") {
        e.mod2_dim = 0;
        e.tors2_dim = 1;
        e.bock_rank = 0;
    } else if (cell.type == "Div") {
        e.mod2_dim = 0;
        e.tors2_dim = 0;
        e.bock_rank = 0;
    } else {
        throw std::runtime_error("unknown integral cell type " + cell.type);
    }
    return e;
}

Int int_pow(Int base, int e)
{
    Int r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

}  // namespace

IntCoeffEntry H_int(const FieldModel& f, int p, int q)
{
    if (q < 0 || p > q || p < 0)
        return exact_entry(p, q, FgAbGroup::trivial(), "0", "weight/degree bounds for fields");
    if (p == 0 && q == 0)
        return exact_entry(0, 0, FgAbGroup::free_group(1, {"1"}), "Z", "H^{0,0} = Z");
    if (p == 0)
        return exact_entry(p, q, FgAbGroup::trivial(), "0", "H^{0,q} = 0 for q >= 1");

    if (f.kind == FieldKind::FiniteOdd) {
        if (p >= 2)
            return exact_entry(p, q, FgAbGroup::trivial(), "0",
                               "motivic cohomology of finite fields (Quillen)");
        Int d = int_pow(f.fq->q, q) - 1;  // p == 1, q >= 1
        FgAbGroup g = FgAbGroup::cyclic(d, "g");
        return exact_entry(p, q, std::move(g), "Z/" + d.str(),
                           "H^{1,n}(F_q) = Z/(q^n - 1) (Quillen)");
    }

    // RealLike / ComplexLike: symbolic two-tier cells (1 <= p <= q)
    const auto& table = integral_table(f.kind);
    auto it = table.find({p, q});
    if (it == table.end())
        throw OutOfWindow(p, q, "integral cell (" + std::to_string(p) + "," + std::to_string(q) +
                                    ") not certified by the " + f.name() + " table");
    IntCoeffEntry e = symbolic_entry(p, q, it->second);
    if (p == 1 && q == 1)
        e.symbol = "F^x";  // unit group; mod-2 data from the table
    return e;
}

// ---------------------------------------------------------------------------
// operations

std::pair<int, int> h_op_bidegree(HOp op)
{
    switch (op) {
    case HOp::Sq1: return {1, 0};
    case HOp::Sq2: return {2, 1};
    case HOp::Sq2RhoSq1: return {2, 1};
    case HOp::Sq3Sq1: return {4, 1};
    case HOp::Q1: return {3, 1};
    case HOp::TauMul: return {0, 1};
    case HOp::RhoMul: return {1, 1};
    }
    return {0, 0};
}

std::string h_op_name(HOp op)
{
    switch (op) {
    case HOp::Sq1: return "Sq^1";
    case HOp::Sq2: return "Sq^2";
    case HOp::Sq2RhoSq1: return "Sq^2+rhoSq^1";
    case HOp::Sq3Sq1: return "Sq^3Sq^1";
    case HOp::Q1: return "Q_1";
    case HOp::TauMul: return "tau";
    case HOp::RhoMul: return "rho";
    }
    return "?";
}

namespace {

// coefficient of the single basis element map; 0 unless both cells have dim 1
int sq1_coeff(const FieldModel& f, int p, int q)
{
    if (h_dim(f, p, q) == 0 || h_dim(f, p + 1, q) == 0)
        return 0;
    switch (f.kind) {
    case FieldKind::ComplexLike:
        return 0;
    case FieldKind::RealLike:
        // Sq^1(rho^p tau^b) = b * rho^{p+1} tau^{b-1}
        return (q - p) % 2;
    case FieldKind::FiniteOdd:
        // Sq^1(tau^q) = q * rho tau^{q-1}, rho = u iff -1 is a nonsquare
        if (p != 0)
            return 0;
        return (q % 2 == 1 && !f.minus_one_square()) ? 1 : 0;
    }
    return 0;
}

int sq2_coeff(const FieldModel& f, int p, int q)
{
    if (h_dim(f, p, q) == 0 || h_dim(f, p + 2, q + 1) == 0)
        return 0;
    if (f.kind != FieldKind::RealLike)
        return 0;
    // Sq^2(rho^p tau^b) = binom(b,2) rho^{p+2} tau^{b-1}; derived from
    // Sq^2(tau) = 0, Sq^2(rho) = 0 via the tau-twisted Cartan formula
    // (see tools/derive_tables and data/real_sq2.tab)
    int b = q - p;
    long long binom = static_cast<long long>(b) * (b - 1) / 2;
    return static_cast<int>(binom % 2);
}

int tau_coeff(const FieldModel& f, int p, int q)
{
    return (h_dim(f, p, q) == 1 && h_dim(f, p, q + 1) == 1) ? 1 : 0;
}

int rho_coeff(const FieldModel& f, int p, int q)
{
    if (h_dim(f, p, q) == 0 || h_dim(f, p + 1, q + 1) == 0)
        return 0;
    if (f.minus_one_square())
        return 0;
    if (f.kind == FieldKind::FiniteOdd && p != 0)
        return 0;  // u * u lands in degree 2, which vanishes
    return 1;
}

F2Matrix single(const FieldModel& f, int p, int q, int dp, int dw, int coeff)
{
    F2Matrix m(static_cast<std::size_t>(h_dim(f, p + dp, q + dw)),
               static_cast<std::size_t>(h_dim(f, p, q)));
    if (m.rows == 1 && m.cols == 1)
        m.at(0, 0) = static_cast<std::uint8_t>(coeff);
    return m;
}

}  // namespace

F2Matrix h_op_matrix(const FieldModel& f, HOp op, int p, int q)
{
    switch (op) {
    case HOp::Sq1:
        return single(f, p, q, 1, 0, sq1_coeff(f, p, q));
    case HOp::Sq2:
        return single(f, p, q, 2, 1, sq2_coeff(f, p, q));
    case HOp::TauMul:
        return single(f, p, q, 0, 1, tau_coeff(f, p, q));
    case HOp::RhoMul:
        return single(f, p, q, 1, 1, rho_coeff(f, p, q));
    case HOp::Sq2RhoSq1: {
        F2Matrix a = h_op_matrix(f, HOp::Sq2, p, q);
        F2Matrix b = f2_mul(h_op_matrix(f, HOp::RhoMul, p + 1, q), h_op_matrix(f, HOp::Sq1, p, q));
        return f2_add(a, b);
    }
    case HOp::Sq3Sq1: {
        // Sq^3 = Sq^1 Sq^2
        F2Matrix s1 = h_op_matrix(f, HOp::Sq1, p, q);
        F2Matrix s2 = h_op_matrix(f, HOp::Sq2, p + 1, q);
        F2Matrix s1b = h_op_matrix(f, HOp::Sq1, p + 3, q + 1);
        return f2_mul(s1b, f2_mul(s2, s1));
    }
    case HOp::Q1: {
        F2Matrix a = f2_mul(h_op_matrix(f, HOp::Sq1, p + 2, q + 1), h_op_matrix(f, HOp::Sq2, p, q));
        F2Matrix b = f2_mul(h_op_matrix(f, HOp::Sq2, p + 1, q), h_op_matrix(f, HOp::Sq1, p, q));
        return f2_add(a, b);
    }
    }
    return F2Matrix();
}

F2Matrix pr_matrix(const FieldModel& f, int p, int q)
{
    IntCoeffEntry e = H_int(f, p, q);
    F2Matrix m(static_cast<std::size_t>(h_dim(f, p, q)), static_cast<std::size_t>(e.mod2_dim));
    if (m.rows == 1 && m.cols == 1)
        m.at(0, 0) = 1;  // pr is injective onto ker(partial)
    return m;
}

F2Matrix partial_matrix(const FieldModel& f, int p, int q)
{
    IntCoeffEntry src = H_int(f, p, q);
    IntCoeffEntry dst = H_int(f, p + 1, q);
    F2Matrix m(static_cast<std::size_t>(dst.tors2_dim), static_cast<std::size_t>(h_dim(f, p, q)));
    // im(partial) = h / im(pr); with one-dimensional cells the map is nonzero
    // exactly when pr contributes nothing
    if (m.rows == 1 && m.cols == 1 && src.mod2_dim == 0)
        m.at(0, 0) = 1;
    return m;
}

F2Matrix tors2_to_mod2_matrix(const FieldModel& f, int p, int q)
{
    IntCoeffEntry e = H_int(f, p, q);
    F2Matrix m(static_cast<std::size_t>(e.mod2_dim), static_cast<std::size_t>(e.tors2_dim));
    if (m.rows == 1 && m.cols == 1 && e.bock_rank == 1)
        m.at(0, 0) = 1;
    return m;
}

IntMatrix pr_from_exact(const FieldModel& f, int p, int q)
{
    IntCoeffEntry e = H_int(f, p, q);
    if (!e.exact)
        throw std::runtime_error("pr_from_exact: no exact group at this cell");
    IntMatrix m(static_cast<std::size_t>(h_dim(f, p, q)), e.exact->gens());
    if (m.rows == 1 && m.cols == 1)
        m.at(0, 0) = 1;
    return m;
}

IntMatrix tors2_embed(const FieldModel& f, int p, int q)
{
    IntCoeffEntry e = H_int(f, p, q);
    if (!e.exact)
        throw std::runtime_error("tors2_embed: no exact group at this cell");
    IntMatrix m(e.exact->gens(), static_cast<std::size_t>(e.tors2_dim));
    if (m.rows == 1 && m.cols == 1)
        m.at(0, 0) = e.exact->rel[0] / 2;  // generator of G[2] in cyclic G
    return m;
}

OpTable op_table(const FieldModel& f, int deg_min, int deg_max, int wt_min, int wt_max)
{
    OpTable t;
    for (int p = deg_min; p <= deg_max; ++p)
        for (int q = wt_min; q <= wt_max; ++q) {
            OpTableEntry e;
            e.sq1 = h_op_matrix(f, HOp::Sq1, p, q);
            e.sq2 = h_op_matrix(f, HOp::Sq2, p, q);
            e.sq2_rho_sq1 = h_op_matrix(f, HOp::Sq2RhoSq1, p, q);
            e.sq3sq1 = h_op_matrix(f, HOp::Sq3Sq1, p, q);
            e.q1 = h_op_matrix(f, HOp::Q1, p, q);
            e.tau_mul = h_op_matrix(f, HOp::TauMul, p, q);
            e.rho_mul = h_op_matrix(f, HOp::RhoMul, p, q);
            e.pr = pr_matrix(f, p, q);
            e.partial = partial_matrix(f, p, q);
            t.at[{p, q}] = std::move(e);
        }
    return t;
}

}  // namespace sliceforge::coeff
