#pragma once

#include "sliceforge/abgrp.hpp"
#include "sliceforge/gf.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

// Mod-2 and integral motivic cohomology of the base field in a bidegree
// window, together with the operation maps (Sq^1, Sq^2, composites, tau- and
// rho-multiplication, pr, and the integral Bockstein) consumed by the
// differential case tables.
//
// Supported base fields: quadratically closed ("C"), real closed ("R"), and
// finite fields of odd order ("Fq"). Mod-2 coefficients:
//   C:  F_2[tau]
//   R:  F_2[tau, rho]
//   Fq: F_2[tau]{1, u},  u the class of the least nonsquare
// with tau in degree (0,1) and rho = [-1] in degree (1,1).

namespace sliceforge::coeff {

using abgrp::F2Matrix;
using abgrp::FgAbGroup;
using abgrp::Int;
using abgrp::IntMatrix;

struct OutOfWindow : std::runtime_error {
    int p, q;
    OutOfWindow(int p_, int q_, const std::string& what)
        : std::runtime_error(what), p(p_), q(q_) {}
};

enum class FieldKind { ComplexLike, RealLike, FiniteOdd };

struct FieldModel {
    FieldKind kind = FieldKind::ComplexLike;
    std::shared_ptr<gf::GF> fq;  // set iff FiniteOdd

    static FieldModel complex_like();
    static FieldModel real_like();
    static FieldModel finite_odd(int q);
    // "C" | "R" | "F<q>" | "Fq:<q>"
    static FieldModel parse(const std::string& s);

    bool minus_one_square() const;
    // 2-cohomological dimension bound: 0 (C), 1 (Fq), unbounded (-1) for R
    int cd2_bound() const;
    std::string name() const;
};

struct Window {
    int pmin = -6, pmax = 10, wmin = -6, wmax = 10, qmax = 10, imax = 8;
    static Window defaults() { return Window{}; }
};

// --- mod-2 coefficients -----------------------------------------------------

struct CoeffEntry {
    int p = 0, q = 0;
    int dim = 0;               // 0 or 1 for the supported models
    std::string basis_label;   // monomial name, e.g. "rho^2 tau"
    FgAbGroup group() const;
};

CoeffEntry h(const FieldModel& f, int p, int q);
int h_dim(const FieldModel& f, int p, int q);

// --- integral coefficients ---------------------------------------------------

struct IntCoeffEntry {
    int p = 0, q = 0;
    std::optional<FgAbGroup> exact;  // present for forced cells and FiniteOdd
    std::string symbol;              // display name, e.g. "F^x", "Z/8", "div"
    int mod2_dim = 0;                // dim_F2 of G/2
    int tors2_dim = 0;               // dim_F2 of G[2]
    int bock_rank = 0;               // rank of the natural map G[2] -> G/2
    std::string citation;

    bool data_zero() const { return mod2_dim == 0 && tors2_dim == 0; }
    // true when the cell is known to be the zero group
    bool exact_zero() const { return exact && exact->is_trivial(); }
};

IntCoeffEntry H_int(const FieldModel& f, int p, int q);

// --- operations ---------------------------------------------------------------

enum class HOp { Sq1, Sq2, Sq2RhoSq1, Sq3Sq1, Q1, TauMul, RhoMul };

// (degree, weight) shift of the operation
std::pair<int, int> h_op_bidegree(HOp op);
std::string h_op_name(HOp op);

// matrix from h^{p,q} to h^{(p,q) + bidegree(op)}
F2Matrix h_op_matrix(const FieldModel& f, HOp op, int p, int q);

// mod-2 reduction: H^{p,q}/2 -> h^{p,q}
F2Matrix pr_matrix(const FieldModel& f, int p, int q);
// integral Bockstein: h^{p,q} -> H^{p+1,q}[2]
F2Matrix partial_matrix(const FieldModel& f, int p, int q);
// natural map H^{p,q}[2] -> H^{p,q}/2
F2Matrix tors2_to_mod2_matrix(const FieldModel& f, int p, int q);

// FiniteOdd-only exact realizations of pr and the two-torsion embedding.
// pr_from_exact: generators of the exact group -> h^{p,q} basis (over F_2).
IntMatrix pr_from_exact(const FieldModel& f, int p, int q);
// tors2_embed: F_2 two-torsion coordinates -> exact group generators.
IntMatrix tors2_embed(const FieldModel& f, int p, int q);

// --- materialized operation table ---------------------------------------------

struct OpTableEntry {
    F2Matrix sq1, sq2, sq2_rho_sq1, sq3sq1, q1, tau_mul, rho_mul;
    F2Matrix pr, partial;
};

struct OpTable {
    std::map<std::pair<int, int>, OpTableEntry> at;
};

// every operation map on every basis element with pmin<=p<=pmax+? — the
// window is interpreted on (degree, weight) pairs directly here
OpTable op_table(const FieldModel& f, int deg_min, int deg_max, int wt_min, int wt_max);

// --- lookup tables -------------------------------------------------------------

// Directory containing real_integral.tab / complex_integral.tab.
// SLICE_FORGE_TABLES overrides the compiled-in default.
std::string table_directory();

struct IntTableCell {
    std::string type;  // "Z2xDiv" | "QZ2" | "Div"
    std::string citation;
};

// Parsed table for RealLike/ComplexLike symbolic cells; cached per process.
const std::map<std::pair<int, int>, IntTableCell>& integral_table(FieldKind kind);

}  // namespace sliceforge::coeff
