#pragma once

#include "sliceforge/abgrp.hpp"
#include "sliceforge/coeff.hpp"

#include <map>
#include <string>
#include <vector>

// Milnor-Witt K-theory as a rewriting system over the standard presentation:
// generators [u] (degree +1, u a unit class) and eta (degree -1), modulo
//   (1) [uv] = [u] + [v] + eta [u][v]
//   (2) [u][v] = 0 when u + v = 1
//   (3) [u] eta = eta [u]
//   (4) (2 + [-1] eta) eta = 0.
// Reduction evaluates the canonical coordinates of an expression in the
// known target group for the supported models; the frozen bases are
// documented in docs/mw-basis.md.

namespace sliceforge::mwk {

using abgrp::FgAbGroup;
using abgrp::Int;
using coeff::FieldKind;
using coeff::FieldModel;

struct UnknownUnit : std::runtime_error {
    std::size_t position;
    UnknownUnit(std::size_t pos, const std::string& what)
        : std::runtime_error(what), position(pos) {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what), position(pos) {}
};

// Unit classes are stored by canonical representative: the integer encoding
// of a field element for FiniteOdd, +1/-1 for RealLike, 1 for ComplexLike.
struct MWMonomial {
    Int coef = 0;
    int eta = 0;
    std::vector<int> units;
    int degree() const { return static_cast<int>(units.size()) - eta; }
};

struct MWExpression {
    std::vector<MWMonomial> terms;

    bool homogeneous(int* degree_out = nullptr) const;
    std::map<int, MWExpression> graded() const;
};

MWExpression mw_mul(const MWExpression& a, const MWExpression& b);
MWExpression mw_add(const MWExpression& a, const MWExpression& b);
MWExpression mw_scale(const Int& c, const MWExpression& a);

// convenience builders
MWExpression mw_unit_symbol(int unit);          // [u]
MWExpression mw_eta();                          // eta
MWExpression mw_int(const Int& n);              // n * 1
MWExpression mw_form(const FieldModel& f, int unit);  // <u> = 1 + eta [u]
MWExpression mw_eps(const FieldModel& f);       // -(1 + [-1] eta)

// validates units against the model; reports byte positions on errors
MWExpression parse_expression(const std::string& src, const FieldModel& f);

// resolve a raw integer (or 'u', passed as the model's nonsquare) unit
int canonical_unit(const FieldModel& f, long long raw, std::size_t pos_for_errors = 0);

struct MWBasis {
    FgAbGroup group;                 // coordinates live here
    std::vector<std::string> names;  // basis element names
};

MWBasis mw_basis(const FieldModel& f, int degree);

struct MWNormalForm {
    int degree = 0;
    std::vector<Int> coords;  // one per basis generator, torsion reduced
    MWBasis basis;

    bool is_zero() const;
    std::string to_string() const;
};

// pre: e homogeneous (throws std::invalid_argument otherwise)
MWNormalForm reduce(const MWExpression& e, const FieldModel& f);
// split a mixed expression by degree and reduce each part
std::map<int, MWNormalForm> reduce_graded(const MWExpression& e, const FieldModel& f);

struct GWInvariants {
    Int rank = 0;
    std::vector<Int> extra;  // disc (FiniteOdd, mod 2) or signature (RealLike)
    std::string extra_kind;  // "disc", "signature", or ""
    std::string to_string() const;
};

// pre: e of degree 0
GWInvariants gw_invariants(const MWExpression& e, const FieldModel& f);

// --- eta-quotient: Milnor K-theory ------------------------------------------

struct MilnorElement {
    int degree = 0;
    // the formal image: eta-free part of the expression, as symbols
    std::vector<std::pair<Int, std::vector<int>>> symbols;
    std::vector<Int> coords;  // reduced coordinates in K^M_degree(model)
    FgAbGroup group;
    std::string symbol_string() const;  // e.g. "{2,3}"
    std::string to_string() const;      // reduced form
};

MilnorElement quotient_eta(const MWExpression& e, const FieldModel& f);

// --- eta-localization: W(F)[eta^{+-1}] ----------------------------------------

struct WittLaurent {
    int eta_exp = 0;          // power of eta (= -degree of the input)
    std::vector<Int> coords;  // Witt-ring coordinates, see mw-basis.md
    FgAbGroup group;          // additive group of W(F)
    bool is_zero() const;
    std::string to_string() const;
};

WittLaurent localize_eta(const MWExpression& e, const FieldModel& f);
// invertible in W(F)[eta^{+-1}]?
bool witt_laurent_is_unit(const FieldModel& f, const WittLaurent& w);

// Witt-ring coordinate arithmetic shared with the oracle comparison.
std::vector<Int> witt_zero(const FieldModel& f);
std::vector<Int> witt_of_form_class(const FieldModel& f, int unit);  // <u> in W
std::vector<Int> witt_add(const FieldModel& f, std::vector<Int> a, const std::vector<Int>& b);
std::vector<Int> witt_mul(const FieldModel& f, const std::vector<Int>& a, const std::vector<Int>& b);
FgAbGroup witt_group_shape(const FieldModel& f);

}  // namespace sliceforge::mwk
