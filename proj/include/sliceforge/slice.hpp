#pragma once

#include "sliceforge/abgrp.hpp"
#include "sliceforge/coeff.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// Slice spectral sequence pages for very effective hermitian K-theory (kq),
// its eta-inversion (kw), and connective algebraic K-theory (kgl): E1 from
// the slice decompositions, d1 from the differential case tables, E2 by
// exact homology, stability flags for entries out of reach of any higher
// differential inside the window.

namespace sliceforge::slice {

using abgrp::F2Matrix;
using abgrp::FgAbGroup;
using abgrp::GroupHom;
using abgrp::IntMatrix;
using coeff::FieldModel;
using coeff::Window;

struct NoSuchSummand : std::runtime_error {
    NoSuchSummand(const std::string& w) : std::runtime_error(w) {}
};
struct DifferentialSquareNonZero : std::runtime_error {
    DifferentialSquareNonZero(const std::string& w) : std::runtime_error(w) {}
};
struct WindowTooSmall : std::runtime_error {
    WindowTooSmall(const std::string& w) : std::runtime_error(w) {}
};
struct UnsupportedFormat : std::runtime_error {
    UnsupportedFormat(const std::string& w) : std::runtime_error(w) {}
};

enum class Spectrum { kq, kw, kgl };
Spectrum parse_spectrum(const std::string& s);
std::string spectrum_name(Spectrum s);

enum class CoeffKind { Mod2, Integral };

struct SliceSummand {
    int shift_p = 0, shift_w = 0;
    CoeffKind coeff = CoeffKind::Mod2;
    int index() const { return shift_p - shift_w; }
};

// imax bounds the wedge for kw only
std::vector<SliceSummand> slice_decomposition(Spectrum s, int q, int imax = 0);
// "MZ", "S^{2,2}MZ/2 v S^{4,2}MZ", ... ; for kw the truncated list ends in "v ..."
std::string decomposition_string(Spectrum s, int q, int imax = 0);

// --- d1 case table ------------------------------------------------------------

enum class D1Op { None, Sq3Sq1, DSq2Sq1, Sq2, Sq2RhoSq1, Sq2Pr, Tau, TauPr };
std::string d1_op_name(D1Op op);
// (degree, weight) shift of the named operation
std::pair<int, int> d1_op_bidegree(D1Op op);

struct D1Spec {
    int q = 0, i = 0;
    D1Op comp[3] = {D1Op::None, D1Op::None, D1Op::None};  // targets i+2, i, i-2
};

// throws NoSuchSummand unless (q, i) indexes a summand of s_q
D1Spec d1_spec(Spectrum s, int q, int i);

// operation bidegree equals the suspension gap to the target summand
bool d1_bidegree_audit(const D1Spec& spec);

// Eq-style multiplicative differential on the generator sqrt(alpha)^m eta^n
// versus the case table at (q, i) = (2m + n, 2m); true on agreement
bool mult_d1_check(const FieldModel& f, int m, int n);

// --- pages ----------------------------------------------------------------------

struct Tri {
    int p = 0, q = 0, w = 0;
    auto operator<=>(const Tri&) const = default;
};

struct SummandInstance {
    int i = 0;
    CoeffKind kind = CoeffKind::Mod2;
    int cell_p = 0, cell_q = 0;  // contributing coefficient bidegree
    std::string label;           // "(i=0) tau^2" or "(i=4) Z/8"
    // Mod2: dim 1; Integral: the two-tier data
    int mod2_dim = 0, tors2_dim = 0;
    std::optional<FgAbGroup> exact;
    std::string symbol;
};

struct Entry {
    std::vector<SummandInstance> summands;
    bool empty() const { return summands.empty(); }
    bool has_integral() const;
    std::size_t shadow_dim() const;  // mod-2 summands + integral mod2 slots
    std::size_t tors_dim() const;    // integral tors2 slots
};

enum class Stability { Stable, Unknown };

struct E2Entry {
    FgAbGroup group;          // exact when exact == true, else the F_2 shadow homology
    bool exact = false;       // honest group vs mod-2 realization
    int tors2_coker_dim = 0;  // extra two-torsion-side data at symbolic integral spots
    Stability flag = Stability::Unknown;
};

// one component block of d1 leaving a summand instance
struct BlockPiece {
    int src_i = 0, dst_i = 0;
    D1Op op = D1Op::None;
    F2Matrix mat;  // source realization -> target realization (see kinds)
    CoeffKind src_kind = CoeffKind::Mod2, dst_kind = CoeffKind::Mod2;
};

struct Page {
    Spectrum spectrum = Spectrum::kq;
    FieldModel field;
    Window window;
    int r = 1;
    std::map<Tri, Entry> entries;                     // nonzero in-window entries
    std::map<Tri, std::vector<BlockPiece>> blocks;    // d1 with source at tri (r = 1)
    std::map<Tri, E2Entry> e2;                        // r = 2 only
    std::vector<Tri> truncation_suspects;             // kw entries possibly cut by imax
};

// entry at an arbitrary tri-degree, independent of any window
Entry entry_at(Spectrum s, const FieldModel& f, int imax, Tri t);
// d1 block pieces with source at t (empty for kgl)
std::vector<BlockPiece> blocks_at(Spectrum s, const FieldModel& f, int imax, Tri t);

Page build_E1(Spectrum s, const FieldModel& f, const Window& w);
// strict: escalate undecidable stability flags to WindowTooSmall
Page compute_E2(const Page& e1, bool strict = false);

// assembled whole-entry maps used by E2 and the d1 o d1 audit
struct AssembledBlock {
    F2Matrix to_shadow;  // S(src) -> S(dst), two-torsion legs composed down
    F2Matrix to_tors;    // S(src) -> T(dst), raw two-torsion legs
    bool has_exact = false;
    GroupHom exact_hom;  // FiniteOdd: honest map between realized groups
};

FgAbGroup realized_group(const Entry& e);
AssembledBlock assemble_block(Spectrum s, const FieldModel& f, int imax, Tri src);

}  // namespace sliceforge::slice
