#pragma once

#include "sliceforge/abgrp.hpp"
#include "sliceforge/gf.hpp"

#include <stdexcept>
#include <vector>

// Independent brute-force oracle for quadratic forms over F_q: diagonal
// forms up to rank 4, isotropy decided by exhaustive vector search,
// hyperbolic planes split off by explicit orthogonal complements and
// re-diagonalization. No classification theory is assumed; equality of
// classes is decided by stripping f + (-g) to the empty form.

namespace sliceforge::witt {

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& w) : std::runtime_error(w) {}
};

struct WittOracle {
    int q = 0;
    abgrp::FgAbGroup witt_group;                // invariant-factor shape of W(F_q)
    std::vector<std::vector<int>> classes;      // anisotropic representatives (normalized diagonals)
    std::vector<std::vector<int>> add;          // class x class -> class index
    std::vector<int> neg;                       // additive inverse per class
    std::vector<std::vector<int>> mul;          // Witt-ring product

    // class index of an arbitrary diagonal form (entries nonzero)
    int class_of(const std::vector<int>& diagonal) const;

    // GW elements are (rank, Witt class) pairs with matching parity.
    struct GWElt {
        long long rank = 0;
        int witt = 0;
        bool operator==(const GWElt& o) const = default;
    };
    GWElt gw_of(const std::vector<int>& diagonal) const;
    GWElt gw_add(GWElt a, GWElt b) const { return {a.rank + b.rank, add[a.witt][b.witt]}; }
    GWElt gw_mul(GWElt a, GWElt b) const;
    std::size_t gw_torsion_order() const;  // order of the torsion subgroup of GW
};

// q odd prime power, q <= bound (default 49)
WittOracle brute_force_witt(int q, int bound = 49);

// anisotropic kernel of a diagonal form, square-class normalized
std::vector<int> anisotropic_kernel(const gf::GF& f, std::vector<int> diagonal);

}  // namespace sliceforge::witt
