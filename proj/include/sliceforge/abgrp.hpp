#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact linear algebra over Z and F_2: Smith normal form, kernels, images,
// and homology of two-term composable maps between finitely generated
// abelian groups. Everything is immutable after construction and pure.

namespace sliceforge::abgrp {

using Int = boost::multiprecision::cpp_int;

struct CompositeNonZero : std::runtime_error {
    explicit CompositeNonZero(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Integer matrices (row-major, arbitrary precision entries)

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;  // rows*cols entries

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
        : rows(r), cols(c), a(std::move(entries))
    {
        if (a.size() != rows * cols)
            throw std::invalid_argument("IntMatrix: entry count mismatch");
    }

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    std::string to_string() const;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix hcat(const IntMatrix& x, const IntMatrix& y);

// Fraction-free determinant (Bareiss); square matrices only.
Int det(IntMatrix m);

struct SmithResult {
    IntMatrix u, uinv, d, v, vinv;  // u*a*v = d, u,v unimodular
    std::size_t rank = 0;           // number of nonzero diagonal entries
};

// u*a*v = d with d diagonal, d1 | d2 | ... , diagonal nonnegative.
SmithResult smith_normal_form(IntMatrix a);

// Basis of { x : m x = 0 } as columns.
IntMatrix int_kernel_basis(const IntMatrix& m);

// Basis (columns) of the lattice spanned by the columns of l.
IntMatrix lattice_column_basis(const IntMatrix& l);

// Solve basis * x = m columnwise; throws if some column is not in the lattice.
IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& m);

// ---------------------------------------------------------------------------
// F_2 matrices

struct F2Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    F2Matrix() = default;
    F2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static F2Matrix identity(std::size_t n);
    bool is_zero() const;
    bool operator==(const F2Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    std::string to_string() const;
};

F2Matrix f2_mul(const F2Matrix& x, const F2Matrix& y);
F2Matrix f2_add(const F2Matrix& x, const F2Matrix& y);
// Stack x on top of y (same column count).
F2Matrix f2_vcat(const F2Matrix& x, const F2Matrix& y);
F2Matrix f2_hcat(const F2Matrix& x, const F2Matrix& y);

std::size_t f2_rank(F2Matrix m);

struct F2KerIm {
    F2Matrix kernel;  // columns form a basis of ker(m)
    F2Matrix image;   // columns form a basis of im(m)
};
F2KerIm f2_kernel_image(const F2Matrix& m);

// dim( span(ker) / span(im) ), assuming span(im) <= span(ker).
std::size_t f2_quotient_dim(const F2Matrix& ker, const F2Matrix& im);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups with ordered generators

// rel[i] == 0 means generator i is free; rel[i] = d >= 2 means order d.
// The invariant-factor normal form is a derived view (via SNF of the
// relation matrix), so generators can be kept in any task-natural order.
struct FgAbGroup {
    std::vector<Int> rel;
    std::vector<std::string> labels;  // empty or one label per generator

    FgAbGroup() = default;
    explicit FgAbGroup(std::vector<Int> relations, std::vector<std::string> names = {})
        : rel(std::move(relations)), labels(std::move(names)) {}

    static FgAbGroup trivial() { return FgAbGroup{}; }
    static FgAbGroup free_group(std::size_t r, std::vector<std::string> names = {});
    static FgAbGroup cyclic(const Int& d, std::string name = "");
    static FgAbGroup elementary_2(std::size_t k, std::vector<std::string> names = {});

    std::size_t gens() const { return rel.size(); }
    bool is_trivial() const;
    std::size_t free_rank() const;
    // Invariant factors d1 | d2 | ..., each >= 2.
    std::vector<Int> invariant_factors() const;
    std::optional<Int> order() const;
    std::string label(std::size_t i) const;

    // "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const;
    bool same_normal_form(const FgAbGroup& o) const;
};

FgAbGroup direct_sum(const FgAbGroup& x, const FgAbGroup& y);

struct GroupHom {
    FgAbGroup dom, cod;
    IntMatrix mat;  // cod.gens() x dom.gens(); column j = image of generator j

    GroupHom() = default;
    GroupHom(FgAbGroup d, FgAbGroup c, IntMatrix m);

    static GroupHom zero(FgAbGroup d, FgAbGroup c);

    // Each column, multiplied by the domain relation, reduces to zero in cod.
    bool well_defined() const;
    bool is_zero_map() const;
};

GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f

// Is v (in cod generator coordinates) zero in cod, i.e. in the relation lattice?
bool is_zero_in_group(const FgAbGroup& g, const std::vector<Int>& v);

struct HomologyResult {
    FgAbGroup group;  // ker(g)/im(f), free generators first, then torsion
    IntMatrix reps;   // one column per generator: representative in dom(g) coords
};

// ker(g)/im(f) for composable f, g with g o f = 0 (checked).
HomologyResult homology_at(const GroupHom& f, const GroupHom& g);

}  // namespace sliceforge::abgrp
