#pragma once

#include "sliceforge/mwk.hpp"
#include "sliceforge/slice.hpp"

#include <optional>
#include <string>
#include <vector>

// Zero- and one-line assembly for very effective hermitian K-theory: the
// slice-graded pieces of pi_{n,n} and pi_{n+1,n} from the E2 page, the
// directly computed one-line groups, the Milnor-Witt comparison, and the
// unit-group corner of connective algebraic K-theory.

namespace sliceforge::lines {

using abgrp::FgAbGroup;
using coeff::FieldModel;
using coeff::Window;

struct GradedPiece {
    int q = 0;
    std::string group;
    bool exact = false;
    slice::Stability flag = slice::Stability::Unknown;
};

struct LineReport {
    int line = 0;  // 0 or 1
    std::string field;
    int n = 0;
    bool in_window = true;          // line visible inside the page window
    std::vector<GradedPiece> graded;

    // line 0
    std::string mwk_group;          // K^MW_n of the model, frozen basis
    std::string verdict;            // "match" | "reported" | "unknown"
    std::vector<std::string> caveats;

    // line 1
    std::vector<std::string> direct_groups;  // the three displayed groups, q = 2, 1, 0
    bool dual_path_agree = false;
    std::string value;                       // reading of pi_{n+1,n} where licensed
    std::string extension_note;
    std::string ses_note;                    // n = -1 short exact sequence

    std::string to_string() const;
    std::string to_json() const;
};

// e2 must be a computed page (r = 2) for kq over the report's field
LineReport zero_line(const slice::Page& e2, int n);
LineReport one_line(const slice::Page& e2, int n);

// direct one-line groups from the coefficient module alone, q = 2, 1, 0
std::vector<std::string> one_line_direct_groups(const FieldModel& f, int n);

struct KglCorner {
    std::optional<FgAbGroup> exact;
    std::string symbol;
    int mod2_dim = 0;
    std::vector<std::string> trace;
    std::string to_string() const;
};

KglCorner kgl_corner(const FieldModel& f);

}  // namespace sliceforge::lines
