#include "sliceforge/selfcheck.hpp"

#include "sliceforge/chart.hpp"
#include "sliceforge/lines.hpp"
#include "sliceforge/mwk.hpp"
#include "sliceforge/slice.hpp"
#include "sliceforge/witt_oracle.hpp"

#include <random>
#include <sstream>

namespace sliceforge::selfcheck {

using abgrp::F2Matrix;
using abgrp::IntMatrix;
using coeff::FieldModel;
using coeff::HOp;
using coeff::Window;

namespace {

std::vector<FieldModel> ci_models()
{
    return {FieldModel::complex_like(), FieldModel::real_like(), FieldModel::finite_odd(3),
            FieldModel::finite_odd(5), FieldModel::finite_odd(9)};
}

SuiteResult snf_suite()
{
    std::mt19937 rng(1717);
    std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        for (auto& x : a.a)
            x = val(rng);
        auto s = abgrp::smith_normal_form(a);
        if (!(abgrp::mul(abgrp::mul(s.u, a), s.v) == s.d))
            return {"abgrp-snf", false, "u*a*v != d"};
        auto du = abgrp::det(s.u), dv = abgrp::det(s.v);
        if (!((du == 1 || du == -1) && (dv == 1 || dv == -1)))
            return {"abgrp-snf", false, "transforms not unimodular"};
        for (std::size_t i = 0; i + 1 < s.rank; ++i)
            if (s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0)
                return {"abgrp-snf", false, "divisibility chain broken"};
    }
    return {"abgrp-snf", true, "60 random matrices"};
}

SuiteResult f2_suite()
{
    std::mt19937 rng(2727);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        F2Matrix m(r, c);
        for (auto& x : m.a)
            x = rng() & 1;
        auto ki = abgrp::f2_kernel_image(m);
        if (ki.kernel.cols + ki.image.cols != c)
            return {"abgrp-f2", false, "rank-nullity violated"};
        if (!abgrp::f2_mul(m, ki.kernel).is_zero())
            return {"abgrp-f2", false, "kernel basis not annihilated"};
    }
    return {"abgrp-f2", true, "rank-nullity on 60 random matrices"};
}

SuiteResult homology_suite()
{
    using namespace abgrp;
    GroupHom f(FgAbGroup::free_group(1), FgAbGroup::free_group(1),
               IntMatrix(1, 1, {Int(2)}));
    GroupHom g = GroupHom::zero(FgAbGroup::free_group(1), FgAbGroup::trivial());
    if (homology_at(f, g).group.to_string() != "Z/2")
        return {"abgrp-homology", false, "Z --2--> Z --> 0"};
    FgAbGroup z8 = FgAbGroup::cyclic(8);
    GroupHom f2(z8, z8, IntMatrix(1, 1, {Int(4)}));
    GroupHom g2(z8, z8, IntMatrix(1, 1, {Int(4)}));
    if (homology_at(f2, g2).group.to_string() != "Z/2")
        return {"abgrp-homology", false, "Z/8 self-maps"};
    return {"abgrp-homology", true, "kernel/image bookkeeping"};
}

SuiteResult coeff_ops_suite()
{
    for (const auto& f : ci_models())
        for (int p = -3; p <= 11; ++p)
            for (int q = -3; q <= 12; ++q) {
                auto sq1sq1 = abgrp::f2_mul(coeff::h_op_matrix(f, HOp::Sq1, p + 1, q),
                                            coeff::h_op_matrix(f, HOp::Sq1, p, q));
                if (!sq1sq1.is_zero())
                    return {"coeff-op-identities", false, "Sq^1 Sq^1 != 0 over " + f.name()};
                auto a = abgrp::f2_mul(coeff::h_op_matrix(f, HOp::Sq1, p + 2, q + 1),
                                       coeff::h_op_matrix(f, HOp::Sq2, p, q));
                auto b = abgrp::f2_mul(coeff::h_op_matrix(f, HOp::Sq2, p + 1, q),
                                       coeff::h_op_matrix(f, HOp::Sq1, p, q));
                if (!(coeff::h_op_matrix(f, HOp::Q1, p, q) == abgrp::f2_add(a, b)))
                    return {"coeff-op-identities", false, "Q_1 mismatch over " + f.name()};
                auto dpr = abgrp::f2_mul(coeff::partial_matrix(f, p, q), coeff::pr_matrix(f, p, q));
                if (!dpr.is_zero())
                    return {"coeff-op-identities", false, "partial o pr != 0 over " + f.name()};
                auto prd = abgrp::f2_mul(
                    coeff::pr_matrix(f, p + 1, q),
                    abgrp::f2_mul(coeff::tors2_to_mod2_matrix(f, p + 1, q),
                                  coeff::partial_matrix(f, p, q)));
                if (!(prd == coeff::h_op_matrix(f, HOp::Sq1, p, q)))
                    return {"coeff-op-identities", false, "pr o partial != Sq^1 over " + f.name()};
            }
    return {"coeff-op-identities", true, "Sq^1Sq^1, Q_1, Bockstein compatibility"};
}

SuiteResult coeff_uc_suite()
{
    for (int qf : {3, 5, 7, 9, 13}) {
        FieldModel f = FieldModel::finite_odd(qf);
        for (int p = 0; p <= 10; ++p)
            for (int q = 0; q <= 12; ++q)
                if (coeff::h_dim(f, p, q) !=
                    coeff::H_int(f, p, q).mod2_dim + coeff::H_int(f, p + 1, q).tors2_dim)
                    return {"coeff-uc-orders", false, "universal coefficients fail over F" +
                                                          std::to_string(qf)};
    }
    return {"coeff-uc-orders", true, "|h| = |H/2| * |H'[2]| over finite fields"};
}

SuiteResult mwk_relations_suite()
{
    for (int q = 3; q <= 49; ++q) {
        if (!gf::is_odd_prime_power(q))
            continue;
        FieldModel f = FieldModel::finite_odd(q);
        mwk::MWExpression eps = mwk::mw_eps(f);
        for (int u = 1; u < q; ++u)
            for (int v = 1; v < q; ++v) {
                using namespace mwk;
                MWExpression r1 = mw_unit_symbol(f.fq->mul(u, v));
                r1 = mw_add(r1, mw_scale(-1, mw_unit_symbol(u)));
                r1 = mw_add(r1, mw_scale(-1, mw_unit_symbol(v)));
                r1 = mw_add(r1, mw_scale(-1, mw_mul(mw_eta(), mw_mul(mw_unit_symbol(u),
                                                                     mw_unit_symbol(v)))));
                for (const auto& [deg, nf] : reduce_graded(r1, f))
                    if (!nf.is_zero())
                        return {"mwk-relations", false, "eta-log relation fails over F" +
                                                            std::to_string(q)};
                if (f.fq->add(u, v) == 1 &&
                    !reduce(mw_mul(mw_unit_symbol(u), mw_unit_symbol(v)), f).is_zero())
                    return {"mwk-relations", false, "Steinberg fails over F" + std::to_string(q)};
                MWExpression comm = mw_mul(mw_unit_symbol(u), mw_unit_symbol(v));
                comm = mw_add(comm, mw_scale(-1, mw_mul(eps, mw_mul(mw_unit_symbol(v),
                                                                    mw_unit_symbol(u)))));
                for (const auto& [deg, nf] : reduce_graded(comm, f))
                    if (!nf.is_zero())
                        return {"mwk-relations", false, "eps-commutativity fails over F" +
                                                            std::to_string(q)};
            }
        auto r4 = mwk::parse_expression("(2 + [-1] eta) eta", f);
        for (const auto& [deg, nf] : mwk::reduce_graded(r4, f))
            if (!nf.is_zero())
                return {"mwk-relations", false, "hyperbolic relation fails over F" +
                                                    std::to_string(q)};
    }
    return {"mwk-relations", true, "presentation relations, exhaustive units, q <= 49"};
}

SuiteResult mwk_gw_suite()
{
    for (int q : {3, 5, 9}) {
        FieldModel f = FieldModel::finite_odd(q);
        witt::WittOracle o = witt::brute_force_witt(q);
        if (o.gw_torsion_order() != 2)
            return {"mwk-gw-oracle", false, "GW torsion order != 2 for q=" + std::to_string(q)};
        int s = f.fq->least_nonsquare();
        using namespace mwk;
        auto inv_rank = [&](const std::vector<int>& d) {
            MWExpression e = mw_int(0);
            for (int a : d)
                e = mw_add(e, mw_form(f, a));
            return gw_invariants(e, f);
        };
        auto i1 = inv_rank({1}), is = inv_rank({s}), i2 = inv_rank({1, s});
        bool ok = i1.rank == 1 && i1.extra[0] == 0 && is.rank == 1 && is.extra[0] == 1 &&
                  i2.rank == 2 && i2.extra[0] == 1;
        if (!ok)
            return {"mwk-gw-oracle", false, "rank/disc invariants broken for q=" + std::to_string(q)};
        if (o.gw_of({1, s}) != o.gw_add(o.gw_of({1}), o.gw_of({s})))
            return {"mwk-gw-oracle", false, "oracle addition broken for q=" + std::to_string(q)};
    }
    return {"mwk-gw-oracle", true, "invariants against the brute-force Witt tables"};
}

SuiteResult slice_shape_suite()
{
    for (int q = 0; q <= 14; ++q) {
        auto s = slice::slice_decomposition(slice::Spectrum::kq, q);
        if (s.size() != static_cast<std::size_t>(q / 2 + 1))
            return {"slice-shape", false, "summand count"};
        int integral = 0;
        for (auto& sm : s)
            integral += sm.coeff == slice::CoeffKind::Integral ? 1 : 0;
        if (integral != (q % 2 == 0 ? 1 : 0))
            return {"slice-shape", false, "integral summand parity"};
    }
    if (slice::decomposition_string(slice::Spectrum::kq, 2) != "S^{2,2}MZ/2 v S^{4,2}MZ")
        return {"slice-shape", false, "s_2 wedge"};
    return {"slice-shape", true, "floor(q/2)+1 summands, one integral iff q even"};
}

SuiteResult d1_audit_suite()
{
    for (int q = 0; q <= 10; ++q) {
        for (int i = 0; i <= (q % 2 == 0 ? q : q - 1); i += 2)
            if (!slice::d1_bidegree_audit(slice::d1_spec(slice::Spectrum::kq, q, i)))
                return {"slice-d1-audit", false, "kq bidegree audit"};
        for (int i = 0; i <= 10; i += 2)
            if (!slice::d1_bidegree_audit(slice::d1_spec(slice::Spectrum::kw, q, i)))
                return {"slice-d1-audit", false, "kw bidegree audit"};
    }
    return {"slice-d1-audit", true, "operation bidegree = suspension gap, q <= 10"};
}

SuiteResult mult_d1_suite()
{
    for (int m = 0; 2 * m <= 12; ++m)
        for (int n = 0; 2 * m + n <= 12; ++n)
            if (!slice::mult_d1_check(FieldModel::real_like(), m, n))
                return {"slice-mult-d1", false,
                        "disagreement at m=" + std::to_string(m) + ", n=" + std::to_string(n)};
    return {"slice-mult-d1", true, "multiplicative differential vs case table, 2m+n <= 12"};
}

SuiteResult d1_square_suite()
{
    Window w;
    for (const auto& f : ci_models())
        for (auto s : {slice::Spectrum::kq, slice::Spectrum::kw}) {
            try {
                slice::compute_E2(slice::build_E1(s, f, w));
            } catch (const slice::DifferentialSquareNonZero& e) {
                return {"slice-d1-square", false,
                        slice::spectrum_name(s) + " over " + f.name() + ": " + e.what()};
            }
        }
    return {"slice-d1-square", true, "d1 o d1 = 0, (kq, kw) x (C, R, F3, F5, F9)"};
}

SuiteResult window_independence_suite()
{
    Window small;
    small.pmin = -2;
    small.pmax = 4;
    small.wmin = -2;
    small.wmax = 4;
    small.qmax = 5;
    Window big;
    big.pmin = -4;
    big.pmax = 6;
    big.wmin = -4;
    big.wmax = 6;
    big.qmax = 8;
    for (const auto& f : ci_models()) {
        slice::Page ps = slice::build_E1(slice::Spectrum::kq, f, small);
        slice::Page pb = slice::build_E1(slice::Spectrum::kq, f, big);
        for (const auto& [t, e] : ps.entries) {
            auto it = pb.entries.find(t);
            if (it == pb.entries.end() || it->second.summands.size() != e.summands.size())
                return {"slice-window-independence", false, "entry changed over " + f.name()};
            for (std::size_t k = 0; k < e.summands.size(); ++k)
                if (e.summands[k].label != it->second.summands[k].label)
                    return {"slice-window-independence", false, "label changed over " + f.name()};
        }
    }
    return {"slice-window-independence", true, "entries unchanged under enlargement"};
}

SuiteResult chart_roundtrip_suite()
{
    Window w;
    for (const auto& f : ci_models()) {
        slice::Page e1 = slice::build_E1(slice::Spectrum::kq, f, w);
        std::string doc = chart::export_json(e1);
        slice::Page back = chart::import_json(doc);
        std::string direct = chart::export_json(slice::compute_E2(e1));
        std::string via = chart::export_json(slice::compute_E2(back));
        if (direct != via)
            return {"chart-roundtrip", false, "round-trip changed E2 over " + f.name()};
    }
    return {"chart-roundtrip", true, "export/import reproduces identical E2 documents"};
}

SuiteResult lines_dual_path_suite()
{
    Window w;
    for (const auto& f : ci_models()) {
        slice::Page e2 = slice::compute_E2(slice::build_E1(slice::Spectrum::kq, f, w));
        for (int n = 0; n <= 5; ++n) {
            lines::LineReport rep = lines::one_line(e2, n);
            if (!rep.dual_path_agree)
                return {"lines-dual-path", false,
                        "paths disagree over " + f.name() + " at n=" + std::to_string(n)};
        }
        for (int n = 2; n <= 5; ++n)
            if (lines::one_line(e2, n).value != "0")
                return {"lines-dual-path", false,
                        "nonvanishing pi_{n+1,n} over " + f.name() + " at n=" + std::to_string(n)};
    }
    return {"lines-dual-path", true, "direct groups = page homology, n = 0..5"};
}

SuiteResult determinism_suite()
{
    Window w;
    FieldModel f = FieldModel::finite_odd(3);
    auto run = [&]() {
        slice::Page e1 = slice::build_E1(slice::Spectrum::kq, f, w);
        slice::Page e2 = slice::compute_E2(e1);
        return chart::export_json(e1) + chart::export_svg(e1) + chart::export_txt(e2) +
               lines::zero_line(e2, 0).to_json();
    };
    if (run() != run())
        return {"determinism", false, "back-to-back runs differ"};
    return {"determinism", true, "byte-identical repeated artifacts"};
}

}  // namespace

std::vector<SuiteResult> run_all()
{
    return {
        snf_suite(),
        f2_suite(),
        homology_suite(),
        coeff_ops_suite(),
        coeff_uc_suite(),
        mwk_relations_suite(),
        mwk_gw_suite(),
        slice_shape_suite(),
        d1_audit_suite(),
        mult_d1_suite(),
        d1_square_suite(),
        window_independence_suite(),
        chart_roundtrip_suite(),
        lines_dual_path_suite(),
        determinism_suite(),
    };
}

}  // namespace sliceforge::selfcheck
