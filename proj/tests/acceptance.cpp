// Acceptance suite: runs every criterion as an equality check and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include "sliceforge/chart.hpp"
#include "sliceforge/lines.hpp"
#include "sliceforge/mwk.hpp"
#include "sliceforge/selfcheck.hpp"
#include "sliceforge/slice.hpp"
#include "sliceforge/witt_oracle.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <vector>

using namespace sliceforge;
using coeff::FieldModel;
using coeff::Window;
using slice::D1Op;
using slice::Spectrum;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what)
{
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
              << "\n";
    if (!pass)
        ++g_failures;
}

std::vector<FieldModel> models()
{
    return {FieldModel::complex_like(), FieldModel::real_like(), FieldModel::finite_odd(3),
            FieldModel::finite_odd(5), FieldModel::finite_odd(9)};
}

std::string run_cli(const std::string& args)
{
    std::string cmd = std::string(SLICEFORGE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    pclose(pipe);
    return out;
}

// --- criterion 1: slice decompositions --------------------------------------

void criterion_1()
{
    const std::string golden =
        "s_0 kq = MZ\n"
        "s_1 kq = S^{1,1}MZ/2\n"
        "s_2 kq = S^{2,2}MZ/2 v S^{4,2}MZ\n"
        "s_3 kq = S^{3,3}MZ/2 v S^{5,3}MZ/2\n"
        "s_4 kq = S^{4,4}MZ/2 v S^{6,4}MZ/2 v S^{8,4}MZ\n"
        "s_5 kq = S^{5,5}MZ/2 v S^{7,5}MZ/2 v S^{9,5}MZ/2\n"
        "s_6 kq = S^{6,6}MZ/2 v S^{8,6}MZ/2 v S^{10,6}MZ/2 v S^{12,6}MZ\n"
        "s_7 kq = S^{7,7}MZ/2 v S^{9,7}MZ/2 v S^{11,7}MZ/2 v S^{13,7}MZ/2\n"
        "s_8 kq = S^{8,8}MZ/2 v S^{10,8}MZ/2 v S^{12,8}MZ/2 v S^{14,8}MZ/2 v S^{16,8}MZ\n"
        "s_9 kq = S^{9,9}MZ/2 v S^{11,9}MZ/2 v S^{13,9}MZ/2 v S^{15,9}MZ/2 v S^{17,9}MZ/2\n"
        "s_10 kq = S^{10,10}MZ/2 v S^{12,10}MZ/2 v S^{14,10}MZ/2 v S^{16,10}MZ/2 v "
        "S^{18,10}MZ/2 v S^{20,10}MZ\n";
    bool pass = run_cli("slices --spectrum kq --qmax 10") == golden;
    for (int q = -3; q < 0; ++q)
        pass = pass && slice::slice_decomposition(Spectrum::kq, q).empty() &&
               slice::slice_decomposition(Spectrum::kw, q, 8).empty() &&
               slice::slice_decomposition(Spectrum::kgl, q).empty();
    report(1, pass, "slice decompositions, exact string match, q = 0..10; negative q empty");
}

// --- criterion 2: d1 case tables ---------------------------------------------

void criterion_2()
{
    using Row = std::tuple<int, int, D1Op, D1Op, D1Op>;
    const D1Op N = D1Op::None, S31 = D1Op::Sq3Sq1, D = D1Op::DSq2Sq1, S2 = D1Op::Sq2,
               S2R = D1Op::Sq2RhoSq1, S2P = D1Op::Sq2Pr, T = D1Op::Tau, TP = D1Op::TauPr;
    const std::vector<Row> kq_rows = {
        {0, 0, N, S2P, N},
        {1, 0, D, S2, N},
        {2, 0, S31, S2, N},   {2, 2, N, S2P, TP},
        {3, 0, S31, S2, N},   {3, 2, D, S2R, T},
        {4, 0, S31, S2, N},   {4, 2, S31, S2R, T},  {4, 4, N, S2P, N},
        {5, 0, S31, S2, N},   {5, 2, S31, S2R, T},  {5, 4, D, S2, N},
        {6, 0, S31, S2, N},   {6, 2, S31, S2R, T},  {6, 4, S31, S2, N},  {6, 6, N, S2P, TP},
        {7, 0, S31, S2, N},   {7, 2, S31, S2R, T},  {7, 4, S31, S2, N},  {7, 6, D, S2R, T},
        {8, 0, S31, S2, N},   {8, 2, S31, S2R, T},  {8, 4, S31, S2, N},  {8, 6, S31, S2R, T},
        {8, 8, N, S2P, N},
        {9, 0, S31, S2, N},   {9, 2, S31, S2R, T},  {9, 4, S31, S2, N},  {9, 6, S31, S2R, T},
        {9, 8, D, S2, N},
        {10, 0, S31, S2, N},  {10, 2, S31, S2R, T}, {10, 4, S31, S2, N}, {10, 6, S31, S2R, T},
        {10, 8, S31, S2, N},  {10, 10, N, S2P, TP},
    };
    bool pass = true;
    std::size_t seen = 0;
    for (const auto& [q, i, a, b, c] : kq_rows) {
        auto spec = slice::d1_spec(Spectrum::kq, q, i);
        pass = pass && spec.comp[0] == a && spec.comp[1] == b && spec.comp[2] == c &&
               slice::d1_bidegree_audit(spec);
        ++seen;
    }
    std::size_t expected = 0;
    for (int q = 0; q <= 10; ++q)
        expected += static_cast<std::size_t>(q / 2 + 1);
    pass = pass && seen == expected;
    for (int q = 0; q <= 10; ++q)
        for (int i = 0; i <= 12; i += 2) {
            auto spec = slice::d1_spec(Spectrum::kw, q, i);
            bool even = i % 4 == 0;
            pass = pass && spec.comp[0] == S31 && spec.comp[1] == (even ? S2 : S2R) &&
                   spec.comp[2] == (even ? N : T) && slice::d1_bidegree_audit(spec);
        }
    report(2, pass, "d1 case tables vs independent transcription, q <= 10, with bidegree audit");
}

// --- criterion 3: multiplicative consistency ----------------------------------

void criterion_3()
{
    bool pass = true;
    for (int m = 0; 2 * m <= 12; ++m)
        for (int n = 0; 2 * m + n <= 12; ++n)
            pass = pass && slice::mult_d1_check(FieldModel::real_like(), m, n);
    report(3, pass, "multiplicative d1 formula matches the case tables for 2m + n <= 12");
}

// --- criterion 4: d1 o d1 = 0 --------------------------------------------------

void criterion_4()
{
    bool pass = true;
    std::string detail;
    Window w;
    for (const auto& f : models())
        for (auto s : {Spectrum::kq, Spectrum::kw}) {
            try {
                slice::compute_E2(slice::build_E1(s, f, w));
            } catch (const std::exception& e) {
                pass = false;
                detail += " [" + slice::spectrum_name(s) + "/" + f.name() + ": " + e.what() + "]";
            }
        }
    report(4, pass, "d1 o d1 = 0 on full default windows, (kq, kw) x (C, R, F3, F5, F9)" + detail);
}

// --- criterion 5: one-line values ----------------------------------------------

void criterion_5()
{
    bool pass = true;
    Window w;
    for (const auto& f : models()) {
        auto e2 = slice::compute_E2(slice::build_E1(Spectrum::kq, f, w));
        auto r1 = lines::one_line(e2, 1);
        pass = pass && r1.value == "Z/2" && r1.dual_path_agree;
        for (int n = 2; n <= 5; ++n) {
            auto rn = lines::one_line(e2, n);
            pass = pass && rn.value == "0" && rn.dual_path_agree;
        }
        auto r0 = lines::one_line(e2, 0);
        bool complex_like = f.kind == coeff::FieldKind::ComplexLike;
        pass = pass && r0.value == (complex_like ? "Z/2" : "Z/2 + Z/2") && r0.dual_path_agree;
    }
    report(5, pass,
           "pi_{2,1} = Z/2; pi_{n+1,n} = 0 for n = 2..5; pi_{1,0} = (Z/2)^2 (Z/2 over C); "
           "direct and page computations agree");
}

// --- criterion 6: zero-line over finite fields ----------------------------------

void criterion_6()
{
    bool pass = true;
    Window w;
    for (int q : {3, 5, 7, 9, 11, 13}) {
        FieldModel f = FieldModel::finite_odd(q);
        auto e2 = slice::compute_E2(slice::build_E1(Spectrum::kq, f, w));
        auto rep = lines::zero_line(e2, 0);
        bool graded_ok = rep.graded.size() == 2 && rep.graded[0].q == 0 &&
                         rep.graded[0].group == "Z" && rep.graded[1].q == 1 &&
                         rep.graded[1].group == "Z/2";
        auto oracle = witt::brute_force_witt(q);
        bool oracle_ok = oracle.gw_torsion_order() == 2;  // GW = Z + Z/2
        pass = pass && graded_ok && oracle_ok && rep.verdict == "match";
    }
    report(6, pass, "zero-line graded {Z, Z/2} = GW(F_q) from the Witt oracle, q in {3,5,7,9,11,13}");
}

// --- criterion 7: Milnor-Witt engine ---------------------------------------------

void criterion_7()
{
    bool pass = true;
    std::string detail;

    // relations and eps-commutativity, exhaustive units for q <= 49
    for (const auto& suite : selfcheck::run_all())
        if (suite.name == "mwk-relations" && !suite.pass) {
            pass = false;
            detail += " [relations: " + suite.detail + "]";
        }

    // gw_invariants is a ring isomorphism onto the oracle table
    for (int q : {3, 5, 7, 9}) {
        FieldModel f = FieldModel::finite_odd(q);
        witt::WittOracle o = witt::brute_force_witt(q);
        int s = f.fq->least_nonsquare();
        std::vector<std::vector<int>> forms;
        for (int rank = 0; rank <= 2; ++rank)
            for (int ns = 0; ns <= rank; ++ns) {
                std::vector<int> d(rank, 1);
                for (int i = 0; i < ns; ++i)
                    d[i] = s;
                forms.push_back(d);
            }
        auto inv = [&](const std::vector<int>& d) {
            mwk::MWExpression e = mwk::mw_int(0);
            for (int a : d)
                e = mwk::mw_add(e, mwk::mw_form(f, a));
            return mwk::gw_invariants(e, f);
        };
        for (const auto& d1 : forms)
            for (const auto& d2 : forms) {
                auto i1 = inv(d1), i2 = inv(d2);
                bool oracle_eq = o.gw_of(d1) == o.gw_of(d2);
                bool inv_eq = i1.rank == i2.rank && i1.extra == i2.extra;
                if (oracle_eq != inv_eq)
                    pass = false;
                std::vector<int> sum = d1;
                sum.insert(sum.end(), d2.begin(), d2.end());
                auto is = inv(sum);
                if (is.rank != i1.rank + i2.rank || is.extra[0] != (i1.extra[0] + i2.extra[0]) % 2)
                    pass = false;
                std::vector<int> prod;
                for (int a : d1)
                    for (int b : d2)
                        prod.push_back(f.fq->mul(a, b));
                auto ip = inv(prod);
                if (ip.rank != i1.rank * i2.rank ||
                    ip.extra[0] != (i1.rank * i2.extra[0] + i2.rank * i1.extra[0]) % 2)
                    pass = false;
                if (!(o.gw_of(prod) == o.gw_mul(o.gw_of(d1), o.gw_of(d2))))
                    pass = false;
            }
    }

    // eta-quotient produces Milnor symbols
    {
        FieldModel f5 = FieldModel::finite_odd(5);
        auto m = mwk::quotient_eta(mwk::parse_expression("[2][3]", f5), f5);
        if (m.symbol_string() != "{2,3}")
            pass = false;
    }

    // eta-localization lands in W(F)[eta^{+-1}] with the oracle Witt groups
    {
        if (witt::brute_force_witt(3).witt_group.to_string() != "Z/4")
            pass = false;
        if (witt::brute_force_witt(5).witt_group.to_string() != "Z/2 + Z/2")
            pass = false;
        FieldModel f5 = FieldModel::finite_odd(5);
        auto wclass = mwk::localize_eta(mwk::parse_expression("<2> - <1>", f5), f5);
        auto doubled = mwk::localize_eta(mwk::parse_expression("2(<2> - <1>)", f5), f5);
        if (wclass.is_zero() || !doubled.is_zero())
            pass = false;
        FieldModel f3 = FieldModel::finite_odd(3);
        auto eta = mwk::localize_eta(mwk::parse_expression("eta", f3), f3);
        if (!mwk::witt_laurent_is_unit(f3, eta))
            pass = false;
    }
    report(7, pass,
           "presentation relations exhaustive (q <= 49); gw_invariants = oracle GW ring; "
           "eta-quotient and eta-localization" + detail);
}

// --- criterion 8: operation identities -------------------------------------------

void criterion_8()
{
    bool pass = true;
    for (const auto& f : models())
        for (int p = -4; p <= 12; ++p)
            for (int q = -4; q <= 12; ++q) {
                auto sq1sq1 = abgrp::f2_mul(coeff::h_op_matrix(f, coeff::HOp::Sq1, p + 1, q),
                                            coeff::h_op_matrix(f, coeff::HOp::Sq1, p, q));
                pass = pass && sq1sq1.is_zero();
                auto a = abgrp::f2_mul(coeff::h_op_matrix(f, coeff::HOp::Sq1, p + 2, q + 1),
                                       coeff::h_op_matrix(f, coeff::HOp::Sq2, p, q));
                auto b = abgrp::f2_mul(coeff::h_op_matrix(f, coeff::HOp::Sq2, p + 1, q),
                                       coeff::h_op_matrix(f, coeff::HOp::Sq1, p, q));
                pass = pass &&
                       coeff::h_op_matrix(f, coeff::HOp::Q1, p, q) == abgrp::f2_add(a, b);
            }
    for (int qf : {3, 5, 7, 9, 11, 13}) {
        FieldModel f = FieldModel::finite_odd(qf);
        for (int p = 0; p <= 10; ++p)
            for (int q = 0; q <= 12; ++q)
                pass = pass && coeff::h_dim(f, p, q) == coeff::H_int(f, p, q).mod2_dim +
                                                            coeff::H_int(f, p + 1, q).tors2_dim;
    }
    report(8, pass,
           "Sq^1Sq^1 = 0 and Q_1 = Sq^1Sq^2 + Sq^2Sq^1 as maps; universal-coefficient orders "
           "over finite fields");
}

// --- criterion 9: kgl corner ------------------------------------------------------

void criterion_9()
{
    bool pass = true;
    pass = pass && lines::kgl_corner(FieldModel::finite_odd(3)).exact->to_string() == "Z/2";
    pass = pass && lines::kgl_corner(FieldModel::finite_odd(5)).exact->to_string() == "Z/4";
    pass = pass && lines::kgl_corner(FieldModel::finite_odd(7)).exact->to_string() == "Z/6";
    auto cr = lines::kgl_corner(FieldModel::real_like());
    pass = pass && !cr.exact && cr.symbol == "F^x" && cr.mod2_dim == 1;
    auto cc = lines::kgl_corner(FieldModel::complex_like());
    pass = pass && !cc.exact && cc.symbol == "F^x" && cc.mod2_dim == 0;
    report(9, pass, "kgl corner: Z/(q-1) for q = 3, 5, 7; F^x symbol with correct mod-2 part");
}

// --- criterion 10: determinism ----------------------------------------------------

void criterion_10()
{
    const std::vector<std::string> invocations = {
        "chart --field F3 --spectrum kq --format json",
        "chart --field R --spectrum kq --format svg",
        "chart --field R --spectrum kw --page 2 --format txt",
        "e2 --field C --spectrum kq --format json",
        "e1 --field F9 --spectrum kgl --format json",
        "line0 --field F5 --n 0 --format json",
        "line1 --field R --n-min -1 --n-max 3 --format json",
        "mw gw-table 9",
        "mw reduce --field F3 \"(2 + [-1] eta) eta\"",
        "slices --spectrum kw --qmax 6 --imax 6",
    };
    std::string first, second;
    for (const auto& cmd : invocations)
        first += "$ " + cmd + "\n" + run_cli(cmd);
    for (const auto& cmd : invocations)
        second += "$ " + cmd + "\n" + run_cli(cmd);
    bool pass = !first.empty() && first == second;
    report(10, pass, "two consecutive full runs produce byte-identical artifacts");
}

}  // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
