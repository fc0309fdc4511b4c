// sliceforge: slice spectral sequence computations for connective hermitian
// K-theory (kq), its eta-inversion (kw), and connective algebraic K-theory
// (kgl) over quadratically closed, real closed, and odd finite fields, with
// a Milnor-Witt K-theory engine and deterministic chart output.

#include <CLI11.hpp>

#include "sliceforge/chart.hpp"
#include "sliceforge/lines.hpp"
#include "sliceforge/mwk.hpp"
#include "sliceforge/selfcheck.hpp"
#include "sliceforge/slice.hpp"
#include "sliceforge/witt_oracle.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using sliceforge::coeff::FieldModel;
using sliceforge::coeff::Window;

struct WindowOpts {
    Window w;
    std::string range;  // "A..B" applied to both p and w
};

void add_window_flags(CLI::App* cmd, WindowOpts& o)
{
    cmd->add_option("--pmin", o.w.pmin, "window minimum p")->capture_default_str();
    cmd->add_option("--pmax", o.w.pmax, "window maximum p")->capture_default_str();
    cmd->add_option("--wmin", o.w.wmin, "window minimum weight")->capture_default_str();
    cmd->add_option("--wmax", o.w.wmax, "window maximum weight")->capture_default_str();
    cmd->add_option("--qmax", o.w.qmax, "largest slice degree")->capture_default_str();
    cmd->add_option("--imax", o.w.imax, "declared wedge cap for kw")->capture_default_str();
    cmd->add_option("--window", o.range, "A..B sets pmin=wmin=A and pmax=wmax=B");
}

void finalize_window(WindowOpts& o)
{
    if (o.range.empty())
        return;
    auto sep = o.range.find("..");
    if (sep == std::string::npos)
        throw CLI::ValidationError("--window expects A..B, got '" + o.range + "'");
    o.w.pmin = o.w.wmin = std::stoi(o.range.substr(0, sep));
    o.w.pmax = o.w.wmax = std::stoi(o.range.substr(sep + 2));
    if (o.w.pmin > o.w.pmax)
        throw CLI::ValidationError("--window range is empty");
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitOutOfWindow = 3;

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"slice spectral sequences for kq, kw, kgl; Milnor-Witt K-theory engine"};
    app.require_subcommand(1);

    // --- slices ---
    auto* cmd_slices = app.add_subcommand("slices", "print slice decompositions per degree");
    std::string slices_spectrum = "kq";
    int slices_qmax = 10, slices_imax = 8;
    cmd_slices->add_option("--spectrum", slices_spectrum, "kq | kw | kgl")->capture_default_str();
    cmd_slices->add_option("--qmax", slices_qmax, "largest slice degree")->capture_default_str();
    cmd_slices->add_option("--imax", slices_imax, "wedge cap for kw")->capture_default_str();

    // --- e1 / e2 / chart ---
    struct PageOpts {
        std::string field, spectrum = "kq", format = "json", out, from_json;
        bool strict = false;
        int page = 1;
        WindowOpts win;
    };
    PageOpts e1o, e2o, charto;
    charto.format = "svg";
    auto add_page_flags = [](CLI::App* cmd, PageOpts& o, bool need_field = true) {
        auto* f = cmd->add_option("--field", o.field, "C | R | F<q>");
        if (need_field)
            f->required();
        cmd->add_option("--spectrum", o.spectrum, "kq | kw | kgl")->capture_default_str();
        cmd->add_option("--format", o.format, "json | svg | txt")->capture_default_str();
        cmd->add_option("--out", o.out, "output path (default stdout)");
        cmd->add_flag("--strict", o.strict, "escalate undecidable stability to an error");
        add_window_flags(cmd, o.win);
    };
    auto* cmd_e1 = app.add_subcommand("e1", "emit the E1 page");
    add_page_flags(cmd_e1, e1o);
    auto* cmd_e2 = app.add_subcommand("e2", "compute and emit the E2 page");
    add_page_flags(cmd_e2, e2o, false);
    cmd_e2->add_option("--from-json", e2o.from_json, "re-ingest an exported E1 page");
    auto* cmd_chart = app.add_subcommand("chart", "emit a chart of the E1 or E2 page");
    add_page_flags(cmd_chart, charto);
    cmd_chart->add_option("--page", charto.page, "1 (E1) or 2 (E2)")->capture_default_str();

    // --- line0 / line1 ---
    struct LineOpts {
        std::string field, format = "text", out;
        int n = 0, nmin = 0, nmax = 0;
        bool have_n = false, have_range = false;
        WindowOpts win;
    };
    LineOpts l0, l1;
    auto add_line_flags = [](CLI::App* cmd, LineOpts& o) {
        cmd->add_option("--field", o.field, "C | R | F<q>")->required();
        auto* n = cmd->add_option("--n", o.n, "single line index");
        auto* nmin = cmd->add_option("--n-min", o.nmin, "range start");
        auto* nmax = cmd->add_option("--n-max", o.nmax, "range end");
        cmd->add_option("--format", o.format, "text | json")->capture_default_str();
        cmd->add_option("--out", o.out, "output path (default stdout)");
        add_window_flags(cmd, o.win);
        cmd->callback([&o, n, nmin, nmax] {
            o.have_n = n->count() > 0;
            o.have_range = nmin->count() > 0 || nmax->count() > 0;
        });
    };
    auto* cmd_line0 = app.add_subcommand("line0", "zero-line report: pi_{n,n} vs Milnor-Witt");
    add_line_flags(cmd_line0, l0);
    auto* cmd_line1 = app.add_subcommand("line1", "one-line report: pi_{n+1,n}");
    add_line_flags(cmd_line1, l1);

    // --- mw ---
    auto* cmd_mw = app.add_subcommand("mw", "Milnor-Witt K-theory engine");
    cmd_mw->require_subcommand(1);
    std::string mw_field, mw_expr;
    auto* cmd_reduce = cmd_mw->add_subcommand("reduce", "reduce an expression to normal form");
    cmd_reduce->add_option("--field", mw_field, "C | R | F<q>")->required();
    cmd_reduce->add_option("expr", mw_expr, "expression, e.g. \"(2 + [-1] eta) eta\"")->required();
    int gw_q = 0;
    auto* cmd_gwtable = cmd_mw->add_subcommand("gw-table", "brute-force Witt/GW tables for F_q");
    cmd_gwtable->add_option("q", gw_q, "odd prime power <= 49")->required();

    // --- selftest ---
    auto* cmd_selftest = app.add_subcommand("selftest", "run the invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_slices) {
            auto s = sliceforge::slice::parse_spectrum(slices_spectrum);
            std::ostringstream os;
            for (int q = 0; q <= slices_qmax; ++q)
                os << "s_" << q << " " << slices_spectrum << " = "
                   << sliceforge::slice::decomposition_string(s, q, slices_imax) << "\n";
            std::cout << os.str();
            return 0;
        }
        if (*cmd_e1) {
            finalize_window(e1o.win);
            auto s = sliceforge::slice::parse_spectrum(e1o.spectrum);
            FieldModel f = FieldModel::parse(e1o.field);
            auto page = sliceforge::slice::build_E1(s, f, e1o.win.w);
            emit(sliceforge::chart::export_chart(page, e1o.format), e1o.out);
            return 0;
        }
        if (*cmd_e2) {
            finalize_window(e2o.win);
            sliceforge::slice::Page e1page;
            if (!e2o.from_json.empty()) {
                e1page = sliceforge::chart::import_json(read_file(e2o.from_json));
            } else {
                if (e2o.field.empty())
                    throw CLI::RequiredError("--field (or --from-json)");
                auto s = sliceforge::slice::parse_spectrum(e2o.spectrum);
                if (s == sliceforge::slice::Spectrum::kgl) {
                    std::cerr << "kgl carries no differentials; its page is E1-only (use e1)\n";
                    return kExitUsage;
                }
                FieldModel f = FieldModel::parse(e2o.field);
                e1page = sliceforge::slice::build_E1(s, f, e2o.win.w);
            }
            auto e2page = sliceforge::slice::compute_E2(e1page, e2o.strict);
            emit(sliceforge::chart::export_chart(e2page, e2o.format), e2o.out);
            return 0;
        }
        if (*cmd_chart) {
            finalize_window(charto.win);
            auto s = sliceforge::slice::parse_spectrum(charto.spectrum);
            FieldModel f = FieldModel::parse(charto.field);
            auto page = sliceforge::slice::build_E1(s, f, charto.win.w);
            if (charto.page == 2)
                page = sliceforge::slice::compute_E2(page, charto.strict);
            else if (charto.page != 1)
                throw CLI::ValidationError("--page must be 1 or 2");
            emit(sliceforge::chart::export_chart(page, charto.format), charto.out);
            return 0;
        }
        auto run_lines = [&](LineOpts& o, int which) {
            finalize_window(o.win);
            FieldModel f = FieldModel::parse(o.field);
            int lo = o.have_range ? o.nmin : o.n;
            int hi = o.have_range ? o.nmax : o.n;
            if (!o.have_n && !o.have_range) {
                lo = -1;
                hi = 3;
            }
            auto e2 = sliceforge::slice::compute_E2(
                sliceforge::slice::build_E1(sliceforge::slice::Spectrum::kq, f, o.win.w));
            std::ostringstream os;
            for (int n = lo; n <= hi; ++n) {
                auto rep = which == 0 ? sliceforge::lines::zero_line(e2, n)
                                      : sliceforge::lines::one_line(e2, n);
                os << (o.format == "json" ? rep.to_json() : rep.to_string());
            }
            emit(os.str(), o.out);
        };
        if (*cmd_line0) {
            run_lines(l0, 0);
            return 0;
        }
        if (*cmd_line1) {
            run_lines(l1, 1);
            return 0;
        }
        if (*cmd_reduce) {
            FieldModel f = FieldModel::parse(mw_field);
            auto e = sliceforge::mwk::parse_expression(mw_expr, f);
            auto parts = sliceforge::mwk::reduce_graded(e, f);
            std::ostringstream os;
            std::size_t nonzero = 0;
            for (const auto& [deg, nf] : parts)
                nonzero += nf.is_zero() ? 0 : 1;
            if (parts.empty() || nonzero == 0) {
                os << "0\n";
            } else if (parts.size() == 1) {
                os << parts.begin()->second.to_string() << "\n";
            } else {
                for (const auto& [deg, nf] : parts)
                    if (!nf.is_zero())
                        os << "deg " << deg << ": " << nf.to_string() << "\n";
            }
            std::cout << os.str();
            return 0;
        }
        if (*cmd_gwtable) {
            auto oracle = sliceforge::witt::brute_force_witt(gw_q);
            std::ostringstream os;
            os << "W(F" << gw_q << ") = " << oracle.witt_group.to_string() << "\n";
            os << "anisotropic class representatives:\n";
            auto diag_str = [](const std::vector<int>& d) {
                std::string s = "<";
                for (std::size_t i = 0; i < d.size(); ++i)
                    s += (i ? "," : "") + std::to_string(d[i]);
                return s + ">";
            };
            for (std::size_t i = 0; i < oracle.classes.size(); ++i)
                os << "  " << i << ": " << diag_str(oracle.classes[i]) << "\n";
            os << "addition table:\n";
            for (std::size_t i = 0; i < oracle.classes.size(); ++i) {
                os << " ";
                for (std::size_t j = 0; j < oracle.classes.size(); ++j)
                    os << " " << oracle.add[i][j];
                os << "\n";
            }
            os << "multiplication table:\n";
            for (std::size_t i = 0; i < oracle.classes.size(); ++i) {
                os << " ";
                for (std::size_t j = 0; j < oracle.classes.size(); ++j)
                    os << " " << oracle.mul[i][j];
                os << "\n";
            }
            os << "GW(F" << gw_q << ") = Z + torsion of order " << oracle.gw_torsion_order()
               << "\n";
            std::cout << os.str();
            return 0;
        }
        if (*cmd_selftest) {
            auto results = sliceforge::selfcheck::run_all();
            bool all = true;
            for (const auto& r : results) {
                std::cout << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                          << r.detail << ")\n";
                all = all && r.pass;
            }
            std::cout << (all ? "selftest: all suites passed\n" : "selftest: FAILURES above\n");
            return all ? 0 : kExitComputation;
        }
    } catch (const sliceforge::coeff::OutOfWindow& e) {
        std::cerr << "out of window: " << e.what() << "\n";
        return kExitOutOfWindow;
    } catch (const sliceforge::slice::WindowTooSmall& e) {
        std::cerr << "window too small: " << e.what() << "\n";
        return kExitOutOfWindow;
    } catch (const sliceforge::slice::DifferentialSquareNonZero& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const sliceforge::mwk::ParseError& e) {
        std::cerr << "expression parse error: " << e.what() << "\n";
        std::cerr << "grammar: expr := ['-'] term (('+'|'-') term)*; term := [integer] factor*;\n"
                     "         factor := '[' unit ']' | 'eta' | 'eps' | '<' unit '>' | '(' expr ')';\n"
                     "         unit := integer | 'u'\n";
        return kExitUsage;
    } catch (const sliceforge::mwk::UnknownUnit& e) {
        std::cerr << "unknown unit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sliceforge::slice::UnsupportedFormat& e) {
        std::cerr << "unsupported format: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sliceforge::slice::NoSuchSummand& e) {
        std::cerr << "no such summand: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sliceforge::gf::BadField& e) {
        std::cerr << "bad field: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sliceforge::witt::BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    }
    return 0;
}
