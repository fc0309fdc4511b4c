#include "sliceforge/chart.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace sliceforge::chart {

using json = nlohmann::ordered_json;
using slice::CoeffKind;
using slice::Entry;
using slice::Page;
using slice::Stability;
using slice::Tri;

namespace {

constexpr int kSchemaVersion = 1;

std::string summand_group_string(const slice::SummandInstance& s)
{
    if (s.kind == CoeffKind::Mod2)
        return "Z/2";
    if (s.exact)
        return s.exact->to_string();
    return s.symbol;
}

json window_json(const coeff::Window& w)
{
    json j;
    j["pmin"] = w.pmin;
    j["pmax"] = w.pmax;
    j["wmin"] = w.wmin;
    j["wmax"] = w.wmax;
    j["qmax"] = w.qmax;
    j["imax"] = w.imax;
    return j;
}

coeff::Window window_from_json(const json& j)
{
    coeff::Window w;
    w.pmin = j.at("pmin");
    w.pmax = j.at("pmax");
    w.wmin = j.at("wmin");
    w.wmax = j.at("wmax");
    w.qmax = j.at("qmax");
    w.imax = j.at("imax");
    return w;
}

json matrix_json(const abgrp::F2Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(int(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string export_json(const Page& page)
{
    json j;
    j["schema"] = "sliceforge/chart";
    j["version"] = kSchemaVersion;
    j["page"] = page.r;
    j["spectrum"] = slice::spectrum_name(page.spectrum);
    j["field"] = page.field.name();
    j["window"] = window_json(page.window);

    json entries = json::array();
    if (page.r == 1)
        for (const auto& [t, e] : page.entries) {
        json je;
        je["p"] = t.p;
        je["q"] = t.q;
        je["w"] = t.w;
        json summands = json::array();
        for (const auto& s : e.summands) {
            json js;
            js["i"] = s.i;
            js["kind"] = s.kind == CoeffKind::Mod2 ? "Z/2" : "Z";
            js["cell"] = json::array({s.cell_p, s.cell_q});
            js["label"] = s.label;
            js["group"] = summand_group_string(s);
            if (s.kind == CoeffKind::Integral) {
                js["mod2"] = s.mod2_dim;
                js["tors2"] = s.tors2_dim;
            }
            summands.push_back(js);
        }
        je["summands"] = summands;
        entries.push_back(je);
    }
    j["entries"] = entries;

    if (page.r == 1) {
        json diffs = json::array();
        for (const auto& [t, pieces] : page.blocks) {
            json jd;
            jd["from"] = json::array({t.p, t.q, t.w});
            jd["to"] = json::array({t.p - 1, t.q + 1, t.w});
            json blocks = json::array();
            for (const auto& piece : pieces) {
                json jb;
                jb["src_i"] = piece.src_i;
                jb["dst_i"] = piece.dst_i;
                jb["op"] = slice::d1_op_name(piece.op);
                jb["matrix"] = matrix_json(piece.mat);
                blocks.push_back(jb);
            }
            jd["blocks"] = blocks;
            diffs.push_back(jd);
        }
        j["differentials"] = diffs;
    } else {
        json e2 = json::array();
        for (const auto& [t, e] : page.e2) {
            json je;
            je["p"] = t.p;
            je["q"] = t.q;
            je["w"] = t.w;
            je["group"] = e.group.to_string();
            je["exact"] = e.exact;
            je["tors2_coker"] = e.tors2_coker_dim;
            je["stable"] = e.flag == Stability::Stable ? "yes" : "unknown";
            e2.push_back(je);
        }
        j["e2"] = e2;
    }
    if (!page.truncation_suspects.empty()) {
        json ts = json::array();
        for (const auto& t : page.truncation_suspects)
            ts.push_back(json::array({t.p, t.q, t.w}));
        j["truncation_suspects"] = ts;
    }
    return j.dump(2) + "\n";
}

Page import_json(const std::string& text)
{
    json j = json::parse(text);
    if (j.at("schema") != "sliceforge/chart")
        throw slice::UnsupportedFormat("not a sliceforge chart document");
    if (j.at("version") != kSchemaVersion)
        throw slice::UnsupportedFormat("unsupported chart schema version");
    if (j.at("page") != 1)
        throw slice::UnsupportedFormat("only page-1 charts can be re-ingested");
    slice::Spectrum s = slice::parse_spectrum(j.at("spectrum"));
    coeff::FieldModel f = coeff::FieldModel::parse(j.at("field"));
    coeff::Window w = window_from_json(j.at("window"));

    Page rebuilt = slice::build_E1(s, f, w);
    // validate the document against the rebuild
    std::string direct = export_json(rebuilt);
    json jd = json::parse(direct);
    if (jd.at("entries") != j.at("entries") || jd.at("differentials") != j.at("differentials"))
        throw slice::UnsupportedFormat(
            "chart document does not match a rebuild from its parameters");
    return rebuilt;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

struct Mark {
    int p, q;
    bool integral;
    int count;  // mod-2 multiplicity at this spot
};

void svg_panel(std::ostringstream& os, const Page& page, int wt, int x0, int y0, int cell)
{
    const auto& w = page.window;
    int cols = w.pmax - w.pmin + 1;
    int rows = w.qmax + 1;
    int width = cols * cell, height = rows * cell;
    os << "<g>\n";
    os << "<text x=\"" << x0 << "\" y=\"" << y0 - 6 << "\" font-size=\"12\">w = " << wt
       << "</text>\n";
    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << width << "\" height=\""
       << height << "\" fill=\"none\" stroke=\"black\"/>\n";
    auto cx = [&](int p) { return x0 + (p - w.pmin) * cell + cell / 2; };
    auto cy = [&](int q) { return y0 + (w.qmax - q) * cell + cell / 2; };
    // arrows first, marks on top
    if (page.r == 1) {
        for (const auto& [t, pieces] : page.blocks) {
            if (t.w != wt || pieces.empty())
                continue;
            if (t.p - 1 < w.pmin || t.q + 1 > w.qmax)
                continue;
            os << "<line x1=\"" << cx(t.p) << "\" y1=\"" << cy(t.q) << "\" x2=\"" << cx(t.p - 1)
               << "\" y2=\"" << cy(t.q + 1) << "\" stroke=\"red\" marker-end=\"url(#arr)\"/>\n";
        }
    }
    if (page.r == 1) {
        for (const auto& [t, e] : page.entries) {
            if (t.w != wt)
                continue;
            int offset = 0;
            for (const auto& s : e.summands) {
                int x = cx(t.p) + (offset % 3) * 5 - 5;
                int y = cy(t.q) + (offset / 3) * 5 - 5;
                if (s.kind == CoeffKind::Mod2)
                    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
                else
                    os << "<rect x=\"" << x - 3 << "\" y=\"" << y - 3
                       << "\" width=\"6\" height=\"6\" fill=\"blue\"/>\n";
                ++offset;
            }
        }
    } else {
        for (const auto& [t, e] : page.e2) {
            if (t.w != wt)
                continue;
            std::string fill = e.flag == Stability::Stable ? "black" : "gray";
            std::size_t rank = e.group.free_rank();
            std::size_t tors = e.group.invariant_factors().size();
            int offset = 0;
            for (std::size_t k = 0; k < rank; ++k, ++offset)
                os << "<rect x=\"" << cx(t.p) + (offset % 3) * 5 - 8 << "\" y=\""
                   << cy(t.q) + (offset / 3) * 5 - 8 << "\" width=\"6\" height=\"6\" fill=\""
                   << fill << "\"/>\n";
            for (std::size_t k = 0; k < tors; ++k, ++offset)
                os << "<circle cx=\"" << cx(t.p) + (offset % 3) * 5 - 5 << "\" cy=\""
                   << cy(t.q) + (offset / 3) * 5 - 5 << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
        }
    }
    os << "</g>\n";
}

}  // namespace

std::string export_svg(const Page& page)
{
    const auto& w = page.window;
    int cell = 24;
    int cols = w.pmax - w.pmin + 1;
    int rows = w.qmax + 1;
    int panel_w = cols * cell + 40;
    int panel_h = rows * cell + 40;
    int nw = w.wmax - w.wmin + 1;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << panel_w
       << "\" height=\"" << panel_h * nw << "\">\n";
    os << "<defs><marker id=\"arr\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
          "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"red\"/></marker></defs>\n";
    os << "<title>" << slice::spectrum_name(page.spectrum) << " over " << page.field.name()
       << ", page " << page.r << "</title>\n";
    for (int wt = w.wmax; wt >= w.wmin; --wt)
        svg_panel(os, page, wt, 20, 30 + (w.wmax - wt) * panel_h, cell);
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// plain text

std::string export_txt(const Page& page)
{
    const auto& w = page.window;
    std::ostringstream os;
    os << "# " << slice::spectrum_name(page.spectrum) << " over " << page.field.name()
       << ", page " << page.r << "\n";
    for (int wt = w.wmin; wt <= w.wmax; ++wt) {
        // skip weights with no content
        bool any = false;
        if (page.r == 1) {
            for (const auto& [t, e] : page.entries)
                any = any || t.w == wt;
        } else {
            for (const auto& [t, e] : page.e2)
                any = any || t.w == wt;
        }
        if (!any)
            continue;
        os << "w = " << wt << "  (rows q = " << w.qmax << "..0, cols p = " << w.pmin << ".."
           << w.pmax << ")\n";
        for (int q = w.qmax; q >= 0; --q) {
            os << (q < 10 ? " " : "") << q << " |";
            for (int p = w.pmin; p <= w.pmax; ++p) {
                char c = '.';
                Tri t{p, q, wt};
                if (page.r == 1) {
                    auto it = page.entries.find(t);
                    if (it != page.entries.end()) {
                        std::size_t n = it->second.summands.size();
                        c = it->second.has_integral() ? '#' : static_cast<char>('0' + (n > 9 ? 9 : n));
                    }
                } else {
                    auto it = page.e2.find(t);
                    if (it != page.e2.end()) {
                        const auto& g = it->second.group;
                        if (g.free_rank() > 0)
                            c = 'Z';
                        else if (!g.is_trivial())
                            c = static_cast<char>('0' + (g.invariant_factors().size() > 9
                                                             ? 9
                                                             : g.invariant_factors().size()));
                        else
                            c = it->second.tors2_coker_dim > 0 ? 't' : '?';
                        if (it->second.flag == Stability::Unknown && c == 'Z')
                            c = 'z';
                    }
                }
                os << ' ' << c;
            }
            os << "\n";
        }
        os << "\n";
    }
    // per-entry detail lines
    if (page.r == 1) {
        for (const auto& [t, e] : page.entries) {
            os << "(" << t.p << "," << t.q << "," << t.w << "):";
            for (const auto& s : e.summands)
                os << " [" << s.label << " : " << summand_group_string(s) << "]";
            os << "\n";
        }
    } else {
        for (const auto& [t, e] : page.e2) {
            os << "(" << t.p << "," << t.q << "," << t.w << "): " << e.group.to_string()
               << (e.exact ? "" : " (mod-2 realization)")
               << (e.flag == Stability::Stable ? " [stable]" : " [unknown]");
            if (e.tors2_coker_dim > 0)
                os << " [tors2-coker " << std::to_string(e.tors2_coker_dim) << "]";
            os << "\n";
        }
    }
    return os.str();
}

std::string export_chart(const Page& page, const std::string& format)
{
    if (format == "json")
        return export_json(page);
    if (format == "svg")
        return export_svg(page);
    if (format == "txt")
        return export_txt(page);
    throw slice::UnsupportedFormat("unsupported chart format '" + format +
                                   "' (expected json, svg, txt)");
}

}  // namespace sliceforge::chart
