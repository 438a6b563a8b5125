// Copyright 2026 The qcvine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

#include "qcvine/render.hpp"

namespace qcvine {

namespace {

std::string num(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << v;
    std::string s = out.str();
    while (s.back() == '0') {
        s.pop_back();
    }
    if (s.back() == '.') {
        s.pop_back();
    }
    return s == "-0" ? "0" : s;
}

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            case '\'':
                out += "&apos;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::size_t codePoints(std::string_view s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0U) != 0x80U; }));
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string qubitRange(QubitId from, QubitId to) {
    return from == to ? "q[" + std::to_string(from) + "]" : "q[" + std::to_string(from) + ".." + std::to_string(to) + "]";
}

class Svg {
   public:
    Svg(double width, double height, const RenderTheme &theme) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
             << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\""
             << escape(theme.fontFamily) << "\" font-size=\"" << theme.fontSize << "\">\n"
             << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
             << "\" fill=\"" << theme.background << "\"/>\n";
    }

    Svg &raw(const std::string &s) {
        out_ << s;
        return *this;
    }

    void line(double x1, double y1, double x2, double y2, const std::string &stroke, double width,
              const std::string &extra = "") {
        out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
             << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << '"' << extra << "/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string &fill, const std::string &stroke,
              const std::string &extra = "") {
        out_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
             << "\" fill=\"" << fill << '"';
        if (!stroke.empty()) {
            out_ << " stroke=\"" << stroke << '"';
        }
        out_ << extra << "/>\n";
    }

    void circle(double cx, double cy, double r, const std::string &fill, const std::string &stroke,
                const std::string &extra = "") {
        out_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" fill=\"" << fill
             << '"';
        if (!stroke.empty()) {
            out_ << " stroke=\"" << stroke << '"';
        }
        out_ << extra << "/>\n";
    }

    void text(double x, double y, std::string_view s, const std::string &fill, const std::string &anchor,
              const std::string &extra = "") {
        out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" fill=\"" << fill << "\" text-anchor=\"" << anchor
             << "\" dominant-baseline=\"central\"" << extra << '>' << escape(s) << "</text>\n";
    }

    void title(std::string_view s) { out_ << "<title>" << escape(s) << "</title>\n"; }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

   private:
    std::ostringstream out_;
};

// ---------------------------------------------------------------------------
// Circuit scene shared by the component, abstraction and placement views.

struct SceneRow {
    std::string label;
    bool band = false;
};

struct SceneGate {
    const SuperGate *gate = nullptr;
    std::vector<std::uint32_t> rows;         // slots, ascending, distinct
    std::vector<std::uint32_t> operandRows;  // slot per operand (primitives)
    std::uint32_t col = 0;
};

struct Scene {
    std::vector<SceneRow> rows;
    std::vector<bool> colBand;
    std::vector<SceneGate> gates;
    std::vector<DotMark> dots;
    std::vector<LegendEntry> legend;
};

struct Geometry {
    double unit;
    double charWidth;
    double left;
    double top;
    double width;
    double height;

    double x(std::uint32_t col) const { return left + col * unit; }
    double y(std::uint32_t row) const { return top + row * unit; }
    double cx(std::uint32_t col) const { return x(col) + unit / 2; }
    double cy(std::uint32_t row) const { return y(row) + unit / 2; }
    std::size_t fit(double space) const { return static_cast<std::size_t>(std::max(0.0, space / charWidth)); }
};

Geometry geometry(const Scene &scene, const RenderTheme &theme, double extraRight = 0) {
    Geometry g{};
    g.unit = theme.unit;
    g.charWidth = theme.fontSize * 0.6;
    std::size_t longest = 1;
    for (const auto &r : scene.rows) {
        longest = std::max(longest, codePoints(r.label));
    }
    g.left = std::ceil(static_cast<double>(longest) * g.charWidth) + g.unit / 2;
    g.top = g.unit / 2;
    g.width = g.left + static_cast<double>(scene.colBand.size()) * g.unit + g.unit / 2 + extraRight;
    g.height = 2 * g.top + static_cast<double>(scene.rows.size()) * g.unit;
    if (!scene.legend.empty()) {
        g.height += static_cast<double>(scene.legend.size()) * (theme.fontSize + 6) + 4;
    }
    return g;
}

Scene componentScene(const ComponentDiagram &diagram) {
    Scene scene;
    for (const auto &bit : diagram.superBits) {
        scene.rows.push_back({qubitRange(bit.from, bit.to), false});
    }
    scene.colBand.assign(diagram.width, false);
    for (const auto &sg : diagram.superGates) {
        SceneGate g;
        g.gate = &sg;
        g.rows = diagram.rowsOf(sg.id);
        for (const auto &op : sg.operands) {
            g.operandRows.push_back(diagram.rowOfQubit.at(op.qubit));
        }
        g.col = diagram.columnOf[sg.id];
        scene.gates.push_back(std::move(g));
    }
    return scene;
}

Scene abstractionScene(const AbstractionDiagram &ad, const ComponentDiagram &diagram) {
    Scene scene;
    scene.rows.resize(ad.rows);
    std::vector<bool> rowSeen(ad.rows, false);
    for (const auto &band : ad.ellipsisBands) {
        if (band.axis == BandAxis::Row) {
            scene.rows[band.slot] = {qubitRange(diagram.superBits.at(band.from).from, diagram.superBits.at(band.to).to),
                                     true};
            rowSeen[band.slot] = true;
        }
    }
    for (std::uint32_t r = 0; r < ad.rowSlot.size(); ++r) {
        const auto slot = ad.rowSlot[r];
        if (!rowSeen[slot]) {
            const auto &bit = diagram.superBits.at(r);
            scene.rows[slot] = {qubitRange(bit.from, bit.to), false};
            rowSeen[slot] = true;
        }
    }
    scene.colBand.assign(ad.cols, false);
    for (const auto &band : ad.ellipsisBands) {
        if (band.axis == BandAxis::Col) {
            scene.colBand[band.slot] = true;
        }
    }
    for (const auto &ag : ad.visibleGates) {
        const SuperGate &sg = diagram.superGate(ag.id);
        SceneGate g;
        g.gate = &sg;
        g.rows = ag.rows;
        for (const auto &op : sg.operands) {
            g.operandRows.push_back(ad.rowSlot.at(diagram.rowOfQubit.at(op.qubit)));
        }
        g.col = ag.col;
        scene.gates.push_back(std::move(g));
    }
    scene.dots = ad.dots;
    scene.legend = ad.legend;
    return scene;
}

void drawWires(Svg &svg, const Scene &scene, const Geometry &geo, const RenderTheme &theme) {
    svg.raw("<g class=\"wires\">\n");
    const double x0 = geo.left - geo.unit / 4;
    const double x1 = geo.x(static_cast<std::uint32_t>(scene.colBand.size())) + geo.unit / 4;
    for (std::uint32_t r = 0; r < scene.rows.size(); ++r) {
        const auto &row = scene.rows[r];
        const double y = geo.cy(r);
        svg.raw("<g class=\"wire\" id=\"row-" + std::to_string(r) + "\">\n");
        if (row.band) {
            for (int k = -1; k <= 1; ++k) {
                svg.circle(geo.left + geo.unit / 4, y + k * geo.unit / 5, 1.5, theme.ellipsis, "");
            }
        } else if (row.label.find("..") != std::string::npos) {
            svg.line(x0, y - 2, x1, y - 2, theme.wire, 1);
            svg.line(x0, y + 2, x1, y + 2, theme.wire, 1);
        } else {
            svg.line(x0, y, x1, y, theme.wire, 1);
        }
        svg.text(x0 - 4, y, row.label, theme.text, "end");
        svg.raw("</g>\n");
    }
    svg.raw("</g>\n");
}

void drawBox(Svg &svg, const Geometry &geo, std::uint32_t col, std::uint32_t rowFrom, std::uint32_t rowTo,
             const std::string &label, const std::string &fill, const std::string &stroke, const RenderTheme &theme,
             bool vertical = false) {
    const double pad = 4;
    const double x = geo.x(col) + pad;
    const double y = geo.y(rowFrom) + pad;
    const double w = geo.unit - 2 * pad;
    const double h = (rowTo - rowFrom + 1) * geo.unit - 2 * pad;
    svg.rect(x, y, w, h, fill, stroke, " rx=\"2\"");
    std::string extra;
    const double room = (vertical ? h : w) - 2;
    const std::size_t chars = std::max<std::size_t>(1, codePoints(label));
    if (static_cast<double>(chars) * geo.charWidth > room) {
        const double size = std::max(5.0, std::floor(room / (static_cast<double>(chars) * 0.6)));
        extra = " font-size=\"" + num(std::min(size, static_cast<double>(theme.fontSize))) + "\"";
    }
    if (vertical) {
        extra += " transform=\"rotate(-90 " + num(x + w / 2) + ' ' + num(y + h / 2) + ")\"";
    }
    svg.text(x + w / 2, y + h / 2, label, theme.text, "middle", extra);
}

std::string primitiveLabel(const SuperGate &sg, bool controlledTarget) {
    std::string label = upper(toString(sg.gate));
    if (controlledTarget && label.size() > 1 && label.front() == 'C') {
        label.erase(0, 1);
    }
    return label;
}

void drawPrimitive(Svg &svg, const SceneGate &g, const Geometry &geo, const RenderTheme &theme) {
    const SuperGate &sg = *g.gate;
    const std::uint32_t top = g.rows.front();
    const std::uint32_t bottom = g.rows.back();
    const double cx = geo.cx(g.col);
    const bool shared = std::set<std::uint32_t>(g.operandRows.begin(), g.operandRows.end()).size() < g.operandRows.size();
    const auto glyph = theme.glyphs.count(sg.gate) ? theme.glyphs.at(sg.gate) : TargetGlyph::Box;
    const bool hasControls = std::any_of(sg.operands.begin(), sg.operands.end(),
                                         [](const Operand &op) { return op.role == OperandRole::Control; });
    const bool plainMulti = sg.operands.size() > 1 && !hasControls;

    // Operands folded into one bundled wire, or a symmetric two-qubit rotation:
    // one box over the touched rows.
    if (shared || sg.operands.size() == 1 || (plainMulti && glyph == TargetGlyph::Box)) {
        drawBox(svg, geo, g.col, top, bottom, primitiveLabel(sg, false), theme.gateFill, theme.gateStroke, theme);
        return;
    }
    svg.line(cx, geo.cy(top), cx, geo.cy(bottom), theme.control, 1.5);
    const double r = geo.unit * 0.22;
    for (std::size_t i = 0; i < sg.operands.size(); ++i) {
        const double cy = geo.cy(g.operandRows[i]);
        if (sg.operands[i].role == OperandRole::Control) {
            svg.circle(cx, cy, geo.unit * 0.1, theme.control, "");
            continue;
        }
        switch (glyph) {
            case TargetGlyph::Oplus:
                svg.circle(cx, cy, r, theme.gateFill, theme.control, " stroke-width=\"1.5\"");
                svg.line(cx - r, cy, cx + r, cy, theme.control, 1.5);
                svg.line(cx, cy - r, cx, cy + r, theme.control, 1.5);
                break;
            case TargetGlyph::Cross:
                svg.line(cx - r * 0.7, cy - r * 0.7, cx + r * 0.7, cy + r * 0.7, theme.control, 1.5);
                svg.line(cx - r * 0.7, cy + r * 0.7, cx + r * 0.7, cy - r * 0.7, theme.control, 1.5);
                break;
            case TargetGlyph::Dot:
                svg.circle(cx, cy, geo.unit * 0.1, theme.control, "");
                break;
            case TargetGlyph::Box:
                drawBox(svg, geo, g.col, g.operandRows[i], g.operandRows[i], primitiveLabel(sg, hasControls),
                        theme.gateFill, theme.gateStroke, theme);
                break;
        }
    }
}

std::string gateTitle(const SuperGate &sg) {
    if (sg.isComponent()) {
        return sg.label + " (" + std::to_string(sg.members.size()) + " gates)";
    }
    std::string title(toString(sg.gate));
    if (!sg.params.empty()) {
        title += "(";
        for (std::size_t i = 0; i < sg.params.size(); ++i) {
            title += (i ? ", " : "") + sg.params[i];
        }
        title += ")";
    }
    for (std::size_t i = 0; i < sg.operands.size(); ++i) {
        title += (i ? ", q[" : " q[") + std::to_string(sg.operands[i].qubit) + "]";
    }
    return title;
}

void drawGates(Svg &svg, const Scene &scene, const Geometry &geo, const RenderTheme &theme) {
    svg.raw("<g class=\"gates\">\n");
    for (const auto &g : scene.gates) {
        const SuperGate &sg = *g.gate;
        std::ostringstream open;
        open << "<g id=\"sg-" << sg.id << "\" class=\"sg " << toString(sg.kind) << "\" data-node=\"" << sg.node
             << "\" data-occ=\"" << sg.occurrence << "\" data-col=\"" << g.col << "\">\n";
        svg.raw(open.str());
        svg.title(gateTitle(sg));
        if (sg.isComponent()) {
            // Labels that do not fit across a tall box run along it instead.
            const double height = static_cast<double>(g.rows.back() - g.rows.front() + 1) * geo.unit;
            const bool vertical = geo.fit(geo.unit - 10) < codePoints(sg.label) && height > geo.unit;
            const std::size_t maxChars = geo.fit((vertical ? height : geo.unit) - 10);
            drawBox(svg, geo, g.col, g.rows.front(), g.rows.back(), truncateLabel(sg.label, sg.members.size(), maxChars),
                    theme.componentFill, theme.componentStroke, theme, vertical);
        } else {
            drawPrimitive(svg, g, geo, theme);
        }
        svg.raw("</g>\n");
    }
    svg.raw("</g>\n");
}

void drawEllipses(Svg &svg, const Scene &scene, const Geometry &geo, const RenderTheme &theme) {
    bool anyBand = std::find(scene.colBand.begin(), scene.colBand.end(), true) != scene.colBand.end();
    if (!anyBand && scene.dots.empty()) {
        return;
    }
    svg.raw("<g class=\"ellipsis\">\n");
    for (std::uint32_t c = 0; c < scene.colBand.size(); ++c) {
        if (!scene.colBand[c]) {
            continue;
        }
        // Dotted gap: blank the wires in the band column.
        svg.rect(geo.x(c) + 2, geo.top, geo.unit - 4, static_cast<double>(scene.rows.size()) * geo.unit,
                 theme.background, "", " class=\"band\"");
        for (std::uint32_t r = 0; r < scene.rows.size(); ++r) {
            if (!scene.rows[r].band) {
                svg.line(geo.x(c) + 2, geo.cy(r), geo.x(c) + geo.unit - 2, geo.cy(r), theme.ellipsis, 1,
                         " stroke-dasharray=\"2 3\"");
            }
        }
    }
    const double step = geo.unit / 5;
    for (const auto &d : scene.dots) {
        const double cx = geo.cx(d.col);
        const double cy = geo.cy(d.row);
        for (int k = -1; k <= 1; ++k) {
            double dx = 0;
            double dy = 0;
            switch (d.orientation) {
                case DotOrientation::Vertical:
                    dy = k * step;
                    break;
                case DotOrientation::Horizontal:
                    dx = k * step;
                    break;
                case DotOrientation::Diagonal:
                    dx = k * step;
                    dy = k * step;
                    break;
            }
            svg.circle(cx + dx, cy + dy, 1.8, theme.ellipsis, "",
                       k == -1 ? " class=\"dot " + std::string(toString(d.orientation)) + "\"" : "");
        }
    }
    svg.raw("</g>\n");
}

void drawLegend(Svg &svg, const Scene &scene, const Geometry &geo, const RenderTheme &theme) {
    if (scene.legend.empty()) {
        return;
    }
    svg.raw("<g class=\"legend\">\n");
    double y = geo.top + static_cast<double>(scene.rows.size()) * geo.unit + geo.unit / 2 + 4;
    for (const auto &l : scene.legend) {
        std::ostringstream s;
        s << l.label << ": " << toString(l.direction) << " repetition, " << l.iterations << " iterations";
        svg.text(geo.left, y, s.str(), theme.text, "start");
        y += theme.fontSize + 6;
    }
    svg.raw("</g>\n");
}

std::string renderScene(const Scene &scene, const RenderTheme &theme) {
    theme.validate();
    const Geometry geo = geometry(scene, theme);
    Svg svg(geo.width, geo.height, theme);
    drawWires(svg, scene, geo, theme);
    drawEllipses(svg, scene, geo, theme);
    drawGates(svg, scene, geo, theme);
    drawLegend(svg, scene, geo, theme);
    return svg.finish();
}

}  // namespace

std::string truncateLabel(const std::string &label, std::size_t count, std::size_t maxChars) {
    if (codePoints(label) <= maxChars) {
        return label;
    }
    const std::string suffix = " ×" + std::to_string(count);
    const std::size_t suffixChars = codePoints(suffix);
    const std::size_t keep = maxChars > suffixChars + 1 ? maxChars - suffixChars : 1;
    std::string prefix;
    std::size_t seen = 0;
    for (char c : label) {
        const bool lead = (static_cast<unsigned char>(c) & 0xC0U) != 0x80U;
        if (lead && seen == keep) {
            break;
        }
        seen += lead ? 1 : 0;
        prefix += c;
    }
    return prefix + suffix;
}

std::string renderComponent(const ComponentDiagram &diagram, const RenderTheme &theme) {
    return renderScene(componentScene(diagram), theme);
}

std::string renderAbstraction(const AbstractionDiagram &abstraction, const ComponentDiagram &source,
                              const RenderTheme &theme) {
    return renderScene(abstractionScene(abstraction, source), theme);
}

std::string renderProvenance(const ProvenanceTimeline &timeline, const RenderTheme &theme) {
    theme.validate();
    const double u = theme.unit;
    const double left = u;
    const double width = 2 * left + std::max<std::uint32_t>(timeline.span, 1) * u;
    const double height = 3 * u;
    const double axisY = 2 * u;
    Svg svg(width, height, theme);
    svg.text(left, u / 2, "q[" + std::to_string(timeline.qubit) + "] provenance", theme.text, "start");
    svg.raw("<g class=\"axis\">\n");
    svg.line(left, axisY, left + timeline.span * u, axisY, theme.wire, 1);
    for (std::uint32_t c = 0; c <= timeline.span; ++c) {
        svg.line(left + c * u, axisY - 3, left + c * u, axisY + 3, theme.wire, 1);
    }
    svg.raw("</g>\n<g class=\"events\">\n");
    for (std::size_t i = 0; i < timeline.events.size(); ++i) {
        const auto &e = timeline.events[i];
        const double cx = left + e.column * u + u / 2;
        std::ostringstream open;
        open << "<g id=\"ev-" << i << "\" class=\"event\" data-gate=\"" << e.superGate << "\" data-col=\"" << e.column
             << "\">\n";
        svg.raw(open.str());
        svg.title(e.label + " @ column " + std::to_string(e.column));
        svg.rect(cx - u * 0.3, axisY - u * 0.3, u * 0.6, u * 0.6, theme.componentFill, theme.componentStroke,
                 " rx=\"2\"");
        svg.text(cx, axisY - u * 0.6, truncateLabel(e.label, 1, static_cast<std::size_t>(u / (theme.fontSize * 0.6))),
                 theme.text, "middle");
        svg.raw("</g>\n");
    }
    svg.raw("</g>\n");
    return svg.finish();
}

std::string renderPlacement(const ComponentDiagram &diagram, const PlacementContext &context,
                            const RenderTheme &theme, const std::optional<PlacementSelection> &selection) {
    theme.validate();
    const Scene scene = componentScene(diagram);
    const Geometry geo = geometry(scene, theme, 2.5 * theme.unit);
    Svg svg(geo.width, geo.height, theme);

    // Wire segments colored by the parallelism level of their column.
    svg.raw("<g class=\"wires\">\n");
    for (std::uint32_t r = 0; r < scene.rows.size(); ++r) {
        const double y = geo.cy(r);
        svg.raw("<g class=\"wire\" id=\"row-" + std::to_string(r) + "\">\n");
        for (std::uint32_t c = 0; c < diagram.width; ++c) {
            const auto level = context.levels.at(c);
            svg.line(geo.x(c), y, geo.x(c + 1), y, theme.parallelismRamp.at(level), 4,
                     " class=\"segment level-" + std::to_string(level) + "\"");
        }
        svg.text(geo.left - geo.unit / 4 - 4, y, scene.rows[r].label, theme.text, "end");
        // Idle extent, drawn at the end of the wire.
        const double extent = context.idleExtent.at(diagram.superBits[r].from);
        const double bx = geo.x(diagram.width) + geo.unit / 4;
        svg.rect(bx, y - 3, 1.5 * geo.unit, 6, theme.background, theme.wire, " class=\"extent-frame\"");
        svg.rect(bx, y - 3, 1.5 * geo.unit * extent, 6, theme.idleRamp.back(), "", " class=\"extent\"");
        std::ostringstream pct;
        pct << std::lround(extent * 100) << '%';
        svg.text(bx + 1.5 * geo.unit + 4, y, pct.str(), theme.text, "start");
        svg.raw("</g>\n");
    }
    svg.raw("</g>\n");

    if (selection) {
        svg.raw("<g class=\"selection\">\n");
        std::set<SuperGateId> focus{selection->gate};
        focus.insert(selection->parallel.begin(), selection->parallel.end());
        std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint8_t>> spans;
        for (const auto &s : context.idleSpans) {
            if (!focus.contains(s.gate)) {
                continue;
            }
            const std::uint32_t row = diagram.rowOfQubit.at(s.wire);
            const std::uint32_t col = diagram.columnOf[s.gate];
            if (s.before > 0) {
                spans.insert({row, col - s.before, col - 1, s.beforeLevel});
            }
            if (s.after > 0) {
                spans.insert({row, col + 1, col + s.after, s.afterLevel});
            }
        }
        for (const auto &[row, from, to, level] : spans) {
            svg.rect(geo.x(from), geo.y(row) + geo.unit * 0.3, (to - from + 1) * geo.unit, geo.unit * 0.4,
                     theme.idleRamp.at(level), "", " class=\"idle\" fill-opacity=\"0.7\"");
        }
        const auto rows = diagram.rowsOf(selection->gate);
        for (auto c : selection->suggestions) {
            svg.rect(geo.x(c) + 2, geo.y(rows.front()) + 2, geo.unit - 4,
                     (rows.back() - rows.front() + 1) * geo.unit - 4, "none", theme.suggestion,
                     " class=\"suggestion\" stroke-dasharray=\"4 2\" stroke-width=\"2\" data-col=\"" +
                         std::to_string(c) + "\"");
        }
        svg.raw("</g>\n");
    }

    drawGates(svg, scene, geo, theme);
    if (selection) {
        const auto rows = diagram.rowsOf(selection->gate);
        const auto col = diagram.columnOf.at(selection->gate);
        svg.rect(geo.x(col) + 1, geo.y(rows.front()) + 1, geo.unit - 2, (rows.back() - rows.front() + 1) * geo.unit - 2,
                 "none", theme.highlight, " class=\"selected\" stroke-width=\"2\"");
    }
    return svg.finish();
}

std::string renderConnectivity(const ConnectivityMatrix &matrix, const EntanglementHistory &history,
                               const RenderTheme &theme) {
    theme.validate();
    const std::uint32_t n = matrix.n;
    const double cell = std::max(6.0, std::min(theme.unit / 2.0, 640.0 / std::max<std::uint32_t>(n, 1)));
    const double left = 4 * theme.fontSize;
    const double top = 2 * theme.fontSize;
    const double strip = cell;
    const std::size_t snapshots = history.snapshots.size();
    const double width = left + n * cell + theme.fontSize;
    const double height = top + n * cell + theme.fontSize + static_cast<double>(snapshots) * strip + theme.fontSize;
    Svg svg(width, height, theme);

    std::uint32_t maxCount = 0;
    for (auto c : matrix.counts) {
        maxCount = std::max(maxCount, c);
    }
    const std::uint32_t labelEvery = n <= 32 ? 1 : 10;
    svg.raw("<g class=\"axes\">\n");
    for (std::uint32_t i = 0; i < n; i += labelEvery) {
        svg.text(left - 4, top + (i + 0.5) * cell, std::to_string(i), theme.text, "end");
        svg.text(left + (i + 0.5) * cell, top - theme.fontSize / 2.0, std::to_string(i), theme.text, "middle");
    }
    svg.raw("</g>\n<g class=\"matrix\">\n");
    svg.rect(left, top, n * cell, n * cell, theme.background, theme.wire, " stroke-width=\"0.5\"");
    for (QubitId i = 0; i < n; ++i) {
        for (QubitId j = 0; j < n; ++j) {
            const auto c = matrix.at(i, j);
            if (c == 0) {
                continue;
            }
            const double opacity = 0.3 + 0.7 * static_cast<double>(c) / maxCount;
            svg.rect(left + j * cell, top + i * cell, cell, cell, theme.componentStroke, "",
                     " id=\"cell-" + std::to_string(i) + "-" + std::to_string(j) + "\" fill-opacity=\"" +
                         num(opacity) + "\" data-count=\"" + std::to_string(c) + "\"");
        }
    }
    svg.raw("</g>\n<g class=\"entanglement\">\n");
    // One strip per snapshot, oldest first; a group takes the color of its
    // smallest qubit, so colors stay put as groups merge.
    double y = top + n * cell + theme.fontSize;
    for (std::size_t s = 0; s < snapshots; ++s) {
        const auto &snap = history.snapshots[s];
        svg.raw("<g class=\"snapshot\" data-t=\"" + std::to_string(snap.timestamp) + "\">\n");
        for (const auto &group : snap.groups) {
            const auto &color = theme.groupPalette[group.front() % theme.groupPalette.size()];
            for (QubitId q : group) {
                svg.rect(left + q * cell, y, cell, strip - 1, color, "");
            }
        }
        svg.raw("</g>\n");
        y += strip;
    }
    svg.raw("</g>\n");
    return svg.finish();
}

}  // namespace qcvine
