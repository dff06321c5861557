#include "incolor/verify.hpp"

#include "incolor/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

namespace incolor {

std::string_view condition_label(Condition c)
{
    switch (c) {
    case Condition::StrongRepeat: return "a";
    case Condition::EdgeClash: return "b";
    case Condition::WeakOveruse: return "c";
    case Condition::EdgeClashConditional: return "i";
    case Condition::WeakRepeat: return "ii";
    case Condition::StrongRepeatConditional: return "iii";
    case Condition::MissingColor: return "iv";
    }
    return "?";
}

namespace {

void require_cover(const Graph& g, const IncidenceColoring& c)
{
    if (c.colors.size() != g.incidence_count()) {
        throw InputError("coloring covers " + std::to_string(c.colors.size()) + " incidences, graph has " +
                         std::to_string(g.incidence_count()));
    }
    for (std::size_t s = 0; s < c.colors.size(); ++s) {
        if (c.colors[s] == kUncolored) {
            const Incidence inc = g.incidence(s);
            throw InputError("incidence (" + std::to_string(inc.vertex) + ", {" + std::to_string(inc.edge.u) +
                             "," + std::to_string(inc.edge.v) + "}) is uncoloured");
        }
        if (c.colors[s] < 0 || c.colors[s] >= c.palette) {
            throw InputError("colour " + std::to_string(c.colors[s]) + " outside palette of size " +
                             std::to_string(c.palette));
        }
    }
}

class Recorder {
public:
    explicit Recorder(VerificationReport& r) : report_(r) {}

    void add(Violation v)
    {
        auto& n = counts_[static_cast<std::size_t>(v.condition)];
        if (n++ < kViolationCap) {
            report_.violations.push_back(std::move(v));
        } else {
            ++report_.suppressed;
        }
    }

private:
    VerificationReport& report_;
    std::array<std::size_t, 7> counts_{};
};

// Scratch per-colour counters with cheap reset.
class Tally {
public:
    explicit Tally(int palette) : count_(static_cast<std::size_t>(std::max(palette, 0)), 0) {}

    int bump(Color c)
    {
        if (count_[c]++ == 0) {
            touched_.push_back(c);
        }
        return count_[c];
    }
    int operator[](Color c) const { return count_[c]; }
    void reset()
    {
        for (Color c : touched_) {
            count_[c] = 0;
        }
        touched_.clear();
    }
    const std::vector<Color>& touched() const { return touched_; }

private:
    std::vector<int> count_;
    std::vector<Color> touched_;
};

// Reports colours repeated among the given slots.
void report_repeats(const Graph& g, const IncidenceColoring& c, Vertex u, std::size_t first, std::size_t last,
                    bool weak, Condition cond, Tally& tally, Recorder& rec)
{
    tally.reset();
    for (std::size_t s = first; s < last; ++s) {
        tally.bump(c.colors[weak ? g.mate(s) : s]);
    }
    for (Color col : tally.touched()) {
        if (tally[col] < 2) {
            continue;
        }
        Violation v{cond, u, {}, col, tally[col]};
        for (std::size_t s = first; s < last; ++s) {
            const std::size_t t = weak ? g.mate(s) : s;
            if (c.colors[t] == col) {
                v.witnesses.push_back(g.incidence(t));
            }
        }
        rec.add(std::move(v));
    }
}

void report_edge_clashes(const Graph& g, const IncidenceColoring& c, Condition cond, Recorder& rec)
{
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        const Vertex u = g.slot_vertex(s);
        if (u < g.slot_neighbor(s) && c.colors[s] == c.colors[g.mate(s)]) {
            rec.add({cond, u, {g.incidence(s), g.incidence(g.mate(s))}, c.colors[s], 2});
        }
    }
}

} // namespace

VerificationReport check_defective(const Graph& g, const IncidenceColoring& c, int d)
{
    require_cover(g, c);
    if (d < 0) {
        throw InputError("defect bound must be non-negative");
    }
    VerificationReport report;
    Recorder rec(report);
    Tally strong(c.palette);
    Tally weak(c.palette);
    for (Vertex u = 1; u <= g.vertex_count(); ++u) {
        const std::size_t first = g.first_slot(u);
        const std::size_t last = first + g.degree(u);
        report_repeats(g, c, u, first, last, false, Condition::StrongRepeat, strong, rec);
        weak.reset();
        for (std::size_t s = first; s < last; ++s) {
            weak.bump(c.colors[g.mate(s)]);
        }
        for (Color col : strong.touched()) {
            if (weak[col] > d) {
                Violation v{Condition::WeakOveruse, u, {}, col, weak[col]};
                for (std::size_t s = first; s < last; ++s) {
                    if (c.colors[g.mate(s)] == col) {
                        v.witnesses.push_back(g.incidence(g.mate(s)));
                    }
                }
                rec.add(std::move(v));
            }
        }
    }
    report_edge_clashes(g, c, Condition::EdgeClash, rec);
    return report;
}

std::optional<int> defect_of(const Graph& g, const IncidenceColoring& c)
{
    require_cover(g, c);
    Tally strong(c.palette);
    Tally weak(c.palette);
    int worst = 0;
    for (std::size_t s = 0; s < g.incidence_count(); ++s) {
        if (c.colors[s] == c.colors[g.mate(s)]) {
            return std::nullopt;
        }
    }
    for (Vertex u = 1; u <= g.vertex_count(); ++u) {
        strong.reset();
        weak.reset();
        const std::size_t first = g.first_slot(u);
        const std::size_t last = first + g.degree(u);
        for (std::size_t s = first; s < last; ++s) {
            if (strong.bump(c.colors[s]) > 1) {
                return std::nullopt;
            }
            weak.bump(c.colors[g.mate(s)]);
        }
        for (Color col : strong.touched()) {
            worst = std::max(worst, weak[col]);
        }
    }
    return worst;
}

VerificationReport check_conditional(const Graph& g, const IncidenceColoring& c, int big_delta)
{
    require_cover(g, c);
    if (c.palette != big_delta) {
        throw InputError("conditional check needs palette " + std::to_string(big_delta) + ", coloring has " +
                         std::to_string(c.palette));
    }
    if (g.max_degree() > static_cast<std::size_t>(big_delta)) {
        throw InputError("maximum degree exceeds the conditional palette");
    }
    VerificationReport report;
    Recorder rec(report);
    Tally strong(c.palette);
    Tally weak(c.palette);
    report_edge_clashes(g, c, Condition::EdgeClashConditional, rec);
    for (Vertex u = 1; u <= g.vertex_count(); ++u) {
        const std::size_t first = g.first_slot(u);
        const std::size_t last = first + g.degree(u);
        report_repeats(g, c, u, first, last, true, Condition::WeakRepeat, weak, rec);
        report_repeats(g, c, u, first, last, false, Condition::StrongRepeatConditional, strong, rec);
        if (g.degree(u) + 1 >= static_cast<std::size_t>(big_delta)) {
            for (Color col = 0; col < big_delta; ++col) {
                if (strong[col] == 0 && weak[col] == 0) {
                    rec.add({Condition::MissingColor, u, {}, col, 0});
                }
            }
        }
    }
    return report;
}

std::string report_to_json(const VerificationReport& r, int indent)
{
    using nlohmann::json;
    json doc;
    doc["valid"] = r.valid();
    doc["suppressed"] = r.suppressed;
    json list = json::array();
    for (const Violation& v : r.violations) {
        json w = json::array();
        for (const Incidence& inc : v.witnesses) {
            w.push_back({{"v", inc.vertex}, {"e", {inc.edge.u, inc.edge.v}}});
        }
        list.push_back({{"condition", condition_label(v.condition)},
                        {"vertex", v.vertex},
                        {"color", v.color},
                        {"multiplicity", v.multiplicity},
                        {"witnesses", std::move(w)}});
    }
    doc["violations"] = std::move(list);
    return doc.dump(indent);
}

} // namespace incolor
