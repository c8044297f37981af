#pragma once

#include "tangle.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace hopfdiag {

// T = (t_1^{a_1} ... t_n^{a_n}) c_{j_m} ... c_{j_1} {P}; contractions[0] = j_1
// is applied first.
struct StringLinkPresentation {
    PureBraidWord P;
    std::vector<int> contractions;
    std::vector<int> twists;

    int n() const { return P.n - 2 * static_cast<int>(contractions.size()); }

    void check() const {
        P.check();
        int w = P.n;
        for (int j : contractions) {
            if (j <= 1 || j >= w) throw tangle_error("contraction index " + std::to_string(j) + " invalid at width " + std::to_string(w));
            w -= 2;
        }
        if (static_cast<int>(twists.size()) != w) throw tangle_error("twist vector length must equal the component count");
    }
    bool operator==(const StringLinkPresentation&) const = default;
};

inline StringLinkPresentation presentation_of(const PureBraidWord& P) { return {P, {}, std::vector<int>(P.n, 0)}; }

// Strand of P whose top end is the top end of component k (1-based).
inline int presentation_strand(const StringLinkPresentation& T, int k) {
    for (auto it = T.contractions.rbegin(); it != T.contractions.rend(); ++it)
        if (k >= *it) k += 2;
    return k;
}

// Moves the outer twists into P as t letters (a curl slides freely along its
// component).
inline StringLinkPresentation fold_twists(StringLinkPresentation T) {
    for (int k = 0; k < static_cast<int>(T.twists.size()); ++k) {
        const int s = presentation_strand(T, k + 1);
        for (int r = 0; r < std::abs(T.twists[k]); ++r) T.P.letters.push_back(PureLetter::t(s, T.twists[k] > 0 ? 1 : -1));
        T.twists[k] = 0;
    }
    return T;
}

inline StringLinkPresentation contract_presentation(StringLinkPresentation T, int i) {
    T.check();
    const int n = T.n();
    if (i <= 1 || i >= n) throw tangle_error("contraction index out of range");
    T = fold_twists(std::move(T));
    T.contractions.push_back(i);
    T.twists.assign(n - 2, 0);
    return T;
}

inline TangleWord presentation_to_tangle(const StringLinkPresentation& T) {
    T.check();
    TangleWord w = braid_to_tangle(T.P);
    for (int j : T.contractions) w = contraction_word(w, j);
    for (int k = 0; k < static_cast<int>(T.twists.size()); ++k)
        for (int r = 0; r < std::abs(T.twists[k]); ++r) {
            auto c = curl_events(k + 1, T.twists[k] > 0 ? 1 : -1);
            w.events.insert(w.events.end(), c.begin(), c.end());
        }
    return w;
}

inline LinkingData closure_linking(const StringLinkPresentation& T) { return closure_linking(presentation_to_tangle(T)); }

// An extremum points right when its arc is traversed left to right.
inline bool is_right_pointing(const ComponentReport& r, const TangleWord& w, std::size_t e) {
    const auto& ev = w.events[e];
    if (ev.kind == EventKind::Cap) return r.orient[e][ev.pos - 1] > 0;
    if (ev.kind == EventKind::Cup) return r.orient[e + 1][ev.pos - 1] < 0;
    return false;
}

struct LeftHandedResult {
    TangleWord word;
    std::vector<int> alpha;
};

// Replaces each right-pointing extremum by a left-pointing one with a kink;
// every kink lowers the framing of its component by one, recorded in alpha.
inline LeftHandedResult make_left_handed(const TangleWord& w) {
    ComponentReport r = validate_tangle(w, TangleMode::string_link);
    LeftHandedResult out{TangleWord{w.bottom_width, {}}, std::vector<int>(w.bottom_width, 0)};
    for (std::size_t e = 0; e < w.events.size(); ++e) {
        const auto& ev = w.events[e];
        if (!is_right_pointing(r, w, e)) {
            out.word.events.push_back(ev);
            continue;
        }
        const int c = ev.kind == EventKind::Cap ? r.comp[e][ev.pos - 1] : r.comp[e + 1][ev.pos - 1];
        ++out.alpha[c];
        if (ev.kind == EventKind::Cap) {
            out.word.events.push_back(TangleEvent::cross(ev.pos, 1));
            out.word.events.push_back(ev);
        } else {
            out.word.events.push_back(ev);
            out.word.events.push_back(TangleEvent::cross(ev.pos, 1));
        }
    }
    return out;
}

// Removes curls whose three events are adjacent in the word and returns the
// writhe they carried, per component.
inline std::vector<int> strip_kinks(TangleWord& w) {
    std::vector<int> out(validate_tangle(w, TangleMode::string_link).n_components, 0);
    for (bool changed = true; changed;) {
        changed = false;
        ComponentReport r = validate_tangle(w, TangleMode::string_link);
        for (std::size_t e = 0; e + 2 < w.events.size(); ++e) {
            const auto &a = w.events[e], &b = w.events[e + 1], &c = w.events[e + 2];
            if (a.kind != EventKind::Cup || b.kind != EventKind::Cross || c.kind != EventKind::Cap || a.pos != c.pos) continue;
            const bool right = b.pos == a.pos - 1, left = b.pos == a.pos + 1;
            if (!right && !left) continue;
            out[r.comp[e][std::min(a.pos, b.pos) - 1]] += r.crossing_sign(w, e + 1);
            w.events.erase(w.events.begin() + e, w.events.begin() + e + 3);
            changed = true;
            break;
        }
    }
    return out;
}

namespace detail {

// A pair of parallel strands at positions (p, p+1) moving right over the strand
// at p+2, as seen going up.
inline void pair_right(std::vector<TangleEvent>& out, int p) {
    out.push_back(TangleEvent::cross(p + 1, 1));
    out.push_back(TangleEvent::cross(p, 1));
}

// The pair at (p+1, p+2) moving left over the strand at p.
inline void pair_left(std::vector<TangleEvent>& out, int p) {
    out.push_back(TangleEvent::cross(p, -1));
    out.push_back(TangleEvent::cross(p + 1, -1));
}

// Removes the cup at event index e and carries its legs down to bottom
// positions (b, b+1): the pair rises from the bottom, moves to the far right,
// climbs there and comes back in over the strands to the cup's place.
// Returns the new index of every old event (the cup maps to -1).
inline std::vector<int> pull_min(TangleWord& w, std::size_t e, int b) {
    const auto widths = w.widths();
    const int cq = w.events[e].pos;
    std::vector<TangleEvent> out;
    const int n = w.bottom_width;
    for (int p = b; p <= n; ++p) pair_right(out, p);
    std::vector<int> idx(w.events.size(), -1);
    for (std::size_t k = 0; k < w.events.size(); ++k) {
        if (k == e) {
            const int W = widths[k];
            for (int p = W; p >= cq; --p) pair_left(out, p);
            continue;
        }
        idx[k] = static_cast<int>(out.size());
        out.push_back(w.events[k]);
    }
    w.bottom_width += 2;
    w.events = std::move(out);
    return idx;
}

// Removes the cap at event index e and carries its legs to top positions
// (t, t+1), passing over everything on the way.
inline void pull_max(TangleWord& w, std::size_t e, int t) {
    const auto widths = w.widths();
    const int cq = w.events[e].pos;
    std::vector<TangleEvent> out(w.events.begin(), w.events.begin() + e);
    const int W = widths[e];
    for (int p = cq; p <= W - 2; ++p) pair_right(out, p);
    out.insert(out.end(), w.events.begin() + e + 1, w.events.end());
    const int top = widths.back();  // without the pair
    for (int p = top; p >= t; --p) pair_left(out, p);
    w.events = std::move(out);
}

}  // namespace detail

struct ExtractionTrace {
    std::vector<TangleWord> stages;  // diagram after each pull
};

// Presentation of a string link diagram: kinks become twists, left-handed
// rewrite, then the highest-index component with a maximum has its first
// maximum pulled to the top (position i+1) and the following minimum to the
// bottom (position i), until no extrema remain.
inline StringLinkPresentation extract_presentation(const TangleWord& w, ExtractionTrace* trace = nullptr) {
    TangleWord s = w;
    const std::vector<int> kinks = strip_kinks(s);
    LeftHandedResult lh = make_left_handed(s);
    TangleWord g = lh.word;
    std::vector<int> js;
    for (;;) {
        ComponentReport r = validate_tangle(g, TangleMode::string_link);
        const int n = g.bottom_width;
        std::vector<int> maxima(n, 0);
        for (std::size_t e = 0; e < g.events.size(); ++e)
            if (g.events[e].kind == EventKind::Cap) ++maxima[r.comp[e][g.events[e].pos - 1]];
        int i = -1;
        for (int k = n - 1; k >= 0; --k)
            if (maxima[k] > 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        // walk component i from its bottom endpoint
        const int E = static_cast<int>(g.events.size());
        detail::TracePoint cur{0, i, 1};
        int cap_e = -1, cup_e = -1;
        while (cup_e < 0) {
            auto nx = detail::trace_step(g, E, cur);
            if (!nx) throw tangle_error("component ended before its first minimum");
            if (nx->h == cur.h) {
                // turned at an extremum
                if (cur.dir > 0)
                    cap_e = cur.h;
                else if (cap_e >= 0)
                    cup_e = cur.h - 1;
            }
            cur = *nx;
        }
        const int comp1 = i + 1;  // 1-based
        auto idx = detail::pull_min(g, static_cast<std::size_t>(cup_e), comp1);
        detail::pull_max(g, static_cast<std::size_t>(idx[cap_e]), comp1 + 1);
        js.push_back(comp1 + 1);
        if (trace) trace->stages.push_back(g);
    }
    validate_tangle(g, TangleMode::string_link);
    ArtinWord a{g.bottom_width, {}};
    for (const auto& e : g.events) a.letters.push_back(e.sign * e.pos);
    // any equivalent word will do; handle reduction keeps P short
    a.letters = handle_reduce(a.letters);
    StringLinkPresentation out;
    out.P = artin_to_pure(a);
    out.contractions.assign(js.rbegin(), js.rend());
    out.twists = lh.alpha;
    for (std::size_t k = 0; k < kinks.size(); ++k) out.twists[k] += kinks[k];
    return out;
}

inline std::string presentation_to_string(const StringLinkPresentation& T) {
    std::string s = braid_to_string(T.P);
    s += "contract";
    for (int j : T.contractions) s += " " + std::to_string(j);
    s += "\ntwists";
    for (int a : T.twists) s += " " + std::to_string(a);
    s += "\n";
    return s;
}

// Braid file plus optional 'contract' and 'twists' lines.
inline StringLinkPresentation parse_presentation(std::istream& in, const std::string& file = "") {
    StringLinkPresentation T;
    bool have_twists = false;
    T.P = parse_braid_lines(in, file, [&](const std::vector<std::string>& tok, int line) {
        if (tok[0] == "contract") {
            for (std::size_t k = 1; k < tok.size(); ++k) T.contractions.push_back(detail::parse_index(tok[k], file, line));
            return true;
        }
        if (tok[0] == "twists") {
            have_twists = true;
            for (std::size_t k = 1; k < tok.size(); ++k) {
                int v = 0;
                if (!detail::parse_int(tok[k], v)) throw parse_error(file, line, "expected an integer, got '" + tok[k] + "'");
                T.twists.push_back(v);
            }
            return true;
        }
        return false;
    });
    if (!have_twists) T.twists.assign(std::max(0, T.n()), 0);
    try {
        T.check();
    } catch (const tangle_error& e) {
        throw parse_error(file, 0, e.what());
    }
    return T;
}

inline StringLinkPresentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    return parse_presentation(is);
}

}  // namespace hopfdiag
