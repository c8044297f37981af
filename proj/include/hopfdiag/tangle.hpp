#pragma once

#include "braid.hpp"
#include "rational.hpp"
#include "term.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfdiag {

enum class EventKind : std::uint8_t { Cross, Cap, Cup };

// Cross(p,+): the strand at p passes over the strand at p+1. Positions are
// 1-based.
struct TangleEvent {
    EventKind kind = EventKind::Cross;
    int pos = 1;
    int sign = 1;

    static TangleEvent cross(int p, int s) { return {EventKind::Cross, p, s}; }
    static TangleEvent cap(int p) { return {EventKind::Cap, p, 0}; }
    static TangleEvent cup(int p) { return {EventKind::Cup, p, 0}; }
    bool operator==(const TangleEvent&) const = default;

    int width_after(int w) const { return kind == EventKind::Cap ? w - 2 : kind == EventKind::Cup ? w + 2 : w; }
    bool applicable(int w) const {
        if (pos < 1) return false;
        if (kind == EventKind::Cup) return pos <= w + 1;
        return pos + 1 <= w;
    }
};

class tangle_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TangleWord {
    int bottom_width = 0;
    std::vector<TangleEvent> events;

    int top_width() const {
        int w = bottom_width;
        for (const auto& e : events) w = e.width_after(w);
        return w;
    }
    // widths[h] = width below event h; widths.back() = top width
    std::vector<int> widths() const {
        std::vector<int> r{bottom_width};
        for (const auto& e : events) r.push_back(e.width_after(r.back()));
        return r;
    }
    void check() const {
        if (bottom_width < 0) throw tangle_error("negative width");
        int w = bottom_width;
        for (std::size_t k = 0; k < events.size(); ++k) {
            const auto& e = events[k];
            if (e.kind == EventKind::Cross && e.sign != 1 && e.sign != -1) throw tangle_error("crossing sign must be +-1");
            if (!e.applicable(w))
                throw tangle_error("event " + std::to_string(k + 1) + " does not fit width " + std::to_string(w));
            w = e.width_after(w);
        }
    }
    bool operator==(const TangleWord&) const = default;
};

inline TangleWord identity_tangle(int n) { return TangleWord{n, {}}; }

// Places b on top of a.
inline TangleWord tangle_compose(const TangleWord& a, const TangleWord& b) {
    if (a.top_width() != b.bottom_width) throw tangle_error("width mismatch in composition");
    TangleWord r = a;
    r.events.insert(r.events.end(), b.events.begin(), b.events.end());
    return r;
}

inline TangleWord tangle_shift(const TangleWord& a, int left, int right) {
    TangleWord r{a.bottom_width + left + right, {}};
    for (auto e : a.events) {
        e.pos += left;
        r.events.push_back(e);
    }
    return r;
}

// a to the left of b
inline TangleWord tangle_tensor(const TangleWord& a, const TangleWord& b) {
    return tangle_compose(tangle_shift(a, 0, b.bottom_width), tangle_shift(b, a.top_width(), 0));
}

enum class TangleMode { string_link, handle, closed_link, any };

// Result of tracing all strands. Levels h = 0..E sit between events; point
// (h,p) is position p (0-based) on level h.
struct ComponentReport {
    int n_components = 0;
    int n_arcs = 0;
    std::vector<std::vector<int>> orient;  // +1 traversed upwards, -1 downwards
    std::vector<std::vector<int>> comp;
    // per arc: (start, end) endpoints, encoded as +k for bottom position k and
    // -k for top position k (1-based)
    std::vector<std::pair<int, int>> arc_ends;

    int crossing_sign(const TangleWord& w, std::size_t e) const {
        const auto& ev = w.events[e];
        return ev.sign * orient[e][ev.pos - 1] * orient[e][ev.pos];
    }
};

namespace detail {

struct TracePoint {
    int h, p, dir;  // dir +1 up, -1 down
};

// Moves one level along the strand. Returns nullopt at an endpoint.
inline std::optional<TracePoint> trace_step(const TangleWord& w, int E, TracePoint s) {
    if (s.dir > 0) {
        if (s.h == E) return std::nullopt;
        const auto& ev = w.events[s.h];
        const int q = ev.pos - 1;
        switch (ev.kind) {
            case EventKind::Cross:
                return TracePoint{s.h + 1, s.p == q ? q + 1 : s.p == q + 1 ? q : s.p, 1};
            case EventKind::Cap:
                if (s.p == q) return TracePoint{s.h, q + 1, -1};
                if (s.p == q + 1) return TracePoint{s.h, q, -1};
                return TracePoint{s.h + 1, s.p < q ? s.p : s.p - 2, 1};
            case EventKind::Cup:
                return TracePoint{s.h + 1, s.p < q ? s.p : s.p + 2, 1};
        }
    } else {
        if (s.h == 0) return std::nullopt;
        const auto& ev = w.events[s.h - 1];
        const int q = ev.pos - 1;
        switch (ev.kind) {
            case EventKind::Cross:
                return TracePoint{s.h - 1, s.p == q ? q + 1 : s.p == q + 1 ? q : s.p, -1};
            case EventKind::Cap:
                return TracePoint{s.h - 1, s.p < q ? s.p : s.p + 2, -1};
            case EventKind::Cup:
                if (s.p == q) return TracePoint{s.h, q + 1, 1};
                if (s.p == q + 1) return TracePoint{s.h, q, 1};
                return TracePoint{s.h - 1, s.p < q ? s.p : s.p - 2, -1};
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Traces every component. Arcs are started at their canonical entry point
// (string links: bottom endpoints going up; handles: bottom endpoint 2k going
// up; otherwise the first unused endpoint, bottom before top); closed
// components start at the left leg of their lowest cup, going up.
inline ComponentReport trace_components(const TangleWord& w, TangleMode mode = TangleMode::any) {
    w.check();
    const auto widths = w.widths();
    const int E = static_cast<int>(w.events.size());
    ComponentReport r;
    for (int h = 0; h <= E; ++h) {
        r.orient.emplace_back(widths[h], 0);
        r.comp.emplace_back(widths[h], -1);
    }
    auto run = [&](detail::TracePoint s) {
        const int label = r.n_components++;
        detail::TracePoint cur = s;
        for (;;) {
            if (r.comp[cur.h][cur.p] >= 0) break;  // closed loop completed
            r.comp[cur.h][cur.p] = label;
            r.orient[cur.h][cur.p] = cur.dir;
            auto nx = detail::trace_step(w, E, cur);
            if (!nx) return std::optional<detail::TracePoint>(cur);
            cur = *nx;
        }
        return std::optional<detail::TracePoint>();
    };
    auto endpoint_code = [&](const detail::TracePoint& t) { return t.h == 0 && t.dir < 0 ? t.p + 1 : -(t.p + 1); };
    auto start_arc = [&](detail::TracePoint s) {
        auto end = run(s);
        ++r.n_arcs;
        const int start = s.dir > 0 ? s.p + 1 : -(s.p + 1);
        r.arc_ends.emplace_back(start, end ? endpoint_code(*end) : 0);
    };
    const int wb = widths.front(), wt = widths.back();
    if (mode == TangleMode::handle) {
        for (int k = 1; k < wb; k += 2)
            if (r.comp[0][k] < 0) start_arc({0, k, 1});
    } else if (mode == TangleMode::string_link) {
        for (int k = 0; k < wb; ++k)
            if (r.comp[0][k] < 0) start_arc({0, k, 1});
    }
    for (int k = 0; k < wb; ++k)
        if (r.comp[0][k] < 0) start_arc({0, k, 1});
    for (int k = 0; k < wt; ++k)
        if (r.comp[E][k] < 0) start_arc({E, k, -1});
    for (int h = 0; h < E; ++h) {
        const auto& ev = w.events[h];
        if (ev.kind == EventKind::Cup && r.comp[h + 1][ev.pos - 1] < 0) run({h + 1, ev.pos - 1, 1});
    }
    return r;
}

// Checks the pairing predicate of the mode and returns the trace.
inline ComponentReport validate_tangle(const TangleWord& w, TangleMode mode) {
    ComponentReport r = trace_components(w, mode);
    const int wb = w.bottom_width, wt = w.top_width();
    const int closed = r.n_components - r.n_arcs;
    switch (mode) {
        case TangleMode::string_link:
            if (wb != wt) throw tangle_error("string link needs equal bottom and top width");
            if (closed) throw tangle_error("string link has a closed component");
            for (int k = 0; k < r.n_arcs; ++k)
                if (r.arc_ends[k] != std::make_pair(k + 1, -(k + 1)))
                    throw tangle_error("string link component " + std::to_string(k + 1) +
                                       " does not join bottom and top endpoint " + std::to_string(k + 1));
            break;
        case TangleMode::handle:
            if (wt != 0 || wb % 2) throw tangle_error("handle needs 2n bottom endpoints and none on top");
            if (closed) throw tangle_error("handle has a closed component");
            for (int k = 0; k < r.n_arcs; ++k)
                if (r.arc_ends[k] != std::make_pair(2 * k + 2, 2 * k + 1))
                    throw tangle_error("handle arc " + std::to_string(k + 1) + " does not join bottom endpoints " +
                                       std::to_string(2 * k + 1) + " and " + std::to_string(2 * k + 2));
            break;
        case TangleMode::closed_link:
            if (wb || wt) throw tangle_error("closed link has endpoints");
            break;
        case TangleMode::any: break;
    }
    return r;
}

inline TangleWord artin_to_tangle(const ArtinWord& w) {
    TangleWord r{w.n, {}};
    for (int l : w.letters) r.events.push_back(TangleEvent::cross(std::abs(l), l > 0 ? 1 : -1));
    return r;
}

// t_k^{+-1}: a curl on strand k whose single crossing has sign +-1.
inline std::vector<TangleEvent> curl_events(int k, int sign) {
    return {TangleEvent::cup(k + 1), TangleEvent::cross(k, sign), TangleEvent::cap(k + 1)};
}

inline TangleWord braid_to_tangle(const PureBraidWord& P) {
    P.check();
    TangleWord r{P.n, {}};
    for (auto it = P.letters.rbegin(); it != P.letters.rend(); ++it) {
        const auto& l = *it;
        if (l.twist) {
            auto c = curl_events(l.i, l.sign);
            r.events.insert(r.events.end(), c.begin(), c.end());
        } else {
            for (int a : sigma_artin(l.i, l.j, l.sign)) r.events.push_back(TangleEvent::cross(std::abs(a), a > 0 ? 1 : -1));
        }
    }
    return r;
}

struct LinkingData {
    int n_L = 0;
    std::vector<std::vector<long long>> linking_matrix;  // diagonal = framings
    int b_minus = 0;
    int b_plus = 0;
};

// Inertia of a symmetric integer matrix by exact LDL^T with symmetric
// pivoting; returns (positive, negative) counts.
inline std::pair<int, int> symmetric_inertia(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n && piv == n; ++i)
            if (!a[i][i].is_zero()) piv = i;
        if (piv == n) {
            // zero diagonal: fold a row with a nonzero off-diagonal entry into another
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!a[i][j].is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;  // remaining block is zero
            for (std::size_t c = k; c < n; ++c) a[pi][c] = a[pi][c] + a[pj][c];
            for (std::size_t r = k; r < n; ++r) a[r][pi] = a[r][pi] + a[r][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (auto& row : a) std::swap(row[piv], row[k]);
        }
        const Rat d = a[k][k];
        (d.sign() < 0 ? neg : pos)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const Rat f = a[i][k] / d;
            for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
        for (std::size_t j = k + 1; j < n; ++j) a[k][j] = Rat(0);
        for (std::size_t i = k + 1; i < n; ++i) a[i][k] = Rat(0);
    }
    return {pos, neg};
}

// Linking data of the closure of a string link (or of a closed link), with
// blackboard framing.
inline LinkingData closure_linking(const TangleWord& w) {
    const bool closed = w.bottom_width == 0 && w.top_width() == 0;
    ComponentReport r = validate_tangle(w, closed ? TangleMode::closed_link : TangleMode::string_link);
    LinkingData L;
    L.n_L = r.n_components;
    std::vector<std::vector<long long>> twice(L.n_L, std::vector<long long>(L.n_L, 0));
    for (std::size_t e = 0; e < w.events.size(); ++e) {
        const auto& ev = w.events[e];
        if (ev.kind != EventKind::Cross) continue;
        const int s = r.crossing_sign(w, e);
        const int a = r.comp[e][ev.pos - 1], b = r.comp[e][ev.pos];
        if (a == b) {
            twice[a][a] += 2 * s;
        } else {
            twice[a][b] += s;
            twice[b][a] += s;
        }
    }
    L.linking_matrix.assign(L.n_L, std::vector<long long>(L.n_L, 0));
    for (int i = 0; i < L.n_L; ++i)
        for (int j = 0; j < L.n_L; ++j) {
            if (twice[i][j] % 2) throw tangle_error("odd inter-component crossing count");
            L.linking_matrix[i][j] = twice[i][j] / 2;
        }
    auto [p, n] = symmetric_inertia(L.linking_matrix);
    L.b_plus = p;
    L.b_minus = n;
    return L;
}

// Bends a string link on n strands into a handle: the top end of strand k is
// brought down to bottom position 2k-1. The return strands are first gathered
// on the far left in reverse order, each passing under everything, so that the
// closing caps are nested.
inline std::vector<TangleEvent> gather_events(int n) {
    std::vector<TangleEvent> r;
    for (int k = 2; k <= n; ++k)
        for (int p = 2 * k - 2; p >= 1; --p) r.push_back(TangleEvent::cross(p, 1));
    return r;
}

inline std::vector<TangleEvent> inverse_events(std::vector<TangleEvent> ev) {
    std::reverse(ev.begin(), ev.end());
    for (auto& e : ev) {
        if (e.kind != EventKind::Cross) throw tangle_error("only crossing words can be inverted");
        e.sign = -e.sign;
    }
    return ev;
}

enum class FGDirection { to_handle, to_string_link };

inline TangleWord convert_F_G(const TangleWord& w, FGDirection dir) {
    if (dir == FGDirection::to_handle) {
        validate_tangle(w, TangleMode::string_link);
        const int n = w.bottom_width;
        TangleWord r{2 * n, gather_events(n)};
        for (auto e : w.events) {
            e.pos += n;
            r.events.push_back(e);
        }
        for (int k = n; k >= 1; --k) r.events.push_back(TangleEvent::cap(k));
        return r;
    }
    validate_tangle(w, TangleMode::handle);
    const int n = w.bottom_width / 2;
    TangleWord r{n, {}};
    for (int k = 1; k <= n; ++k) r.events.push_back(TangleEvent::cup(k));
    for (auto e : inverse_events(gather_events(n))) {
        e.pos += n;
        r.events.push_back(e);
    }
    for (auto e : w.events) {
        e.pos += n;
        r.events.push_back(e);
    }
    return r;
}

namespace detail {
inline bool disjoint_from_cup(const TangleEvent& x, int c) {
    const int lo = x.pos, hi = x.kind == EventKind::Cup ? x.pos - 1 : x.pos + 1;
    return hi < c || lo > c + 1;
}
}  // namespace detail

// Planar normalization: cancels adjacent inverse crossings and zigzags, moves
// every cup as high and every cap as low as it can go past events that do not
// touch it.
inline TangleWord normalize_tangle(TangleWord w) {
    w.check();
    auto& ev = w.events;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < ev.size(); ++k) {
            const auto &a = ev[k], &b = ev[k + 1];
            const bool inv = a.kind == EventKind::Cross && b.kind == EventKind::Cross && a.pos == b.pos && a.sign == -b.sign;
            const bool zig = a.kind == EventKind::Cup && b.kind == EventKind::Cap && (b.pos == a.pos + 1 || b.pos == a.pos - 1);
            if (inv || zig) {
                ev.erase(ev.begin() + k, ev.begin() + k + 2);
                changed = true;
                break;
            }
            if (a.kind == EventKind::Cup && b.kind != EventKind::Cup && detail::disjoint_from_cup(b, a.pos)) {
                TangleEvent x = b, c = a;
                if (b.pos > a.pos + 1) x.pos -= 2;
                if (b.kind == EventKind::Cap && b.pos + 1 < a.pos) c.pos -= 2;
                ev[k] = x;
                ev[k + 1] = c;
                changed = true;
                break;
            }
            if (b.kind == EventKind::Cap && a.kind != EventKind::Cap && a.kind != EventKind::Cup &&
                detail::disjoint_from_cup(a, b.pos)) {
                TangleEvent x = a, c = b;
                if (a.pos > b.pos + 1) x.pos -= 2;
                ev[k] = c;
                ev[k + 1] = x;
                changed = true;
                break;
            }
            // of two stacked cups side by side, the left one goes on top
            if (a.kind == EventKind::Cup && b.kind == EventKind::Cup && b.pos >= a.pos + 2) {
                TangleEvent x = b, c = a;
                x.pos -= 2;
                ev[k] = x;
                ev[k + 1] = c;
                changed = true;
                break;
            }
        }
    }
    return w;
}

// c_j: caps the top ends of strands j and j+1 and joins the bottom ends of
// strands j-1 and j by a cup; 1 < j < n.
inline TangleWord contraction_word(const TangleWord& T, int j) {
    const int n = T.bottom_width;
    if (T.top_width() != n || j <= 1 || j >= n) throw tangle_error("contraction index out of range");
    TangleWord r{n - 2, {TangleEvent::cup(j - 1)}};
    r.events.insert(r.events.end(), T.events.begin(), T.events.end());
    r.events.push_back(TangleEvent::cap(j));
    return r;
}

namespace detail {

inline bool parse_sign(const std::string& s, int& out) {
    if (s == "+") out = 1;
    else if (s == "-") out = -1;
    else return false;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> r;
    std::string t;
    while (is >> t) r.push_back(t);
    return r;
}

inline int parse_index(const std::string& tok, const std::string& file, int line) {
    int v = 0;
    if (!parse_int(tok, v)) throw parse_error(file, line, "expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace detail

inline std::string tangle_to_string(const TangleWord& w) {
    std::ostringstream os;
    os << "tangle w=" << w.bottom_width << "\n";
    for (const auto& e : w.events) {
        switch (e.kind) {
            case EventKind::Cross: os << "x " << e.pos << ' ' << (e.sign > 0 ? '+' : '-') << "\n"; break;
            case EventKind::Cap: os << "cap " << e.pos << "\n"; break;
            case EventKind::Cup: os << "cup " << e.pos << "\n"; break;
        }
    }
    return os.str();
}

inline TangleWord parse_tangle(std::istream& in, const std::string& file = "") {
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    TangleWord w;
    int width = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        if (line.empty()) continue;
        if (!have_header) {
            w.bottom_width = detail::parse_header(line, "tangle", "w", file, lineno);
            width = w.bottom_width;
            have_header = true;
            continue;
        }
        auto tok = detail::split_ws(line);
        TangleEvent e;
        if (tok[0] == "x" && tok.size() == 3) {
            e = TangleEvent::cross(detail::parse_index(tok[1], file, lineno), 0);
            if (!detail::parse_sign(tok[2], e.sign)) throw parse_error(file, lineno, "crossing sign must be + or -");
        } else if (tok[0] == "cap" && tok.size() == 2) {
            e = TangleEvent::cap(detail::parse_index(tok[1], file, lineno));
        } else if (tok[0] == "cup" && tok.size() == 2) {
            e = TangleEvent::cup(detail::parse_index(tok[1], file, lineno));
        } else {
            throw parse_error(file, lineno, "expected 'x <pos> <+|->', 'cap <pos>' or 'cup <pos>'");
        }
        if (!e.applicable(width))
            throw parse_error(file, lineno, "event does not fit the current width " + std::to_string(width));
        width = e.width_after(width);
        w.events.push_back(e);
    }
    if (!have_header) throw parse_error(file, lineno, "missing 'tangle w=<width>' header");
    return w;
}

inline TangleWord parse_tangle(const std::string& text) {
    std::istringstream is(text);
    return parse_tangle(is);
}

inline std::string braid_to_string(const PureBraidWord& P) {
    std::ostringstream os;
    os << "braid n=" << P.n << "\n";
    for (const auto& l : P.letters) {
        const char s = l.sign > 0 ? '+' : '-';
        if (l.twist)
            os << "t " << l.i << ' ' << s << "\n";
        else
            os << "s " << l.i << ' ' << l.j << ' ' << s << "\n";
    }
    return os.str();
}

// Braid lines of a braid or presentation file. Lines the callback accepts
// (returns true) are consumed by it.
template <class Extra>
PureBraidWord parse_braid_lines(std::istream& in, const std::string& file, Extra&& extra) {
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    PureBraidWord P;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        if (line.empty()) continue;
        if (!have_header) {
            P.n = detail::parse_header(line, "braid", "n", file, lineno);
            have_header = true;
            continue;
        }
        auto tok = detail::split_ws(line);
        PureLetter l;
        if (tok[0] == "s" && tok.size() == 4) {
            l = PureLetter::sigma(detail::parse_index(tok[1], file, lineno), detail::parse_index(tok[2], file, lineno));
            if (!detail::parse_sign(tok[3], l.sign)) throw parse_error(file, lineno, "sign must be + or -");
            if (l.i < 1 || l.i >= l.j || l.j > P.n) throw parse_error(file, lineno, "need 1 <= i < j <= n");
        } else if (tok[0] == "t" && tok.size() == 3) {
            l = PureLetter::t(detail::parse_index(tok[1], file, lineno));
            if (!detail::parse_sign(tok[2], l.sign)) throw parse_error(file, lineno, "sign must be + or -");
            if (l.i < 1 || l.i > P.n) throw parse_error(file, lineno, "need 1 <= k <= n");
        } else if (extra(tok, lineno)) {
            continue;
        } else {
            throw parse_error(file, lineno, "expected 's <i> <j> <+|->' or 't <k> <+|->'");
        }
        P.letters.push_back(l);
    }
    if (!have_header) throw parse_error(file, lineno, "missing 'braid n=<k>' header");
    return P;
}

inline PureBraidWord parse_braid(std::istream& in, const std::string& file = "") {
    return parse_braid_lines(in, file, [](const std::vector<std::string>&, int) { return false; });
}

inline PureBraidWord parse_braid(const std::string& text) {
    std::istringstream is(text);
    return parse_braid(is);
}

}  // namespace hopfdiag
