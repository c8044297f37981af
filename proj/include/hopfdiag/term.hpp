#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hopfdiag {

enum class Gen : std::uint8_t { Delta, Eps, S, Sinv, OmegaPlus, OmegaMinus, ThetaPlus, ThetaMinus, BraidPlus, BraidMinus };

inline constexpr std::array<Gen, 10> all_gens = {Gen::Delta,      Gen::Eps,       Gen::S,          Gen::Sinv,
                                                 Gen::OmegaPlus,  Gen::OmegaMinus, Gen::ThetaPlus, Gen::ThetaMinus,
                                                 Gen::BraidPlus,  Gen::BraidMinus};

inline int arity_in(Gen g) {
    switch (g) {
        case Gen::OmegaPlus:
        case Gen::OmegaMinus:
        case Gen::BraidPlus:
        case Gen::BraidMinus: return 2;
        default: return 1;
    }
}

inline int arity_out(Gen g) {
    switch (g) {
        case Gen::Delta:
        case Gen::BraidPlus:
        case Gen::BraidMinus: return 2;
        case Gen::S:
        case Gen::Sinv: return 1;
        default: return 0;
    }
}

inline bool is_antipode(Gen g) { return g == Gen::S || g == Gen::Sinv; }
inline bool is_braid(Gen g) { return g == Gen::BraidPlus || g == Gen::BraidMinus; }

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Delta: return "delta";
        case Gen::Eps: return "eps";
        case Gen::S: return "s";
        case Gen::Sinv: return "sinv";
        case Gen::OmegaPlus: return "w+";
        case Gen::OmegaMinus: return "w-";
        case Gen::ThetaPlus: return "t+";
        case Gen::ThetaMinus: return "t-";
        case Gen::BraidPlus: return "x+";
        case Gen::BraidMinus: return "x-";
    }
    return "?";
}

inline bool gen_from_name(const std::string& s, Gen& out) {
    for (Gen g : all_gens)
        if (s == gen_name(g)) {
            out = g;
            return true;
        }
    return false;
}

struct Slice {
    int left = 0;
    Gen gen = Gen::Eps;
    int right = 0;

    int width_in() const { return left + arity_in(gen) + right; }
    int width_out() const { return left + arity_out(gen) + right; }

    friend bool operator==(const Slice&, const Slice&) = default;
    friend auto operator<=>(const Slice& a, const Slice& b) {
        return std::tie(a.left, a.gen, a.right) <=> std::tie(b.left, b.gen, b.right);
    }
};

class term_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Morphism of the free braided category; slices listed bottom to top.
struct BraidedTerm {
    int dom = 0;
    std::vector<Slice> slices;

    BraidedTerm() = default;
    explicit BraidedTerm(int d, std::vector<Slice> s = {}) : dom(d), slices(std::move(s)) { check(); }

    int cod() const { return slices.empty() ? dom : slices.back().width_out(); }

    void check() const {
        if (dom < 0) throw term_error("negative domain");
        int w = dom;
        for (std::size_t k = 0; k < slices.size(); ++k) {
            const Slice& s = slices[k];
            if (s.left < 0 || s.right < 0) throw term_error("negative padding in slice " + std::to_string(k + 1));
            if (s.width_in() != w)
                throw term_error("width mismatch at slice " + std::to_string(k + 1) + ": expected " +
                                 std::to_string(w) + ", got " + std::to_string(s.width_in()));
            w = s.width_out();
        }
    }

    std::size_t count(Gen g) const {
        return static_cast<std::size_t>(std::count_if(slices.begin(), slices.end(), [g](const Slice& s) { return s.gen == g; }));
    }
    std::size_t antipode_count() const { return count(Gen::S) + count(Gen::Sinv); }

    friend bool operator==(const BraidedTerm&, const BraidedTerm&) = default;
};

// A form *^n -> 1.
struct HopfDiagram {
    BraidedTerm term;

    HopfDiagram() = default;
    explicit HopfDiagram(BraidedTerm t) : term(std::move(t)) {
        if (term.cod() != 0) throw term_error("Hopf diagram must have codomain 0, got " + std::to_string(term.cod()));
    }
    int n() const { return term.dom; }

    friend bool operator==(const HopfDiagram&, const HopfDiagram&) = default;
};

inline BraidedTerm gen_term(Gen g) { return BraidedTerm(arity_in(g), {Slice{0, g, 0}}); }

inline BraidedTerm identity_term(int n) { return BraidedTerm(n); }

// f first, then g.
inline BraidedTerm term_compose(const BraidedTerm& f, const BraidedTerm& g) {
    if (f.cod() != g.dom)
        throw term_error("arity mismatch: cod " + std::to_string(f.cod()) + " vs dom " + std::to_string(g.dom));
    BraidedTerm r;
    r.dom = f.dom;
    r.slices = f.slices;
    r.slices.insert(r.slices.end(), g.slices.begin(), g.slices.end());
    return r;
}

inline BraidedTerm pad_term(const BraidedTerm& t, int l, int r) {
    BraidedTerm out;
    out.dom = t.dom + l + r;
    out.slices.reserve(t.slices.size());
    for (Slice s : t.slices) {
        s.left += l;
        s.right += r;
        out.slices.push_back(s);
    }
    return out;
}

inline BraidedTerm term_tensor(const BraidedTerm& f, const BraidedTerm& g) {
    return term_compose(pad_term(f, 0, g.dom), pad_term(g, f.cod(), 0));
}

inline BraidedTerm term_tensor_all(const std::vector<BraidedTerm>& ts) {
    BraidedTerm r;
    for (const auto& t : ts) r = term_tensor(r, t);
    return r;
}

// Left comb: Delta^{(n+1)} = (Delta^{(n)} (x) id) Delta.
inline BraidedTerm delta_power(int n) {
    if (n < 0) throw term_error("negative delta power");
    BraidedTerm c(1);
    for (int k = 1; k <= n; ++k) c.slices.push_back(Slice{0, Gen::Delta, k - 1});
    c.check();
    return c;
}

inline HopfDiagram conv_identity(int n) {
    BraidedTerm t(n);
    for (int k = 0; k < n; ++k) t.slices.push_back(Slice{0, Gen::Eps, n - 1 - k});
    return HopfDiagram(t);
}

// Coproduct of *^n: a_1 b_1 ... a_n b_n routed to a_1..a_n b_1..b_n by positive braidings.
inline BraidedTerm coproduct_n(int n) {
    BraidedTerm t(n);
    for (int k = n - 1; k >= 0; --k) t.slices.push_back(Slice{k, Gen::Delta, 2 * (n - 1 - k)});
    const int w = 2 * n;
    for (int i = n - 1; i >= 1; --i) {
        int p = 2 * i - 1;
        for (int s = 0; s < n - i; ++s, ++p) t.slices.push_back(Slice{p, Gen::BraidPlus, w - p - 2});
    }
    t.check();
    return t;
}

inline HopfDiagram conv_compose(const HopfDiagram& d1, const HopfDiagram& d2) {
    if (d1.n() != d2.n())
        throw term_error("input-count mismatch: " + std::to_string(d1.n()) + " vs " + std::to_string(d2.n()));
    return HopfDiagram(term_compose(coproduct_n(d1.n()), term_tensor(d1.term, d2.term)));
}

inline std::string term_to_string(const BraidedTerm& t) {
    std::ostringstream os;
    os << "hd n=" << t.dom << "\n";
    for (const auto& s : t.slices) os << s.left << " " << gen_name(s.gen) << " " << s.right << "\n";
    return os.str();
}

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& file, int line, const std::string& msg)
        : std::runtime_error((file.empty() ? std::string("<input>") : file) + ":" + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {
inline std::string strip_comment(std::string s) {
    auto h = s.find('#');
    if (h != std::string::npos) s.erase(h);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline int parse_header(const std::string& line, const std::string& kw, const std::string& key, const std::string& file,
                        int lineno) {
    std::istringstream is(line);
    std::string a, b, extra;
    is >> a >> b;
    if (a != kw || b.rfind(key + "=", 0) != 0 || (is >> extra))
        throw parse_error(file, lineno, "expected header '" + kw + " " + key + "=<int>'");
    try {
        std::size_t used = 0;
        int v = std::stoi(b.substr(key.size() + 1), &used);
        if (used != b.size() - key.size() - 1 || v < 0) throw std::invalid_argument("x");
        return v;
    } catch (const std::exception&) {
        throw parse_error(file, lineno, "bad value in header");
    }
}

inline bool parse_int(const std::string& s, int& out) {
    try {
        std::size_t used = 0;
        out = std::stoi(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}
}  // namespace detail

inline BraidedTerm parse_term(std::istream& in, const std::string& file = "") {
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    BraidedTerm t;
    int width = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::strip_comment(raw);
        if (line.empty()) continue;
        if (!have_header) {
            t.dom = detail::parse_header(line, "hd", "n", file, lineno);
            width = t.dom;
            have_header = true;
            continue;
        }
        std::istringstream is(line);
        std::string ls, gs, rs, extra;
        is >> ls >> gs >> rs;
        Slice s;
        if (rs.empty() || (is >> extra) || !detail::parse_int(ls, s.left) || !detail::parse_int(rs, s.right) ||
            s.left < 0 || s.right < 0)
            throw parse_error(file, lineno, "expected '<left> <gen> <right>'");
        if (!gen_from_name(gs, s.gen)) throw parse_error(file, lineno, "unknown generator '" + gs + "'");
        if (s.width_in() != width)
            throw parse_error(file, lineno,
                              "width mismatch: slice consumes " + std::to_string(s.width_in()) + " strands, current width is " +
                                  std::to_string(width));
        width = s.width_out();
        t.slices.push_back(s);
    }
    if (!have_header) throw parse_error(file, lineno, "missing 'hd n=<dom>' header");
    return t;
}

inline BraidedTerm parse_term(const std::string& text) {
    std::istringstream is(text);
    return parse_term(is);
}

}  // namespace hopfdiag
