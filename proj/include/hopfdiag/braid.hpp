#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfdiag {

// Braid word in Artin generators: letter +p is sigma_p, -p its inverse
// (1-based). sigma_p is the crossing where the strand coming from position p
// passes over, i.e. the tangle event Cross(p,+). Read bottom to top.
struct ArtinWord {
    int n = 0;
    std::vector<int> letters;
};

inline ArtinWord artin_inverse(const ArtinWord& w) {
    ArtinWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

inline ArtinWord artin_concat(const ArtinWord& a, const ArtinWord& b) {
    ArtinWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

// perm[k] = original position (0-based) of the strand at position k on top
inline std::vector<int> artin_permutation(const ArtinWord& w) {
    std::vector<int> perm(w.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : w.letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
    return perm;
}

inline bool artin_is_pure(const ArtinWord& w) {
    auto p = artin_permutation(w);
    for (int k = 0; k < w.n; ++k)
        if (p[k] != k) return false;
    return true;
}

// Dehornoy handle reduction; returns a reduced word, empty iff the braid is
// trivial.
inline std::vector<int> handle_reduce(std::vector<int> w) {
    for (;;) {
        bool found = false;
        for (std::size_t q = 1; q < w.size() && !found; ++q) {
            const int i = std::abs(w[q]);
            for (std::size_t pp = q; pp-- > 0;) {
                const int j = std::abs(w[pp]);
                if (j < i) break;
                if (j != i) continue;
                if (w[pp] == w[q]) break;
                // handle w[pp] v w[q]; v only has letters of index > i
                const int e = w[pp] > 0 ? 1 : -1;
                std::vector<int> r(w.begin(), w.begin() + pp);
                for (std::size_t k = pp + 1; k < q; ++k) {
                    if (std::abs(w[k]) == i + 1) {
                        const int d = w[k] > 0 ? 1 : -1;
                        r.push_back(-e * (i + 1));
                        r.push_back(d * i);
                        r.push_back(e * (i + 1));
                    } else {
                        r.push_back(w[k]);
                    }
                }
                r.insert(r.end(), w.begin() + q + 1, w.end());
                // free reduction keeps words short
                std::vector<int> s;
                for (int l : r) {
                    if (!s.empty() && s.back() == -l)
                        s.pop_back();
                    else
                        s.push_back(l);
                }
                w = std::move(s);
                found = true;
                break;
            }
        }
        if (!found) return w;
    }
}

inline bool braid_is_trivial(const ArtinWord& w) { return handle_reduce(w.letters).empty(); }

inline bool braid_equal(const ArtinWord& a, const ArtinWord& b) {
    if (a.n != b.n) return false;
    return braid_is_trivial(artin_concat(a, artin_inverse(b)));
}

// Letter of a ribbon pure braid word: sigma_{i,j}^{sign} (i<j) or t_k^{sign}.
struct PureLetter {
    bool twist = false;
    int i = 0, j = 0;  // for a twist only i is used
    int sign = 1;

    static PureLetter sigma(int i, int j, int sign = 1) { return {false, i, j, sign}; }
    static PureLetter t(int k, int sign = 1) { return {true, k, 0, sign}; }
    PureLetter inverse() const { return {twist, i, j, -sign}; }
    bool operator==(const PureLetter&) const = default;
};

class braid_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PureBraidWord {
    int n = 0;
    std::vector<PureLetter> letters;

    void check() const {
        for (const auto& l : letters) {
            bool ok = l.twist ? (l.i >= 1 && l.i <= n) : (l.i >= 1 && l.i < l.j && l.j <= n);
            if (!ok || (l.sign != 1 && l.sign != -1)) throw braid_error("pure braid letter out of range");
        }
    }
    bool operator==(const PureBraidWord&) const = default;
};

inline PureBraidWord pure_inverse(const PureBraidWord& w) {
    PureBraidWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->inverse());
    return r;
}

inline PureBraidWord pure_concat(const PureBraidWord& a, const PureBraidWord& b) {
    PureBraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

// sigma_{i,j}: strand j travels left over strands i+1..j-1, winds once
// around strand i (positively for sign +1) and travels back over them. As
// crossings read bottom to top.
inline std::vector<int> sigma_artin(int i, int j, int sign) {
    std::vector<int> r;
    for (int c = j - 1; c > i; --c) r.push_back(-c);
    r.push_back(sign * i);
    r.push_back(sign * i);
    for (int c = i + 1; c < j; ++c) r.push_back(c);
    return r;
}

// Underlying braid (twists forgotten). Pure words compose like maps: the first
// letter is on top.
inline ArtinWord pure_to_artin(const PureBraidWord& w) {
    ArtinWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (it->twist) continue;
        auto s = sigma_artin(it->i, it->j, it->sign);
        r.letters.insert(r.letters.end(), s.begin(), s.end());
    }
    return r;
}

// Self-linking (framing) of each component.
inline std::vector<int> pure_twists(const PureBraidWord& w) {
    std::vector<int> t(w.n, 0);
    for (const auto& l : w.letters)
        if (l.twist) t[l.i - 1] += l.sign;
    return t;
}

inline void pure_free_reduce(PureBraidWord& w) {
    std::vector<PureLetter> r;
    for (const auto& l : w.letters) {
        if (!r.empty() && r.back() == l.inverse())
            r.pop_back();
        else
            r.push_back(l);
    }
    w.letters = std::move(r);
}

// Rewrites a pure Artin word in the sigma_{i,j} generators. The word is cut
// into factors beta s_p^{+-2} beta^{-1}, beta the negative permutation braid of
// the current permutation (a strand moving left passes over); each factor is a
// band between strands a<b passing under the strands between them that sit
// left of the pair and over the others, and equals X sigma_{a,b}^{+-1} X^{-1}
// with X the product of sigma_{a,c} over the strands passed under.
inline PureBraidWord artin_to_pure(const ArtinWord& w) {
    if (!artin_is_pure(w)) throw braid_error("braid word is not pure");
    std::vector<std::vector<PureLetter>> factors;  // bottom to top
    std::vector<int> cur(w.n);
    std::iota(cur.begin(), cur.end(), 0);
    auto emit = [&](int pl, int e) {
        // pair at 0-based positions pl, pl+1 with cur[pl] < cur[pl+1]
        const int a = cur[pl], b = cur[pl + 1];
        std::vector<int> under;  // 1-based
        for (int k = 0; k < pl; ++k)
            if (cur[k] > a && cur[k] < b) under.push_back(cur[k] + 1);
        std::sort(under.begin(), under.end());
        std::vector<PureLetter> f;
        for (int c : under) f.push_back(PureLetter::sigma(a + 1, c, 1));
        f.push_back(PureLetter::sigma(a + 1, b + 1, e));
        for (auto it = under.rbegin(); it != under.rend(); ++it) f.push_back(PureLetter::sigma(a + 1, *it, -1));
        factors.push_back(std::move(f));
    };
    for (int l : w.letters) {
        const int p = std::abs(l) - 1;
        if (p < 0 || p + 1 >= w.n) throw braid_error("artin letter out of range");
        const bool ordered = cur[p] < cur[p + 1];
        if (l > 0) {
            if (ordered) emit(p, 1);
            std::swap(cur[p], cur[p + 1]);
        } else {
            std::swap(cur[p], cur[p + 1]);
            if (!ordered) emit(p, -1);
        }
    }
    PureBraidWord r{w.n, {}};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.letters.insert(r.letters.end(), it->begin(), it->end());
    pure_free_reduce(r);
    return r;
}

// Blackboard cabling of the strand that starts at position i (1-based).
inline ArtinWord artin_double(const ArtinWord& w, int i) {
    if (i < 1 || i > w.n) throw braid_error("strand index out of range");
    ArtinWord r{w.n + 1, {}};
    std::vector<int> cur(w.n);
    std::iota(cur.begin(), cur.end(), 0);
    const int s = i - 1;
    for (int l : w.letters) {
        const int p = std::abs(l) - 1, e = l > 0 ? 1 : -1;
        int q = p;  // new position of the left strand
        for (int k = 0; k < p; ++k)
            if (cur[k] == s) ++q;
        if (cur[p] == s) {
            r.letters.push_back(e * (q + 2));
            r.letters.push_back(e * (q + 1));
        } else if (cur[p + 1] == s) {
            r.letters.push_back(e * (q + 1));
            r.letters.push_back(e * (q + 2));
        } else {
            r.letters.push_back(e * (q + 1));
        }
        std::swap(cur[p], cur[p + 1]);
    }
    return r;
}

// Drops the strand that starts at position i (1-based).
inline ArtinWord artin_delete(const ArtinWord& w, int i) {
    if (i < 1 || i > w.n) throw braid_error("strand index out of range");
    ArtinWord r{w.n - 1, {}};
    std::vector<int> cur(w.n);
    std::iota(cur.begin(), cur.end(), 0);
    const int s = i - 1;
    for (int l : w.letters) {
        const int p = std::abs(l) - 1, e = l > 0 ? 1 : -1;
        if (cur[p] != s && cur[p + 1] != s) {
            int q = p;
            for (int k = 0; k < p; ++k)
                if (cur[k] == s) --q;
            r.letters.push_back(e * (q + 1));
        }
        std::swap(cur[p], cur[p + 1]);
    }
    return r;
}

// Doubling of the i-th component, letter by letter.
inline PureBraidWord double_strand(const PureBraidWord& w, int i) {
    w.check();
    if (i < 1 || i > w.n) throw braid_error("strand index out of range");
    PureBraidWord r{w.n + 1, {}};
    auto push = [&](std::vector<PureLetter> ls, int sign) {
        if (sign < 0) {
            std::reverse(ls.begin(), ls.end());
            for (auto& l : ls) l = l.inverse();
        }
        r.letters.insert(r.letters.end(), ls.begin(), ls.end());
    };
    using L = PureLetter;
    for (const auto& x : w.letters) {
        if (x.twist) {
            const int k = x.i;
            if (i < k)
                push({L::t(k + 1)}, x.sign);
            else if (i == k)
                push({L::sigma(i, i + 1), L::t(i), L::t(i + 1)}, x.sign);
            else
                push({L::t(k)}, x.sign);
            continue;
        }
        const int k = x.i, l = x.j;
        if (i < k)
            push({L::sigma(k + 1, l + 1)}, x.sign);
        else if (i == k)
            push({L::sigma(i, l + 1), L::sigma(i + 1, l + 1)}, x.sign);
        else if (i < l)
            push({L::sigma(k, l + 1)}, x.sign);
        else if (i == l)
            push({L::sigma(k, i), L::sigma(k, i + 1)}, x.sign);
        else
            push({L::sigma(k, l)}, x.sign);
    }
    return r;
}

inline PureBraidWord delete_strand(const PureBraidWord& w, int i) {
    w.check();
    if (i < 1 || i > w.n) throw braid_error("strand index out of range");
    PureBraidWord r{w.n - 1, {}};
    for (const auto& x : w.letters) {
        if (x.twist) {
            if (x.i != i) r.letters.push_back(PureLetter::t(x.i > i ? x.i - 1 : x.i, x.sign));
            continue;
        }
        if (x.i == i || x.j == i) continue;
        r.letters.push_back(PureLetter::sigma(x.i > i ? x.i - 1 : x.i, x.j > i ? x.j - 1 : x.j, x.sign));
    }
    return r;
}

}  // namespace hopfdiag
