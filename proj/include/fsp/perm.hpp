#pragma once
#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsp {

/// One-line notation for elements of S_{n+1}: perm[i] = w(i+1), values 1..n+1.
using Perm = std::vector<int>;
/// Sequence of simple-reflection indices, 1-based: (i1,...,ir) means
/// s_{i1} s_{i2} ... s_{ir}.
using Word = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = i + 1;
    return w;
}

inline void perm_validate(const Perm& w) {
    std::vector<int> seen(w.size() + 1, 0);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v]++)
            throw std::invalid_argument("malformed one-line notation");
    }
}

inline int perm_rank(const Perm& w) { return static_cast<int>(w.size()) - 1; }

/// (u*v)(k) = u(v(k))
inline Perm perm_multiply(const Perm& u, const Perm& v) {
    Perm r(u.size());
    for (size_t k = 0; k < u.size(); ++k) r[k] = u[v[k] - 1];
    return r;
}

inline Perm perm_inverse(const Perm& w) {
    Perm r(w.size());
    for (size_t k = 0; k < w.size(); ++k) r[w[k] - 1] = k + 1;
    return r;
}

inline int perm_length(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

/// w * s_i: swaps the entries in positions i, i+1 (1-based i <= n).
inline Perm apply_simple(const Perm& w, int i) {
    Perm r(w);
    std::swap(r[i - 1], r[i]);
    return r;
}

inline Perm perm_from_word(int n, const Word& I) {
    Perm w = perm_identity(n);
    for (int i : I) w = apply_simple(w, i);
    return w;
}

inline Perm longest_element(int n) {
    Perm w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = n + 1 - i;
    return w;
}

inline bool is_reduced_word(int n, const Word& I, const Perm& w) {
    return static_cast<int>(I.size()) == perm_length(w) &&
           perm_from_word(n, I) == w;
}

/// The complete set red(w), by recursive descent on right descents.
inline std::set<Word> all_reduced_words(const Perm& w) {
    int n = perm_rank(w);
    if (perm_length(w) == 0) return {Word{}};
    std::set<Word> out;
    for (int i = 1; i <= n; ++i) {
        if (w[i - 1] > w[i]) {  // right descent: l(w s_i) < l(w)
            for (const Word& J : all_reduced_words(apply_simple(w, i))) {
                Word I(J);
                I.push_back(i);
                out.insert(std::move(I));
            }
        }
    }
    return out;
}

/// Lexicographically smallest reduced word (the default fixed choice).
inline Word lex_min_reduced_word(const Perm& w) {
    if (perm_length(w) == 0) return {};
    int n = perm_rank(w);
    // smallest first letter i with l(s_i w) < l(w), then recurse on s_i w:
    // lex order on words read left to right
    for (int i = 1; i <= n; ++i) {
        Perm sw = perm_multiply(perm_from_word(n, {i}), w);
        if (perm_length(sw) < perm_length(w)) {
            Word rest = lex_min_reduced_word(sw);
            Word I{i};
            I.insert(I.end(), rest.begin(), rest.end());
            return I;
        }
    }
    throw std::logic_error("unreachable: nonidentity element has a descent");
}

/// All elements of S_{n+1}, ordered by length then lex on one-line notation.
inline std::vector<Perm> all_perms_length_order(int n) {
    std::vector<Perm> all;
    Perm w = perm_identity(n);
    do {
        all.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::stable_sort(all.begin(), all.end(), [](const Perm& a, const Perm& b) {
        int la = perm_length(a), lb = perm_length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    return all;
}

/// Bruhat order via the subword property: collect every v obtainable as a
/// subword of a fixed reduced word of w, then test membership.
inline bool bruhat_leq(const Perm& u, const Perm& w) {
    if (u.size() != w.size())
        throw std::invalid_argument("bruhat_leq: rank mismatch");
    Word I = lex_min_reduced_word(w);
    std::set<Perm> reach{perm_identity(perm_rank(w))};
    for (int i : I) {
        std::set<Perm> next = reach;
        for (const Perm& v : reach) {
            Perm vs = apply_simple(v, i);
            if (perm_length(vs) > perm_length(v)) next.insert(vs);
        }
        reach = std::move(next);
    }
    return reach.count(u) > 0;
}

/// Coxeter exponent for type A: 3 for adjacent, 2 for commuting generators.
inline int coxeter_m(int i, int j) { return std::abs(i - j) == 1 ? 3 : 2; }

inline std::string perm_str(const Perm& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w[i]);
    }
    return s;
}

inline Perm perm_parse(const std::string& text) {
    std::istringstream in(text);
    Perm w;
    int v;
    while (in >> v) w.push_back(v);
    perm_validate(w);
    return w;
}

inline std::string word_str(const Word& I) {
    std::string s;
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I[i]);
    }
    return s;
}

} // namespace fsp
