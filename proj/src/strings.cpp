#include "gentle/strings.hpp"
#include "gentle/strings_detail.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gentle {

namespace {

std::vector<Letter> reversed_letters(const std::vector<Letter>& ls) {
    std::vector<Letter> out(ls.rbegin(), ls.rend());
    for (auto& l : out) l.inverse = !l.inverse;
    return out;
}

VertexId letter_start(const GentlePresentation& A, Letter l) {
    return l.inverse ? A.target(l.arrow) : A.source(l.arrow);
}
VertexId letter_end(const GentlePresentation& A, Letter l) {
    return l.inverse ? A.source(l.arrow) : A.target(l.arrow);
}

bool chain_consistent(const GentlePresentation& A, const std::vector<Letter>& ls) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        if (letter_end(A, ls[i]) != letter_start(A, ls[i + 1])) return false;
    return true;
}

} // namespace

StringWord StringWord::simple(VertexId v) {
    StringWord w;
    w.base_ = v;
    return w;
}

StringWord StringWord::make(const GentlePresentation& A, std::vector<Letter> letters,
                            VertexId base) {
    StringWord w;
    if (letters.empty()) {
        if (base == kNone) throw std::invalid_argument("empty string needs a base vertex");
        w.base_ = base;
        return w;
    }
    if (!chain_consistent(A, letters))
        throw std::invalid_argument("letters do not form a walk");
    auto rev = reversed_letters(letters);
    w.letters_ = rev < letters ? std::move(rev) : std::move(letters);
    return w;
}

VertexId StringWord::vertex_at(const GentlePresentation& A, std::size_t i) const {
    if (letters_.empty()) return base_;
    if (i == 0) return letter_start(A, letters_[0]);
    return letter_end(A, letters_[i - 1]);
}

std::vector<VertexId> StringWord::position_vertices(const GentlePresentation& A) const {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < position_count(); ++i) vs.push_back(vertex_at(A, i));
    return vs;
}

std::map<VertexId, std::uint32_t> StringWord::dim_vector(const GentlePresentation& A) const {
    std::map<VertexId, std::uint32_t> d;
    for (VertexId v : position_vertices(A)) ++d[v];
    return d;
}

std::string StringWord::str(const GentlePresentation& A) const {
    if (letters_.empty()) return "1(" + A.vertex_name(base_) + ")";
    std::string s;
    for (const Letter& l : letters_) {
        if (!s.empty()) s += ' ';
        s += A.arrow_name(l.arrow);
        if (l.inverse) s += '-';
    }
    return s;
}

StringSum StringSum::of(StringWord w) {
    StringSum m;
    m.add(std::move(w));
    return m;
}

void StringSum::add(StringWord w) {
    summands.insert(std::upper_bound(summands.begin(), summands.end(), w), std::move(w));
}

std::map<VertexId, std::uint32_t> StringSum::dim_vector(const GentlePresentation& A) const {
    std::map<VertexId, std::uint32_t> d;
    for (const auto& w : summands)
        for (auto [v, k] : w.dim_vector(A)) d[v] += k;
    return d;
}

std::uint32_t StringSum::total_dim() const {
    std::uint32_t t = 0;
    for (const auto& w : summands) t += w.total_dim();
    return t;
}

std::string StringSum::str(const GentlePresentation& A) const {
    if (summands.empty()) return "0";
    std::string s;
    for (const auto& w : summands) {
        if (!s.empty()) s += " + ";
        s += "(" + w.str(A) + ")";
    }
    return s;
}

bool is_valid_string(const GentlePresentation& A, const std::vector<Letter>& letters) {
    for (const Letter& l : letters)
        if (l.arrow < 0 || l.arrow >= static_cast<ArrowId>(A.arrow_count()))
            throw std::invalid_argument("unknown arrow id in string");
    if (!chain_consistent(A, letters)) return false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        const Letter& x = letters[i];
        const Letter& y = letters[i + 1];
        if (x.arrow == y.arrow && x.inverse != y.inverse) return false; // not reduced
        if (!x.inverse && !y.inverse && A.in_ideal(x.arrow, y.arrow)) return false;
        if (x.inverse && y.inverse && A.in_ideal(y.arrow, x.arrow)) return false;
    }
    return true;
}

bool is_valid_string(const GentlePresentation& A, const StringWord& w) {
    return w.is_simple() || is_valid_string(A, w.letters());
}

std::vector<Letter> parse_letters(const GentlePresentation& A, const std::string& text) {
    std::vector<Letter> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (tok.size() > 1 && tok.back() == '-') {
            inv = true;
            tok.pop_back();
        }
        auto a = A.arrow_index(tok);
        if (!a) throw std::invalid_argument("unknown arrow id '" + tok + "'");
        out.push_back({*a, inv});
    }
    return out;
}

StringWord parse_string(const GentlePresentation& A, const std::string& text) {
    auto letters = parse_letters(A, text);
    if (letters.empty()) throw std::invalid_argument("empty string literal");
    if (!is_valid_string(A, letters)) throw std::invalid_argument("not a valid string: " + text);
    return StringWord::make(A, std::move(letters));
}

namespace {

std::vector<Letter> direct_letters(const std::vector<ArrowId>& path) {
    std::vector<Letter> ls;
    for (ArrowId a : path) ls.push_back({a, false});
    return ls;
}

// Path as a string word based at the path's first target when the head
// vertex is dropped: [a1 a2 .. ak] -> word of a2..ak at vertex t(a1).
StringWord path_tail_word(const GentlePresentation& A, const std::vector<ArrowId>& path) {
    if (path.size() == 1) return StringWord::simple(A.target(path[0]));
    return StringWord::make(A, direct_letters({path.begin() + 1, path.end()}));
}

} // namespace

StringWord string_of_projective(const GentlePresentation& A, VertexId v) {
    const auto& out = A.out_arrows(v);
    if (out.empty()) return StringWord::simple(v);
    std::vector<ArrowId> leg0 = A.permitted_chain_from(out[0]);
    if (out.size() == 1) return StringWord::make(A, direct_letters(leg0));
    std::vector<ArrowId> leg1 = A.permitted_chain_from(out[1]);
    std::vector<Letter> ls = reversed_letters(direct_letters(leg0));
    for (ArrowId a : leg1) ls.push_back({a, false});
    return StringWord::make(A, std::move(ls));
}

StringWord string_of_injective(const GentlePresentation& A, VertexId v) {
    const auto& in = A.in_arrows(v);
    auto chain_ending_with = [&](ArrowId b) {
        std::vector<ArrowId> rev;
        for (ArrowId cur = b; cur != kNone; cur = A.prev_permitted(cur)) rev.push_back(cur);
        return std::vector<ArrowId>(rev.rbegin(), rev.rend());
    };
    if (in.empty()) return StringWord::simple(v);
    std::vector<ArrowId> leg0 = chain_ending_with(in[0]);
    if (in.size() == 1) return StringWord::make(A, direct_letters(leg0));
    std::vector<ArrowId> leg1 = chain_ending_with(in[1]);
    std::vector<Letter> ls = direct_letters(leg0);
    auto inv = reversed_letters(direct_letters(leg1));
    ls.insert(ls.end(), inv.begin(), inv.end());
    return StringWord::make(A, std::move(ls));
}

namespace {

bool is_source_pos(const StringWord& w, std::size_t i) {
    const auto& ls = w.letters();
    const std::size_t n = ls.size();
    const bool left_ok = (i == 0) || ls[i - 1].inverse;
    const bool right_ok = (i == n) || !ls[i].inverse;
    return left_ok && right_ok;
}

bool is_sink_pos(const StringWord& w, std::size_t i) {
    const auto& ls = w.letters();
    const std::size_t n = ls.size();
    const bool left_ok = (i == 0) || !ls[i - 1].inverse;
    const bool right_ok = (i == n) || ls[i].inverse;
    return left_ok && right_ok;
}

} // namespace

std::vector<VertexId> top(const GentlePresentation& A, const StringWord& w) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < w.position_count(); ++i)
        if (is_source_pos(w, i)) out.push_back(w.vertex_at(A, i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> socle(const GentlePresentation& A, const StringWord& w) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < w.position_count(); ++i)
        if (is_sink_pos(w, i)) out.push_back(w.vertex_at(A, i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> top(const GentlePresentation& A, const StringSum& m) {
    std::vector<VertexId> out;
    for (const auto& w : m.summands) {
        auto t = top(A, w);
        out.insert(out.end(), t.begin(), t.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Valley-tail syzygy of a single string. Appends the cover's projective
// strings and the kernel summands.
void cover_one(const GentlePresentation& A, const StringWord& w, StringSum& cover,
               StringSum& omega) {
    const auto& ls = w.letters();
    const std::size_t n = ls.size();

    // Overshoot tails per sink position: the leftover of the maximal
    // permitted path that covers the descent arriving there.
    std::vector<std::vector<ArrowId>> tail_from_left(n + 1), tail_from_right(n + 1);
    std::vector<char> have_left(n + 1, 0), have_right(n + 1, 0);

    auto end_source_summand = [&](ArrowId other) {
        std::vector<ArrowId> chain = A.permitted_chain_from(other);
        omega.add(path_tail_word(A, chain));
    };

    for (std::size_t i = 0; i <= n; ++i) {
        if (!is_source_pos(w, i)) continue;
        const VertexId v = w.vertex_at(A, i);
        cover.add(string_of_projective(A, v));

        if (i < n) {
            // Rightward descent i .. j (direct letters), sink at j.
            std::size_t j = i + 1;
            while (j < n && !ls[j].inverse) ++j;
            const std::size_t r = j - i;
            std::vector<ArrowId> chain = A.permitted_chain_from(ls[i].arrow);
            assert(chain.size() >= r);
            tail_from_left[j].assign(chain.begin() + static_cast<std::ptrdiff_t>(r), chain.end());
            have_left[j] = 1;
        } else if (n > 0) {
            // Right end of the word: the second leg of P(v) overshoots whole.
            const ArrowId used = ls[n - 1].arrow; // inverse letter, arrow out of v
            for (ArrowId d : A.out_arrows(v))
                if (d != used) end_source_summand(d);
        }

        if (i > 0) {
            // Leftward descent j .. i (inverse letters), sink at j.
            std::size_t j = i - 1;
            while (j > 0 && ls[j - 1].inverse) --j;
            const std::size_t r = i - j;
            std::vector<ArrowId> chain = A.permitted_chain_from(ls[i - 1].arrow);
            assert(chain.size() >= r);
            tail_from_right[j].assign(chain.begin() + static_cast<std::ptrdiff_t>(r), chain.end());
            have_right[j] = 1;
        } else if (n > 0) {
            const ArrowId used = ls[0].arrow; // direct letter, arrow out of v
            for (ArrowId d : A.out_arrows(v))
                if (d != used) end_source_summand(d);
        }

        if (n == 0)
            for (ArrowId d : A.out_arrows(v)) end_source_summand(d);
    }

    for (std::size_t s = 0; s <= n; ++s) {
        if (n == 0 || !is_sink_pos(w, s)) continue;
        if (s > 0 && s < n) {
            // Interior valley: both tails joined through the shared copy
            // of the sink vertex.
            assert(have_left[s] && have_right[s]);
            std::vector<Letter> joined = reversed_letters(direct_letters(tail_from_left[s]));
            for (ArrowId a : tail_from_right[s]) joined.push_back({a, false});
            omega.add(joined.empty() ? StringWord::simple(w.vertex_at(A, s))
                                     : StringWord::make(A, std::move(joined)));
        } else {
            // End valley: a single cover reaches it; only the strict
            // overshoot beyond the word contributes.
            const auto& tail = s == 0 ? tail_from_right[0] : tail_from_left[n];
            assert(s == 0 ? have_right[0] == 1 : have_left[n] == 1);
            if (!tail.empty()) omega.add(path_tail_word(A, tail));
        }
    }
}

} // namespace

CoverResult projective_cover(const GentlePresentation& A, const StringSum& m) {
    CoverResult res;
    for (const auto& w : m.summands) cover_one(A, w, res.cover, res.syzygy);
    assert(res.cover.total_dim() == m.total_dim() + res.syzygy.total_dim());
    return res;
}

Dim pd_string(const GentlePresentation& A, const StringSum& m, std::uint32_t cap) {
    StringSum cur = m;
    for (std::uint32_t k = 0; k <= cap; ++k) {
        if (cur.is_zero()) return Dim(k == 0 ? 0 : k - 1);
        StringSum next = projective_cover(A, cur).syzygy;
        if (next.is_zero()) return Dim(k);
        cur = std::move(next);
    }
    return Dim::infinity();
}

} // namespace gentle
