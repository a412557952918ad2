#include "macmahon/quasishuffle.hpp"

#include "macmahon/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace macmahon {

LinComb LinComb::single(Vec w, Rational c) {
    LinComb l;
    l.add(w, c);
    return l;
}

void LinComb::add(const Vec& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational LinComb::coeff(const Vec& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

LinComb operator*(const Rational& c, const LinComb& l) {
    LinComb out;
    if (c.is_zero()) return out;
    for (const auto& [w, x] : l.terms_) out.terms_.emplace(w, c * x);
    return out;
}

int LinComb::max_word_weight() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, weight(w));
    return m;
}

int LinComb::max_filtration() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, filtration(w));
    return m;
}

std::string LinComb::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        os << c.str() << "*(" << vec_str(w) << ")";
        first = false;
    }
    return os.str();
}

namespace {

Int factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void require_letters(const Vec& w) {
    for (int x : w)
        if (x < 1) throw std::invalid_argument("quasi-shuffle letters must be >= 1");
}

} // namespace

LinComb diamond(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("diamond letters must be >= 1");
    LinComb out;
    out.add(Vec{i + j + 1}, Rational(factorial(i) * factorial(j), factorial(i + j + 1)));
    for (int m = 0; m < i + j; ++m) {
        Int b = 0;
        if (m + 1 <= i) {
            const Int c = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(m + 1));
            b += (i % 2 ? -c : c);
        }
        if (m + 1 <= j) {
            const Int c = binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(m + 1));
            b += (j % 2 ? -c : c);
        }
        if (sgn(b) == 0) continue;
        const Rational coeff = Rational(b) * bernoulli(i + j - m) / Rational(Int(i + j - m));
        out.add(Vec{m + 1}, coeff);
    }
    return out;
}

LinComb diamond_fold(const std::vector<int>& letters) {
    if (letters.empty()) throw std::invalid_argument("diamond product of no letters");
    LinComb cur = LinComb::single(Vec{letters[0]});
    for (std::size_t t = 1; t < letters.size(); ++t) {
        LinComb next;
        for (const auto& [w, c] : cur.terms()) next += c * diamond(w[0], letters[t]);
        cur = std::move(next);
    }
    return cur;
}

namespace {

std::mutex shuffle_mutex;
std::map<std::pair<Vec, Vec>, LinComb> shuffle_cache;

LinComb prepend(int letter, const LinComb& l) {
    LinComb out;
    for (const auto& [w, c] : l.terms()) {
        Vec nw;
        nw.reserve(w.size() + 1);
        nw.push_back(letter);
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(nw, c);
    }
    return out;
}

LinComb shuffle_impl(const Vec& w, const Vec& v) {
    if (w.empty()) return LinComb::single(v);
    if (v.empty()) return LinComb::single(w);
    {
        std::lock_guard<std::mutex> lock(shuffle_mutex);
        auto it = shuffle_cache.find({w, v});
        if (it != shuffle_cache.end()) return it->second;
    }
    const Vec wr(w.begin() + 1, w.end());
    const Vec vr(v.begin() + 1, v.end());
    LinComb out = prepend(w[0], shuffle_impl(wr, v));
    out += prepend(v[0], shuffle_impl(w, vr));
    const LinComb tail = shuffle_impl(wr, vr);
    const LinComb merged = diamond(w[0], v[0]);
    for (const auto& [z, c] : merged.terms()) out += c * prepend(z[0], tail);
    std::lock_guard<std::mutex> lock(shuffle_mutex);
    return shuffle_cache.emplace(std::make_pair(w, v), std::move(out)).first->second;
}

} // namespace

LinComb quasi_shuffle(const Vec& w, const Vec& v) {
    require_letters(w);
    require_letters(v);
    return shuffle_impl(w, v);
}

QSeries u_of_lincomb(const LinComb& l, int truncation) {
    QSeries out(truncation);
    for (const auto& [w, c] : l.terms()) {
        if (w.empty()) {
            out.set_coeff(0, out.coeff(0) + c);
            continue;
        }
        auto u = u_coeffs(w, truncation);
        for (int n = filtration(w) - weight(w); n <= truncation; ++n) {
            const Int& un = (*u)[static_cast<std::size_t>(n)];
            if (sgn(un) == 0) continue;
            out.set_coeff(n, out.coeff(n) + c * Rational(un));
        }
    }
    return out;
}

LinComb sym_orbit(const Vec& vec) {
    if (vec.empty()) throw std::invalid_argument("vector must have length >= 1");
    Vec sorted(vec);
    std::sort(sorted.begin(), sorted.end());
    Int stab(1);
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        stab *= factorial(static_cast<int>(j - i));
        i = j;
    }
    LinComb out;
    const Rational c = Rational(stab);
    do {
        out.add(sorted, c);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

QSeries sym_u(const Vec& vec, int truncation) {
    for (int x : vec)
        if (x < 1 || x % 2 == 0)
            throw std::invalid_argument("symmetrized series requires all entries odd and >= 1");
    return u_of_lincomb(sym_orbit(vec), truncation);
}

QSeries hoffman_sym(const Vec& vec, int truncation) {
    if (vec.empty()) throw std::invalid_argument("vector must have length >= 1");
    require_letters(vec);
    const int a = static_cast<int>(vec.size());
    QSeries out(truncation);
    std::vector<int> assign(static_cast<std::size_t>(a), 0);
    std::function<void(int, int)> visit = [&](int pos, int nblocks) {
        if (pos == a) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
            for (int t = 0; t < a; ++t)
                blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(t)])].push_back(
                    vec[static_cast<std::size_t>(t)]);
            Rational c((a - nblocks) % 2 ? -1 : 1);
            QSeries prod = QSeries::constant(Rational(1), truncation);
            for (const auto& blk : blocks) {
                c *= Rational(factorial(static_cast<int>(blk.size()) - 1));
                prod = prod * u_of_lincomb(diamond_fold(blk), truncation);
            }
            out = out + c * prod;
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            assign[static_cast<std::size_t>(pos)] = b;
            visit(pos + 1, std::max(nblocks, b + 1));
        }
    };
    visit(0, 0);
    return out;
}

ConvolutionReduction convolution_reduce(const Vec& alpha, const Vec& beta) {
    if (alpha.empty() || beta.empty()) throw std::invalid_argument("vector must have length >= 1");
    ConvolutionReduction out;
    out.comb = quasi_shuffle(alpha, beta);
    const int filter_bound = filtration(alpha) + filtration(beta);
    const int printed_weight_bound = weight(alpha) + weight(beta) +
                                     static_cast<int>(alpha.size()) +
                                     static_cast<int>(beta.size()) - 1;
    for (const auto& [w, c] : out.comb.terms()) {
        if (filtration(w) > filter_bound)
            throw std::logic_error("quasi-shuffle violated the filtration bound");
        out.max_word_weight = std::max(out.max_word_weight, weight(w));
    }
    out.weight_bound_flag = out.max_word_weight > printed_weight_bound;
    return out;
}

namespace {
std::mutex span_mutex;
std::map<int, std::shared_ptr<const WordSpan>> span_cache;

void enumerate_words(int bound, Vec& cur, std::vector<Vec>& out) {
    if (!cur.empty()) out.push_back(cur);
    const int used = filtration(cur);
    // Appending an entry v costs v+1 of the filtration budget.
    for (int v = 0; used + v + 1 <= bound; ++v) {
        cur.push_back(v);
        enumerate_words(bound, cur, out);
        cur.pop_back();
    }
}
} // namespace

WordSpan::WordSpan(int bound) : bound_(bound) {
    if (bound < 2) throw std::invalid_argument("word span bound must be >= 2");
    Vec cur;
    enumerate_words(bound, cur, cands_);
    std::sort(cands_.begin(), cands_.end(), VecOrder());
    rows_ = static_cast<int>(cands_.size()) + 20;

    QMat a(static_cast<std::size_t>(rows_), QRow(cands_.size()));
    for (std::size_t c = 0; c < cands_.size(); ++c) {
        auto u = u_coeffs(cands_[c], rows_);
        for (int r = 0; r < rows_; ++r) a[static_cast<std::size_t>(r)][c] = Rational((*u)[static_cast<std::size_t>(r) + 1]);
    }
    Nullspace ns = nullspace(a);
    const int check = rows_ + 20;
    for (std::size_t i = 0; i < ns.basis.size(); ++i) {
        LinComb row;
        for (std::size_t c = 0; c < cands_.size(); ++c) row.add(cands_[c], ns.basis[i][c]);
        if (!u_of_lincomb(row, check).is_zero())
            throw std::logic_error("word-span kernel failed series verification");
        kernel_.push_back(std::move(row));
        kernel_leads_.push_back(cands_[static_cast<std::size_t>(ns.leading_cols[i])]);
    }
}

std::shared_ptr<const WordSpan> WordSpan::get(int bound) {
    std::lock_guard<std::mutex> lock(span_mutex);
    auto it = span_cache.find(bound);
    if (it != span_cache.end()) return it->second;
    auto made = std::shared_ptr<const WordSpan>(new WordSpan(bound));
    span_cache.emplace(bound, made);
    return made;
}

LinComb WordSpan::canonicalize(LinComb l) const {
    for (std::size_t i = 0; i < kernel_.size(); ++i) {
        const Rational c = l.coeff(kernel_leads_[i]);
        if (c.is_zero()) continue;
        l -= c * kernel_[i];
    }
    return l;
}

std::optional<LinComb> WordSpan::solve_series(const QSeries& target) const {
    if (target.truncation() < rows_)
        throw std::invalid_argument("target truncation below the solve window");
    QMat a(static_cast<std::size_t>(rows_), QRow(cands_.size()));
    QRow b(static_cast<std::size_t>(rows_));
    for (std::size_t c = 0; c < cands_.size(); ++c) {
        auto u = u_coeffs(cands_[c], rows_);
        for (int r = 0; r < rows_; ++r)
            a[static_cast<std::size_t>(r)][c] = Rational((*u)[static_cast<std::size_t>(r) + 1]);
    }
    for (int r = 0; r < rows_; ++r) b[static_cast<std::size_t>(r)] = target.coeff(r + 1);
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    LinComb out;
    for (std::size_t c = 0; c < cands_.size(); ++c) out.add(cands_[c], (*x)[c]);
    return canonicalize(std::move(out));
}

LinComb times_n_reduce(const Vec& alpha, int verify_truncation) {
    if (alpha.empty()) throw std::invalid_argument("vector must have length >= 1");
    for (int x : alpha)
        if (x < 0) throw std::invalid_argument("vector entries must be >= 0");
    const int bound = filtration(alpha) + 2;
    auto span = WordSpan::get(bound);
    const int work = std::max(span->solve_rows(), verify_truncation);
    const QSeries target = u_series(alpha, work).derivative();
    auto sol = span->solve_series(target);
    if (!sol)
        throw NoRepresentation("no representation found at stated filtration for n*M_(" +
                               vec_str(alpha) + ")");
    if (!agree(u_of_lincomb(*sol, verify_truncation), target))
        throw std::logic_error("times-n reduction failed verification");
    return *sol;
}

namespace {

// D^power of the word's series, as a canonical constant-coefficient LinComb.
LinComb reduce_d_power(const Vec& w, int power, int verify_truncation) {
    LinComb cur = LinComb::single(w);
    for (int step = 0; step < power; ++step) {
        LinComb next;
        for (const auto& [word, c] : cur.terms()) next += c * times_n_reduce(word, verify_truncation);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

LinComb reduce_polynomial_terms(
    const std::vector<std::pair<std::vector<Rational>, Vec>>& terms,
    int verify_truncation) {
    LinComb total;
    int bound = 2;
    QSeries expected(verify_truncation);
    for (const auto& [poly, w] : terms) {
        int deg = 0;
        for (std::size_t j = 0; j < poly.size(); ++j)
            if (!poly[j].is_zero()) deg = static_cast<int>(j);
        bound = std::max(bound, filtration(w) + 2 * deg);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            if (poly[j].is_zero()) continue;
            total += poly[j] * reduce_d_power(w, static_cast<int>(j), verify_truncation);
        }
        expected = expected + u_series(w, verify_truncation).poly_in_d(poly);
    }
    total = WordSpan::get(bound)->canonicalize(std::move(total));
    if (!agree(u_of_lincomb(total, verify_truncation), expected))
        throw std::logic_error("polynomial reduction failed verification");
    return total;
}

} // namespace macmahon
