#include "braidlab/braid.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace braidlab {

Perm::Perm(std::vector<int> images_zero_based) : img_(std::move(images_zero_based)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || (size_t)x >= img_.size() || seen[(size_t)x])
            throw std::invalid_argument("Perm: not a bijection");
        seen[(size_t)x] = true;
    }
}

Perm Perm::transposition(size_t n, size_t i) {
    Perm p(n);
    std::swap(p.img_[i], p.img_[i + 1]);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm out(degree());
    for (size_t x = 0; x < degree(); ++x) out.img_[x] = img_[(size_t)o.img_[x]];
    return out;
}

Perm Perm::inverse() const {
    Perm out(degree());
    for (size_t x = 0; x < degree(); ++x) out.img_[(size_t)img_[x]] = (int)x;
    return out;
}

bool Perm::is_identity() const {
    for (size_t x = 0; x < degree(); ++x)
        if (img_[x] != (int)x) return false;
    return true;
}

size_t Perm::inversions() const {
    size_t count = 0;
    for (size_t i = 0; i < degree(); ++i)
        for (size_t j = i + 1; j < degree(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

std::string Perm::str() const {
    std::vector<bool> seen(degree(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t s = 0; s < degree(); ++s) {
        if (seen[s] || img_[s] == (int)s) continue;
        os << "(";
        size_t x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) os << " ";
            os << (x + 1);
            first = false;
            x = (size_t)img_[x];
        }
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

BraidWord::BraidWord(size_t strands, std::vector<BraidLetter> letters)
    : n_(strands), letters_(std::move(letters)) {
    for (const auto& l : letters_) {
        if (l.i < 1 || (size_t)l.i >= n_ || (l.e != 1 && l.e != -1))
            throw std::invalid_argument("BraidWord: letter out of range");
    }
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BraidWord: strand mismatch");
    BraidWord out(n_);
    out.letters_ = letters_;
    out.letters_.insert(out.letters_.end(), o.letters_.begin(), o.letters_.end());
    return out;
}

BraidWord BraidWord::inverse() const {
    BraidWord out(n_);
    out.letters_.reserve(letters_.size());
    for (size_t k = letters_.size(); k-- > 0;)
        out.letters_.push_back({letters_[k].i, -letters_[k].e});
    return out;
}

BraidWord BraidWord::power(long k) const {
    BraidWord base = k >= 0 ? *this : inverse();
    long reps = k >= 0 ? k : -k;
    BraidWord out(n_);
    for (long r = 0; r < reps; ++r) out = out * base;
    return out;
}

Perm BraidWord::underlying_perm() const {
    Perm p((size_t)n_);
    for (const auto& l : letters_) p = p * Perm::transposition(n_, (size_t)l.i - 1);
    return p;
}

bool BraidWord::operator<(const BraidWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                        o.letters_.begin(), o.letters_.end());
}

std::string BraidWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < letters_.size(); ++k) {
        if (k) os << ".";
        os << "s" << letters_[k].i;
        if (letters_[k].e < 0) os << "'";
    }
    return os.str();
}

void FormalBraidSum::add_term(const FieldScalar& c, const BraidWord& w) {
    if (w.strands() != n_) throw std::invalid_argument("FormalBraidSum: strand mismatch");
    terms_.emplace_back(c, w);
    normalize();
}

FormalBraidSum FormalBraidSum::from_terms(size_t strands,
                                          std::vector<std::pair<FieldScalar, BraidWord>> terms) {
    FormalBraidSum out(strands);
    for (const auto& [c, w] : terms)
        if (w.strands() != strands)
            throw std::invalid_argument("FormalBraidSum: strand mismatch");
    out.terms_ = std::move(terms);
    out.normalize();
    return out;
}

void FormalBraidSum::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<FieldScalar, BraidWord>> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().second == t.second)
            merged.back().first += t.first;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.first.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

FormalBraidSum FormalBraidSum::operator+(const FormalBraidSum& o) const {
    if (n_ != o.n_) throw std::invalid_argument("FormalBraidSum: strand mismatch");
    FormalBraidSum out(n_);
    out.terms_ = terms_;
    out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
    out.normalize();
    return out;
}

FormalBraidSum FormalBraidSum::scaled(const FieldScalar& c) const {
    FormalBraidSum out(n_);
    for (const auto& t : terms_) out.terms_.emplace_back(c * t.first, t.second);
    out.normalize();
    return out;
}

FormalBraidSum FormalBraidSum::operator*(const FormalBraidSum& o) const {
    if (n_ != o.n_) throw std::invalid_argument("FormalBraidSum: strand mismatch");
    FormalBraidSum out(n_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            out.terms_.emplace_back(a.first * b.first, a.second * b.second);
    out.normalize();
    return out;
}

std::string FormalBraidSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < terms_.size(); ++k) {
        if (k) os << " + ";
        os << "(" << terms_[k].first.str() << ")*" << terms_[k].second.str();
    }
    return os.str();
}

BraidWord matsumoto_lift(const Perm& t) {
    const size_t n = t.degree();
    Perm cur = t;
    std::vector<int> extracted;  // descent positions, in extraction order
    while (!cur.is_identity()) {
        int i = -1;
        for (size_t k = 0; k + 1 < n; ++k)
            if (cur(k) > cur((int)k + 1)) { i = (int)k; break; }
        if (i < 0) throw std::logic_error("matsumoto_lift: no descent in non-identity perm");
        cur = cur * Perm::transposition(n, (size_t)i);  // kills the descent
        extracted.push_back(i);
    }
    // cur = t * s_{i_1} * ... * s_{i_m} = id, so t = s_{i_m} ... s_{i_1}
    std::vector<BraidLetter> letters;
    letters.reserve(extracted.size());
    for (size_t k = extracted.size(); k-- > 0;) letters.push_back({extracted[k] + 1, +1});
    return BraidWord(n, std::move(letters));
}

std::vector<Perm> unshuffles(size_t p, size_t q) {
    const size_t n = p + q;
    std::vector<Perm> out;
    // a (p,q)-shuffle is determined by the image set of {1..p}; enumerate
    // those p-subsets in lexicographic order and invert
    std::vector<size_t> subset(p);
    for (size_t i = 0; i < p; ++i) subset[i] = i;
    while (true) {
        std::vector<bool> in_first(n, false);
        for (size_t s : subset) in_first[s] = true;
        std::vector<size_t> first_pos, second_pos;
        for (size_t x = 0; x < n; ++x) (in_first[x] ? first_pos : second_pos).push_back(x);
        std::vector<int> img(n);
        for (size_t i = 0; i < p; ++i) img[i] = (int)first_pos[i];
        for (size_t i = 0; i < q; ++i) img[p + i] = (int)second_pos[i];
        out.push_back(Perm(img).inverse());

        bool advanced = false;
        for (size_t k = p; k-- > 0;) {
            if (subset[k] < n - p + k) {
                ++subset[k];
                for (size_t j = k + 1; j < p; ++j) subset[j] = subset[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

std::vector<Perm> all_perms(size_t n) {
    std::vector<int> img(n);
    for (size_t i = 0; i < n; ++i) img[i] = (int)i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

FormalBraidSum shuffle_sum(size_t p, size_t q) {
    std::vector<std::pair<FieldScalar, BraidWord>> terms;
    for (const Perm& u : unshuffles(p, q)) terms.emplace_back(FieldScalar(1), matsumoto_lift(u));
    return FormalBraidSum::from_terms(p + q, std::move(terms));
}

FormalBraidSum coshuffle_sum(size_t p, size_t q) {
    std::vector<std::pair<FieldScalar, BraidWord>> terms;
    for (const Perm& u : unshuffles(p, q))
        terms.emplace_back(FieldScalar(1), matsumoto_lift(u).inverse());
    return FormalBraidSum::from_terms(p + q, std::move(terms));
}

FormalBraidSum symmetrizer_sum(size_t n) {
    std::vector<std::pair<FieldScalar, BraidWord>> terms;
    for (const Perm& t : all_perms(n)) terms.emplace_back(FieldScalar(1), matsumoto_lift(t));
    return FormalBraidSum::from_terms(n, std::move(terms));
}

FormalBraidSum norm_bracket_sum(size_t n_half_period) {
    if (n_half_period < 1) throw std::invalid_argument("norm_bracket_sum: need n >= 1");
    const long period = 2 * (long)n_half_period;
    std::vector<std::pair<FieldScalar, BraidWord>> terms;
    BraidWord sigma(2, {{1, +1}});
    FieldScalar inv_period(1, period);
    for (long i = 0; i < period; ++i)
        terms.emplace_back(i % 2 == 0 ? inv_period : -inv_period, sigma.power(i));
    return FormalBraidSum::from_terms(2, std::move(terms));
}

BraidWord cable(const BraidWord& outer, const BraidWord& inner, size_t i) {
    const size_t m = outer.strands();
    const size_t n = inner.strands();
    if (i < 1 || i > m) throw std::out_of_range("cable: strand index out of range");
    if (n < 1) throw std::invalid_argument("cable: inner braid needs >= 1 strand");
    const size_t total = m + n - 1;

    // Letters act last-first, so the fat strand starts at position i when the
    // rightmost letter acts; process outer letters right to left, tracking
    // where the fat block currently sits, and prepend each block crossing.
    std::vector<BraidLetter> result;
    size_t fat = i;
    const auto& letters = outer.letters();
    for (size_t k = letters.size(); k-- > 0;) {
        const int j = letters[k].i;
        const int e = letters[k].e;
        std::vector<BraidLetter> block;
        if ((size_t)j + 1 < fat) {
            block.push_back({j, e});
        } else if ((size_t)j > fat) {
            block.push_back({j + (int)n - 1, e});
        } else if ((size_t)j == fat) {
            // fat block at [fat, fat+n-1] crosses the thin strand at fat+n
            for (size_t t = 0; t < n; ++t) block.push_back({(int)(fat + t), e});
            fat += 1;
        } else {  // j + 1 == fat: thin strand at fat-1 crosses the fat block
            for (size_t t = n; t-- > 0;) block.push_back({(int)(fat - 1 + t), e});
            fat -= 1;
        }
        block.insert(block.end(), result.begin(), result.end());
        result = std::move(block);
    }
    // the inner braid acts first, on the strands where the fat block starts
    for (const auto& l : inner.letters()) result.push_back({l.i + (int)(i - 1), l.e});
    return BraidWord(total, std::move(result));
}

Perm cable_perm(const Perm& outer, const Perm& inner, size_t i) {
    const size_t m = outer.degree();
    const size_t n = inner.degree();
    if (i < 1 || i > m) throw std::out_of_range("cable_perm: index out of range");
    const size_t fat0 = i - 1;              // 0-based fat strand at the source
    const size_t fat1 = (size_t)outer(fat0);  // fat strand at the target
    auto start_src = [&](size_t p) { return p + (p > fat0 ? n - 1 : 0); };
    auto start_dst = [&](size_t q) { return q + (q > fat1 ? n - 1 : 0); };
    std::vector<int> img(m + n - 1);
    for (size_t p = 0; p < m; ++p) {
        size_t width = (p == fat0) ? n : 1;
        for (size_t o = 0; o < width; ++o) {
            size_t oo = (p == fat0) ? (size_t)inner((int)o) : o;
            img[start_src(p) + o] = (int)(start_dst((size_t)outer((int)p)) + oo);
        }
    }
    return Perm(img);
}

FormalBraidSum cable(const FormalBraidSum& outer, const BraidWord& inner, size_t i) {
    std::vector<std::pair<FieldScalar, BraidWord>> terms;
    for (const auto& t : outer.terms()) terms.emplace_back(t.first, cable(t.second, inner, i));
    return FormalBraidSum::from_terms(outer.strands() + inner.strands() - 1, std::move(terms));
}

}  // namespace braidlab
