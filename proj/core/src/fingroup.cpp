#include "braidlab/fingroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace braidlab {

MonomialMatrix MonomialMatrix::identity(size_t d) {
    MonomialMatrix m;
    m.perm.resize(d);
    m.diag.assign(d, FieldScalar(1));
    for (size_t i = 0; i < d; ++i) m.perm[i] = (int)i;
    return m;
}

MonomialMatrix MonomialMatrix::from_perm(const Perm& p) {
    MonomialMatrix m;
    m.perm = p.images();
    m.diag.assign(p.degree(), FieldScalar(1));
    return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("MonomialMatrix: dim mismatch");
    MonomialMatrix out;
    out.perm.resize(dim());
    out.diag.resize(dim());
    for (size_t j = 0; j < dim(); ++j) {
        int mid = o.perm[j];
        out.perm[j] = perm[(size_t)mid];
        out.diag[j] = o.diag[j] * diag[(size_t)mid];
    }
    return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
    MonomialMatrix out;
    out.perm.resize(dim());
    out.diag.resize(dim());
    for (size_t j = 0; j < dim(); ++j) {
        out.perm[(size_t)perm[j]] = (int)j;
        out.diag[(size_t)perm[j]] = diag[j].inverse();
    }
    return out;
}

std::string MonomialMatrix::key() const {
    std::ostringstream os;
    for (size_t j = 0; j < dim(); ++j) os << perm[j] << "|" << diag[j].key() << ";";
    return os.str();
}

Matrix MonomialMatrix::dense() const {
    Matrix m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) m.at((size_t)perm[j], j) = diag[j];
    return m;
}

bool MonomialMatrix::is_identity() const {
    for (size_t j = 0; j < dim(); ++j)
        if (perm[j] != (int)j || !diag[j].is_one()) return false;
    return true;
}

FinGroupPtr FinGroup::close_group(const std::vector<MonomialMatrix>& gens, size_t cap) {
    if (gens.empty()) throw std::invalid_argument("close_group: no generators");
    auto g = std::shared_ptr<FinGroup>(new FinGroup());
    const size_t d = gens[0].dim();
    for (const auto& m : gens)
        if (m.dim() != d) throw std::invalid_argument("close_group: mixed dimensions");

    MonomialMatrix id = MonomialMatrix::identity(d);
    g->elements_.push_back(id);
    g->index_.emplace(id.key(), 0);
    g->parent_.emplace_back(-1, 0);

    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < gens.size(); ++k) {
            MonomialMatrix y = g->elements_[x] * gens[k];
            std::string key = y.key();
            if (g->index_.count(key)) continue;
            if (g->elements_.size() >= cap)
                throw CapExceeded("close_group: cap of " + std::to_string(cap) +
                                      " elements exceeded",
                                  g->elements_.size());
            size_t idx = g->elements_.size();
            g->index_.emplace(std::move(key), idx);
            g->elements_.push_back(std::move(y));
            g->parent_.emplace_back((long)x, k);
            queue.push_back(idx);
        }
    }
    for (const auto& m : gens) g->gens_.push_back(*g->index_of(m));
    g->inverse_cache_.assign(g->elements_.size(), (size_t)-1);
    return g;
}

std::optional<size_t> FinGroup::index_of(const MonomialMatrix& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

size_t FinGroup::product(size_t a, size_t b) const {
    MonomialMatrix m = elements_[a] * elements_[b];
    auto idx = index_of(m);
    if (!idx) throw std::logic_error("FinGroup: product escaped closure");
    return *idx;
}

size_t FinGroup::inverse(size_t a) const {
    if (inverse_cache_[a] != (size_t)-1) return inverse_cache_[a];
    auto idx = index_of(elements_[a].inverse());
    if (!idx) throw std::logic_error("FinGroup: inverse escaped closure");
    inverse_cache_[a] = *idx;
    inverse_cache_[*idx] = a;
    return *idx;
}

size_t FinGroup::conjugate(size_t x, size_t g) const {
    return product(product(inverse(g), x), g);
}

std::vector<size_t> FinGroup::generator_word(size_t i) const {
    std::vector<size_t> word;
    while (parent_[i].first >= 0) {
        word.push_back(parent_[i].second);
        i = (size_t)parent_[i].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

FinGroupPtr symmetric_group(size_t n) {
    std::vector<MonomialMatrix> gens;
    for (size_t i = 0; i + 1 < n; ++i)
        gens.push_back(MonomialMatrix::from_perm(Perm::transposition(n, i)));
    if (gens.empty()) gens.push_back(MonomialMatrix::identity(std::max<size_t>(n, 1)));
    size_t cap = 1;
    for (size_t i = 2; i <= n; ++i) cap *= i;
    return FinGroup::close_group(gens, cap + 1);
}

FinGroupPtr cyclic_group(size_t m) {
    std::vector<int> img(m);
    for (size_t i = 0; i < m; ++i) img[i] = (int)((i + 1) % m);
    return FinGroup::close_group({MonomialMatrix::from_perm(Perm(img))}, m + 1);
}

BraidQuotient::BraidQuotient(size_t strands, const std::vector<MonomialMatrix>& gen_images,
                             size_t cap)
    : n_(strands) {
    if (gen_images.size() + 1 != strands)
        throw std::invalid_argument("BraidQuotient: need n-1 generator images");
    // braid relations and far commutation, checked on the matrices
    for (size_t i = 0; i + 1 < gen_images.size(); ++i) {
        MonomialMatrix lhs = gen_images[i] * gen_images[i + 1] * gen_images[i];
        MonomialMatrix rhs = gen_images[i + 1] * gen_images[i] * gen_images[i + 1];
        if (!(lhs == rhs))
            throw StructureError("braid relation fails: s" + std::to_string(i + 1) + " s" +
                                 std::to_string(i + 2) + " s" + std::to_string(i + 1) +
                                 " != s" + std::to_string(i + 2) + " s" + std::to_string(i + 1) +
                                 " s" + std::to_string(i + 2));
    }
    for (size_t i = 0; i < gen_images.size(); ++i)
        for (size_t j = i + 2; j < gen_images.size(); ++j) {
            if (!(gen_images[i] * gen_images[j] == gen_images[j] * gen_images[i]))
                throw StructureError("far commutation fails: s" + std::to_string(i + 1) +
                                     " s" + std::to_string(j + 1));
        }
    group_ = FinGroup::close_group(gen_images, cap);
    for (const auto& m : gen_images) gen_images_.push_back(*group_->index_of(m));
}

size_t BraidQuotient::eval(const BraidWord& w) const {
    if (w.strands() != n_) throw std::invalid_argument("BraidQuotient::eval: strand mismatch");
    size_t acc = group_->identity();
    for (const auto& l : w.letters()) {
        size_t g = gen_images_[(size_t)l.i - 1];
        if (l.e < 0) g = group_->inverse(g);
        acc = group_->product(acc, g);
    }
    return acc;
}

BraidQuotient symmetric_quotient(size_t n) {
    std::vector<MonomialMatrix> gens;
    for (size_t i = 0; i + 1 < n; ++i)
        gens.push_back(MonomialMatrix::from_perm(Perm::transposition(n, i)));
    size_t cap = 2;
    for (size_t i = 2; i <= n; ++i) cap *= i;
    return BraidQuotient(n, gens, cap);
}

BraidQuotient cyclic_quotient_b2(size_t m) {
    std::vector<int> img(m);
    for (size_t i = 0; i < m; ++i) img[i] = (int)((i + 1) % m);
    return BraidQuotient(2, {MonomialMatrix::from_perm(Perm(img))}, m + 1);
}

GroupAlgebraElement GroupAlgebraElement::delta(FinGroupPtr g, size_t elt, FieldScalar c) {
    GroupAlgebraElement out(std::move(g));
    out.set_coeff(elt, c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::from_vec(FinGroupPtr g, const Vec& v) {
    GroupAlgebraElement out(g);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.coeffs_[i] = v[i];
    return out;
}

FieldScalar GroupAlgebraElement::coeff(size_t elt) const {
    auto it = coeffs_.find(elt);
    return it == coeffs_.end() ? FieldScalar(0) : it->second;
}

void GroupAlgebraElement::set_coeff(size_t elt, const FieldScalar& c) {
    if (c.is_zero())
        coeffs_.erase(elt);
    else
        coeffs_[elt] = c;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out = *this;
    for (const auto& [g, c] : o.coeffs_) out.set_coeff(g, out.coeff(g) + c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    return *this + o.scaled(FieldScalar(-1));
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out(group_);
    for (const auto& [g, c] : coeffs_)
        for (const auto& [h, d] : o.coeffs_) {
            size_t gh = group_->product(g, h);
            out.set_coeff(gh, out.coeff(gh) + c * d);
        }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const FieldScalar& c) const {
    GroupAlgebraElement out(group_);
    if (c.is_zero()) return out;
    for (const auto& [g, x] : coeffs_) out.coeffs_[g] = c * x;
    return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    return coeffs_ == o.coeffs_;
}

Vec GroupAlgebraElement::to_vec() const {
    Vec v(group_->size(), FieldScalar(0));
    for (const auto& [g, c] : coeffs_) v[g] = c;
    return v;
}

std::string GroupAlgebraElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : coeffs_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*[" << g << "]";
        first = false;
    }
    return os.str();
}

GroupAlgebraElement eval_sum(const FormalBraidSum& s, const BraidQuotient& q) {
    if (s.strands() != q.strands())
        throw std::invalid_argument("eval_sum: strand mismatch");
    GroupAlgebraElement out(q.group());
    for (const auto& [c, w] : s.terms()) {
        size_t g = q.eval(w);
        out.set_coeff(g, out.coeff(g) + c);
    }
    return out;
}

GroupAlgebraElement antipode(const GroupAlgebraElement& x) {
    GroupAlgebraElement out(x.group());
    for (const auto& [g, c] : x.coeffs()) {
        size_t gi = x.group()->inverse(g);
        out.set_coeff(gi, out.coeff(gi) + c);
    }
    return out;
}

Matrix left_mult_matrix(const GroupAlgebraElement& x) {
    const auto& g = x.group();
    const size_t N = g->size();
    Matrix m(N, N);
    for (size_t j = 0; j < N; ++j)
        for (const auto& [h, c] : x.coeffs()) m.at(g->product(h, j), j) += c;
    return m;
}

Subspace right_ideal(const GroupAlgebraElement& x) {
    const auto& g = x.group();
    std::vector<Vec> rows;
    for (size_t j = 0; j < g->size(); ++j) {
        Vec v(g->size(), FieldScalar(0));
        for (const auto& [h, c] : x.coeffs()) v[g->product(h, j)] += c;
        rows.push_back(std::move(v));
    }
    return Subspace::from_vectors(g->size(), rows);
}

Subspace right_ideal(const FinGroupPtr& g, const Subspace& seed) {
    Subspace cur = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> next;
        for (size_t r = 0; r < cur.dim(); ++r) {
            Vec v = cur.basis().row(r);
            for (size_t k = 0; k < g->generator_count(); ++k) {
                size_t gen = g->generator(k);
                Vec w(g->size(), FieldScalar(0));
                for (size_t i = 0; i < v.size(); ++i)
                    if (!v[i].is_zero()) w[g->product(i, gen)] = v[i];
                if (!cur.contains(w)) {
                    next.push_back(std::move(w));
                    grew = true;
                }
            }
        }
        if (grew) {
            for (size_t r = 0; r < cur.dim(); ++r) next.push_back(cur.basis().row(r));
            cur = Subspace::from_vectors(g->size(), next);
        }
    }
    return cur;
}

GroupAlgebraElement push_forward(const GroupAlgebraElement& x, const BraidQuotient& source,
                                 const BraidQuotient& target) {
    GroupAlgebraElement out(target.group());
    for (const auto& [g, c] : x.coeffs()) {
        std::vector<size_t> word = source.group()->generator_word(g);
        size_t img = target.group()->identity();
        for (size_t k : word)
            img = target.group()->product(img, target.gen_image(k + 1));
        out.set_coeff(img, out.coeff(img) + c);
    }
    return out;
}

Subspace push_forward(const Subspace& s, const BraidQuotient& source,
                      const BraidQuotient& target) {
    std::vector<Vec> rows;
    for (size_t r = 0; r < s.dim(); ++r) {
        auto x = GroupAlgebraElement::from_vec(source.group(), s.basis().row(r));
        rows.push_back(push_forward(x, source, target).to_vec());
    }
    return Subspace::from_vectors(target.group()->size(), rows);
}

std::vector<size_t> hurwitz_act(const BraidWord& w, std::vector<size_t> tuple,
                                const FinGroup& q) {
    if (tuple.size() != w.strands())
        throw std::invalid_argument("hurwitz_act: tuple length != strands");
    for (const auto& l : w.letters()) {
        size_t i = (size_t)l.i - 1;
        size_t a = tuple[i], b = tuple[i + 1];
        if (l.e > 0) {
            tuple[i] = b;
            tuple[i + 1] = q.conjugate(a, b);  // b^{-1} a b
        } else {
            tuple[i] = q.product(q.product(a, b), q.inverse(a));  // a b a^{-1}
            tuple[i + 1] = a;
        }
    }
    return tuple;
}

namespace {

std::string tuple_key(const std::vector<size_t>& t) {
    std::string k;
    for (size_t x : t) k += std::to_string(x) + ",";
    return k;
}

}  // namespace

HurwitzReport hurwitz_orbit(size_t n, const FinGroupPtr& q, const std::vector<size_t>& seed,
                            size_t cap, size_t word_bound) {
    if (seed.size() != n) throw std::invalid_argument("hurwitz_orbit: bad seed length");
    double total = 1;
    for (size_t i = 0; i < n; ++i) total *= (double)q->size();
    if (total > (double)cap)
        throw CapExceeded("hurwitz_orbit: |Q|^n exceeds cap", (size_t)q->size());

    HurwitzReport report;
    report.word_bound = word_bound;

    auto product_of = [&](const std::vector<size_t>& t) {
        size_t acc = q->identity();
        for (size_t x : t) acc = q->product(acc, x);
        return acc;
    };
    const size_t seed_product = product_of(seed);

    std::set<std::string> seen{tuple_key(seed)};
    std::deque<std::vector<size_t>> queue{seed};
    std::vector<BraidLetter> moves;
    for (size_t i = 1; i < n; ++i) {
        moves.push_back({(int)i, +1});
        moves.push_back({(int)i, -1});
    }
    while (!queue.empty()) {
        auto t = queue.front();
        queue.pop_front();
        for (const auto& mv : moves) {
            auto u = hurwitz_act(BraidWord(n, {mv}), t, *q);
            if (product_of(u) != seed_product) report.product_invariant = false;
            if (seen.insert(tuple_key(u)).second) queue.push_back(u);
        }
    }
    report.orbit_size = seen.size();

    // Freely reduced words up to the bound; any closed path at the seed is a
    // stabilizing word.  This can only ever refute freeness up to the bound.
    struct Node {
        std::vector<size_t> tuple;
        std::vector<BraidLetter> word;
    };
    std::deque<Node> paths{{seed, {}}};
    while (!paths.empty() && !report.stabilizer_found) {
        Node nd = paths.front();
        paths.pop_front();
        if (nd.word.size() >= word_bound) continue;
        for (const auto& mv : moves) {
            if (!nd.word.empty() && nd.word.back().i == mv.i && nd.word.back().e == -mv.e)
                continue;  // immediate backtrack, not freely reduced
            Node next{hurwitz_act(BraidWord(n, {mv}), nd.tuple, *q), nd.word};
            next.word.push_back(mv);
            if (next.tuple == seed) {
                report.stabilizer_found = true;
                report.stabilizer_word = BraidWord(n, next.word);
                break;
            }
            paths.push_back(std::move(next));
        }
    }
    return report;
}

}  // namespace braidlab
