#include "braidlab/ydspace.hpp"

#include <algorithm>
#include <sstream>

namespace braidlab {

namespace {

bool matrix_is_monomial(const Matrix& m) {
    for (size_t j = 0; j < m.cols(); ++j) {
        size_t nonzero = 0;
        for (size_t i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

std::string word_key(const TensorWord& w) {
    std::string k;
    k.reserve(w.size() * 3);
    for (uint32_t x : w) {
        k += (char)('0' + (x & 0x3f));
        k += (char)('0' + ((x >> 6) & 0x3f));
        k += ';';
    }
    return k;
}

}  // namespace

YDSpace::YDSpace(FinGroupPtr group, std::vector<size_t> degrees, std::vector<Matrix> gen_action,
                 std::vector<unsigned> weights, std::vector<std::string> labels, size_t ybe_cap)
    : group_(std::move(group)),
      dim_(degrees.size()),
      degree_(std::move(degrees)),
      weights_(std::move(weights)),
      labels_(std::move(labels)),
      gen_action_(std::move(gen_action)) {
    if (weights_.empty()) weights_.assign(dim_, 1);
    if (labels_.empty()) {
        for (size_t i = 0; i < dim_; ++i) labels_.push_back("v" + std::to_string(i));
    }
    if (gen_action_.size() != group_->generator_count())
        throw std::invalid_argument("YDSpace: need one action matrix per group generator");
    for (const auto& m : gen_action_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("YDSpace: action matrix shape mismatch");
    for (unsigned w : weights_)
        if (w < 1) throw std::invalid_argument("YDSpace: weights must be >= 1");

    monomial_ = true;
    for (const auto& m : gen_action_)
        if (!matrix_is_monomial(m)) { monomial_ = false; break; }

    conductor_ = 1;
    for (const auto& m : gen_action_)
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                conductor_ = lcm_u(conductor_, m.at(i, j).conductor());

    validate(ybe_cap);
}

void YDSpace::validate(size_t ybe_cap) const {
    // the generator matrices must assemble into a well-defined right action:
    // walking the BFS tree gives one candidate matrix per element; every
    // product relation g.gen_k must then agree with it
    for (size_t g = 0; g < group_->size(); ++g) {
        const Matrix& mg = act(g);
        for (size_t k = 0; k < group_->generator_count(); ++k) {
            size_t h = group_->product(g, group_->generator(k));
            Matrix expect = gen_action_[k] * mg;  // right action: act(g*gen) = act(gen) o act(g)
            if (!(act(h) == expect))
                throw StructureError("YDSpace: generator matrices do not define a right action "
                                     "(element " + std::to_string(g) + ", generator " +
                                     std::to_string(k) + ")");
        }
    }
    // YD compatibility X_g . h <= X_{g^h} and weight preservation, per generator
    for (size_t k = 0; k < group_->generator_count(); ++k) {
        size_t h = group_->generator(k);
        const Matrix& a = gen_action_[k];
        for (size_t b = 0; b < dim_; ++b) {
            size_t target = group_->conjugate(degree_[b], h);
            for (size_t i = 0; i < dim_; ++i) {
                if (a.at(i, b).is_zero()) continue;
                if (degree_[i] != target)
                    throw StructureError("YDSpace: action violates YD compatibility on basis " +
                                         labels_[b]);
                if (weights_[i] != weights_[b])
                    throw StructureError("YDSpace: action mixes internal weights on basis " +
                                         labels_[b]);
            }
        }
    }
    // braid equation on V^{(x)3}, exact, when the cube fits under the cap;
    // checked column by column so no dense cube-sized matrix is ever built
    size_t cube = dim_ * dim_ * dim_;
    if (dim_ > 0 && cube <= ybe_cap) {
        TensorComponent c3 = TensorComponent::power(*this, 3, cube);
        BraidWord lhs(3, {{1, +1}, {2, +1}, {1, +1}});
        BraidWord rhs(3, {{2, +1}, {1, +1}, {2, +1}});
        for (size_t w = 0; w < c3.dim(); ++w) {
            Vec e = unit_vec(c3.dim(), w);
            if (!(c3.apply_word(lhs, e) == c3.apply_word(rhs, e))) {
                const TensorWord& t = c3.word(w);
                throw StructureError("YDSpace: braiding fails the braid equation on basis "
                                     "triple (" + labels_[t[0]] + ", " + labels_[t[1]] + ", " +
                                     labels_[t[2]] + ")");
            }
        }
    }
}

const Matrix& YDSpace::act(size_t element) const {
    auto it = act_cache_.find(element);
    if (it != act_cache_.end()) return it->second;
    Matrix m = Matrix::identity(dim_);
    // act(g1 g2) = act(g2) o act(g1): multiply generator matrices in reverse
    auto word = group_->generator_word(element);
    for (size_t k = word.size(); k-- > 0;) m = m * gen_action_[word[k]];
    return act_cache_.emplace(element, std::move(m)).first->second;
}

Matrix YDSpace::braiding_matrix() const {
    Matrix out(dim_ * dim_, dim_ * dim_);
    for (size_t a = 0; a < dim_; ++a)
        for (size_t b = 0; b < dim_; ++b) {
            const Matrix& ab = act(degree_[b]);
            for (size_t c = 0; c < dim_; ++c) {
                if (ab.at(c, a).is_zero()) continue;
                out.at(b * dim_ + c, a * dim_ + b) = ab.at(c, a);
            }
        }
    return out;
}

YDSpace::BraidingOp YDSpace::braiding() const {
    BraidingOp op;
    op.matrix = braiding_matrix();
    op.is_monomial = matrix_is_monomial(op.matrix);
    if (dim_ == 1) op.scalar_if_onedim = op.matrix.at(0, 0);
    return op;
}

YDSpace YDSpace::rack_space(FinGroupPtr group, const std::vector<size_t>& conj_closed,
                            const std::vector<int>& gen_signs, std::vector<std::string> labels) {
    const size_t d = conj_closed.size();
    if (d == 0) throw std::invalid_argument("rack_space: empty subset");
    std::vector<size_t> pos(group->size(), (size_t)-1);
    for (size_t i = 0; i < d; ++i) pos[conj_closed[i]] = i;
    // conjugation-closedness, with the offending pair named
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < group->generator_count(); ++k) {
            size_t c = group->conjugate(conj_closed[i], group->generator(k));
            if (pos[c] == (size_t)-1)
                throw StructureError(
                    "rack_space: subset not closed under conjugation (element " +
                    std::to_string(conj_closed[i]) + " by generator " + std::to_string(k) + ")");
        }
    std::vector<Matrix> action;
    for (size_t k = 0; k < group->generator_count(); ++k) {
        int sign = gen_signs.empty() ? 1 : gen_signs[k];
        Matrix m(d, d);
        for (size_t i = 0; i < d; ++i) {
            size_t c = group->conjugate(conj_closed[i], group->generator(k));
            m.at(pos[c], i) = FieldScalar(sign);
        }
        action.push_back(std::move(m));
    }
    if (labels.empty())
        for (size_t i = 0; i < d; ++i) labels.push_back("x" + std::to_string(i + 1));
    return YDSpace(std::move(group), conj_closed, std::move(action), {}, std::move(labels));
}

YDSpace YDSpace::diagonal_space(const std::vector<std::vector<FieldScalar>>& q) {
    const size_t d = q.size();
    if (d == 0) throw std::invalid_argument("diagonal_space: empty q-matrix");
    for (const auto& row : q)
        if (row.size() != d) throw std::invalid_argument("diagonal_space: q-matrix not square");
    for (const auto& row : q)
        for (const auto& x : row) {
            unsigned m = x.conductor();
            unsigned order_bound = (m % 2 == 0) ? m : 2 * m;
            FieldScalar p(1);
            bool is_root = false;
            for (unsigned t = 1; t <= order_bound; ++t) {
                p *= x;
                if (p.is_one()) { is_root = true; break; }
            }
            if (!is_root)
                throw StructureError("diagonal_space: entry " + x.str() +
                                     " is not a root of unity; infinite braid images are out "
                                     "of scope");
        }
    // g_j = diag(q_1j, ..., q_dj); deg(e_j) = g_j; e_i . g_j = q_ij e_i
    std::vector<MonomialMatrix> gens;
    for (size_t j = 0; j < d; ++j) {
        MonomialMatrix g = MonomialMatrix::identity(d);
        for (size_t i = 0; i < d; ++i) g.diag[i] = q[i][j];
        gens.push_back(std::move(g));
    }
    FinGroupPtr group = FinGroup::close_group(gens, 1 << 22);
    std::vector<size_t> degrees(d);
    for (size_t j = 0; j < d; ++j) degrees[j] = *group->index_of(gens[j]);
    std::vector<Matrix> action;
    for (size_t k = 0; k < group->generator_count(); ++k)
        action.push_back(group->element(group->generator(k)).dense());
    return YDSpace(std::move(group), std::move(degrees), std::move(action));
}

YDSpace YDSpace::direct_sum(const std::vector<YDSpace>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
    const FinGroupPtr& g = parts[0].group_;
    size_t total = 0;
    for (const auto& p : parts) {
        if (p.group_ != g) throw std::invalid_argument("direct_sum: mixed groups");
        total += p.dim_;
    }
    std::vector<size_t> degrees;
    std::vector<unsigned> weights;
    std::vector<std::string> labels;
    std::vector<Matrix> action(g->generator_count(), Matrix(total, total));
    size_t off = 0;
    for (const auto& p : parts) {
        for (size_t i = 0; i < p.dim_; ++i) {
            degrees.push_back(p.degree_[i]);
            weights.push_back(p.weights_[i]);
            labels.push_back(p.labels_[i] + "@" + std::to_string(p.weights_[i]));
        }
        for (size_t k = 0; k < g->generator_count(); ++k)
            for (size_t i = 0; i < p.dim_; ++i)
                for (size_t j = 0; j < p.dim_; ++j)
                    action[k].at(off + i, off + j) = p.gen_action_[k].at(i, j);
        off += p.dim_;
    }
    return YDSpace(g, std::move(degrees), std::move(action), std::move(weights),
                   std::move(labels));
}

TensorComponent TensorComponent::power(const YDSpace& v, size_t n, size_t cap) {
    TensorComponent c;
    c.v_ = &v;
    double total = 1;
    for (size_t i = 0; i < n; ++i) total *= (double)v.dim();
    if (total > (double)cap)
        throw CapExceeded("tensor power dimension " + std::to_string((size_t)total) +
                              " exceeds cap " + std::to_string(cap),
                          cap);
    TensorWord w(n, 0);
    while (true) {
        c.words_.push_back(w);
        size_t k = n;
        while (k-- > 0) {
            if (++w[k] < v.dim()) break;
            w[k] = 0;
            if (k == 0) { c.finish(); return c; }
        }
        if (n == 0) break;
    }
    c.finish();
    return c;
}

TensorComponent TensorComponent::weight_component(const YDSpace& v, unsigned q, size_t cap) {
    TensorComponent c;
    c.v_ = &v;
    // all words of total weight q, by length then lexicographically
    std::vector<TensorWord> cur{TensorWord{}};
    std::vector<unsigned> cur_weight{0};
    for (unsigned len = 0; len <= q; ++len) {
        for (size_t t = 0; t < cur.size(); ++t)
            if (cur_weight[t] == q) c.words_.push_back(cur[t]);
        std::vector<TensorWord> next;
        std::vector<unsigned> next_weight;
        for (size_t t = 0; t < cur.size(); ++t) {
            for (size_t b = 0; b < v.dim(); ++b) {
                unsigned w = cur_weight[t] + v.weight(b);
                if (w > q) continue;
                TensorWord nw = cur[t];
                nw.push_back((uint32_t)b);
                next.push_back(std::move(nw));
                next_weight.push_back(w);
            }
        }
        cur = std::move(next);
        cur_weight = std::move(next_weight);
        if (c.words_.size() > cap)
            throw CapExceeded("weight component dimension exceeds cap", cap);
    }
    // order words by (length, lex) for a reproducible basis
    std::sort(c.words_.begin(), c.words_.end(), [](const TensorWord& a, const TensorWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (c.words_.size() > cap) throw CapExceeded("weight component dimension exceeds cap", cap);
    c.finish();
    return c;
}

void TensorComponent::finish() {
    for (size_t i = 0; i < words_.size(); ++i) index_.emplace(word_key(words_[i]), i);
    degrees_.reserve(words_.size());
    for (const auto& w : words_) {
        size_t deg = v_->group()->identity();
        for (uint32_t b : w) deg = v_->group()->product(deg, v_->degree(b));
        degrees_.push_back(deg);
    }
}

size_t TensorComponent::index(const TensorWord& w) const {
    auto it = index_.find(word_key(w));
    if (it == index_.end()) throw std::logic_error("TensorComponent: word not in basis");
    return it->second;
}

void TensorComponent::apply_letter(size_t i, int sign, size_t word_index,
                                   std::vector<std::pair<size_t, FieldScalar>>& out) const {
    out.clear();
    const TensorWord& w = words_[word_index];
    if (i < 1 || i >= w.size())
        throw std::invalid_argument("apply_letter: letter exceeds word length");
    size_t a = w[i - 1], b = w[i];
    if (sign > 0) {
        // sigma(e_a (x) e_b) = e_b (x) (e_a . deg b)
        const Matrix& m = v_->act(v_->degree(b));
        for (size_t c = 0; c < v_->dim(); ++c) {
            if (m.at(c, a).is_zero()) continue;
            TensorWord nw = w;
            nw[i - 1] = (uint32_t)b;
            nw[i] = (uint32_t)c;
            out.emplace_back(index(nw), m.at(c, a));
        }
    } else {
        // sigma^{-1}(e_a (x) e_b) = (e_b . deg(a)^{-1}) (x) e_a
        const Matrix& m = v_->act(v_->group()->inverse(v_->degree(a)));
        for (size_t c = 0; c < v_->dim(); ++c) {
            if (m.at(c, b).is_zero()) continue;
            TensorWord nw = w;
            nw[i - 1] = (uint32_t)c;
            nw[i] = (uint32_t)a;
            out.emplace_back(index(nw), m.at(c, b));
        }
    }
}

Vec TensorComponent::apply_letter_vec(size_t i, int sign, const Vec& v) const {
    Vec out(dim(), FieldScalar(0));
    std::vector<std::pair<size_t, FieldScalar>> terms;
    for (size_t w = 0; w < dim(); ++w) {
        if (v[w].is_zero()) continue;
        // braid letters only act within a fixed word length; vectors mixing
        // shorter words under sigma_i have no meaning here
        apply_letter(i, sign, w, terms);
        for (const auto& [idx, c] : terms) out[idx] += v[w] * c;
    }
    return out;
}

Vec TensorComponent::apply_word(const BraidWord& w, const Vec& v) const {
    // last letter acts first
    Vec cur = v;
    const auto& ls = w.letters();
    for (size_t k = ls.size(); k-- > 0;)
        cur = apply_letter_vec((size_t)ls[k].i, ls[k].e, cur);
    return cur;
}

Vec TensorComponent::apply_sum_vec(const FormalBraidSum& s, const Vec& v) const {
    Vec out(dim(), FieldScalar(0));
    for (const auto& [c, w] : s.terms()) {
        Vec t = apply_word(w, v);
        for (size_t i = 0; i < dim(); ++i)
            if (!t[i].is_zero()) out[i] += c * t[i];
    }
    return out;
}

Matrix TensorComponent::word_matrix(const BraidWord& w) const {
    Matrix m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) {
        Vec col = apply_word(w, unit_vec(dim(), j));
        for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix TensorComponent::sum_matrix(const FormalBraidSum& s) const {
    Matrix m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) {
        Vec col = apply_sum_vec(s, unit_vec(dim(), j));
        for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix braid_action(const YDSpace& v, size_t n, const BraidWord& w, size_t cap) {
    if (w.strands() != n) throw std::invalid_argument("braid_action: strand mismatch");
    return TensorComponent::power(v, n, cap).word_matrix(w);
}

Matrix apply_sum(const YDSpace& v, size_t n, const FormalBraidSum& s, size_t cap) {
    if (s.strands() != n) throw std::invalid_argument("apply_sum: strand mismatch");
    return TensorComponent::power(v, n, cap).sum_matrix(s);
}

BraidQuotient image_group(const YDSpace& v, size_t n, size_t cap) {
    if (!v.monomial())
        throw StructureError("image_group: braiding is not monomial");
    TensorComponent comp = TensorComponent::power(v, n, cap * 4 + 64);
    std::vector<MonomialMatrix> gens;
    std::vector<std::pair<size_t, FieldScalar>> terms;
    for (size_t i = 1; i < n; ++i) {
        MonomialMatrix g;
        g.perm.resize(comp.dim());
        g.diag.resize(comp.dim());
        for (size_t w = 0; w < comp.dim(); ++w) {
            comp.apply_letter(i, +1, w, terms);
            if (terms.size() != 1) throw std::logic_error("image_group: non-monomial letter");
            g.perm[w] = (int)terms[0].first;
            g.diag[w] = terms[0].second;
        }
        gens.push_back(std::move(g));
    }
    return BraidQuotient(n, gens, cap);
}

YDSpace sub_yd(const AmbientYD& amb, const Subspace& s, unsigned weight,
               std::vector<Vec>* adapted_rows, size_t ybe_cap) {
    const size_t n = s.ambient_dim();
    if (amb.coord_degree.size() != n)
        throw std::invalid_argument("sub_yd: degree table size mismatch");

    // G-homogeneity: each basis row must project into the subspace degree by
    // degree; the first failing projection is the witness
    std::vector<size_t> degree_values;
    for (size_t c = 0; c < n; ++c) degree_values.push_back(amb.coord_degree[c]);
    std::sort(degree_values.begin(), degree_values.end());
    degree_values.erase(std::unique(degree_values.begin(), degree_values.end()),
                        degree_values.end());

    std::vector<Vec> adapted;
    std::vector<size_t> adapted_degree;
    for (size_t g : degree_values) {
        std::vector<Vec> pieces;
        for (size_t r = 0; r < s.dim(); ++r) {
            Vec row = s.basis().row(r);
            Vec proj(n, FieldScalar(0));
            bool nonzero = false;
            for (size_t c = 0; c < n; ++c)
                if (amb.coord_degree[c] == g && !row[c].is_zero()) {
                    proj[c] = row[c];
                    nonzero = true;
                }
            if (!nonzero) continue;
            if (!s.contains(proj)) {
                std::ostringstream os;
                os << "sub_yd: not G-homogeneous; witness projection of basis row "
                   << r << " to degree " << g << " leaves the subspace";
                throw StructureError(os.str());
            }
            pieces.push_back(std::move(proj));
        }
        Subspace block = Subspace::from_vectors(n, pieces);
        for (size_t r = 0; r < block.dim(); ++r) {
            adapted.push_back(block.basis().row(r));
            adapted_degree.push_back(g);
        }
    }
    if (adapted.size() != s.dim())
        throw StructureError("sub_yd: homogeneous pieces do not sum to the subspace");

    // G-stability, and the induced action on the adapted basis
    Subspace adapted_span = Subspace::from_vectors(n, adapted);
    const size_t d = adapted.size();
    Matrix lin(n, d);  // columns = adapted basis vectors
    for (size_t c = 0; c < n; ++c)
        for (size_t t = 0; t < d; ++t) lin.at(c, t) = adapted[t][c];
    std::vector<Matrix> action;
    for (size_t k = 0; k < amb.group->generator_count(); ++k) {
        Matrix m(d, d);
        for (size_t j = 0; j < d; ++j) {
            Vec img = amb.gen_action[k].apply(adapted[j]);
            if (!adapted_span.contains(img))
                throw StructureError("sub_yd: not G-stable; witness = (basis vector " +
                                     std::to_string(j) + ") . generator " + std::to_string(k));
            AffineSolution sol = solve_affine(lin, img);
            if (!sol.consistent)
                throw std::logic_error("sub_yd: containment held but solve failed");
            for (size_t t = 0; t < d; ++t) m.at(t, j) = sol.particular[t];
        }
        action.push_back(std::move(m));
    }

    if (adapted_rows) *adapted_rows = adapted;
    std::vector<unsigned> weights(d, weight);
    return YDSpace(amb.group, adapted_degree, action, weights, {}, ybe_cap);
}

}  // namespace braidlab
