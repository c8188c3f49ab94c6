#include "braidlab/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace braidlab {

const FormalBraidSum& cached_shuffle_sum(size_t p, size_t q) {
    static std::map<std::pair<size_t, size_t>, FormalBraidSum> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, shuffle_sum(p, q)).first;
    return it->second;
}

const FormalBraidSum& cached_symmetrizer(size_t n) {
    static std::map<size_t, FormalBraidSum> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, symmetrizer_sum(n)).first;
    return it->second;
}

namespace {

unsigned word_weight(const YDSpace& v, const TensorWord& w) {
    unsigned total = 0;
    for (uint32_t b : w) total += v.weight(b);
    return total;
}

// sparse column of the weight-(p,q) diagonal component at source word wi,
// indexed as (index in tp) * dim(tq) + (index in tq)
SparseVec delta_column(const TensorComponent& src, const TensorComponent& tp,
                       const TensorComponent& tq, unsigned p, size_t wi) {
    const YDSpace& v = src.space();
    std::map<size_t, FieldScalar> acc;
    const size_t k = src.word(wi).size();
    for (size_t a = 1; a < k; ++a) {
        const FormalBraidSum& sum = cached_shuffle_sum(a, k - a);
        Vec img = src.apply_sum_vec(sum, unit_vec(src.dim(), wi));
        for (size_t uj = 0; uj < src.dim(); ++uj) {
            if (img[uj].is_zero()) continue;
            const TensorWord& u = src.word(uj);
            TensorWord prefix(u.begin(), u.begin() + (long)a);
            if (word_weight(v, prefix) != p) continue;
            TensorWord suffix(u.begin() + (long)a, u.end());
            size_t row = tp.index(prefix) * tq.dim() + tq.index(suffix);
            auto [it, fresh] = acc.emplace(row, img[uj]);
            if (!fresh) it->second += img[uj];
        }
    }
    SparseVec out;
    for (auto& [r, c] : acc)
        if (!c.is_zero()) out.emplace_back(r, c);
    return out;
}

// Quotient charts of single words, cached: chart[i] = coords of word i in
// T_q / I_q.  Membership of x in I_p (x) T_q + T_p (x) I_q is exactly the
// vanishing of (pi_p (x) pi_q)(x), so the charts are all that is needed to
// test the Hopf condition and to compute primitives.
class WordChart {
public:
    WordChart(const TensorComponent& comp, const Subspace& ideal)
        : comp_(comp), ideal_(ideal), cache_(comp.dim()), computed_(comp.dim(), false) {}

    const Vec& coords(size_t word_index) const {
        if (!computed_[word_index]) {
            cache_[word_index] = ideal_.quotient_coords(unit_vec(comp_.dim(), word_index));
            computed_[word_index] = true;
        }
        return cache_[word_index];
    }
    size_t dim() const { return ideal_.quotient_dim(); }

private:
    const TensorComponent& comp_;
    const Subspace& ideal_;
    mutable std::vector<Vec> cache_;
    mutable std::vector<bool> computed_;
};

// (pi_p (x) pi_q) applied to a sparse element of T_p (x) T_q
Vec project_pair(const SparseVec& x, const WordChart& cp, const WordChart& cq, size_t dim_tq) {
    Vec out(cp.dim() * cq.dim(), FieldScalar(0));
    for (const auto& [row, c] : x) {
        size_t iu = row / dim_tq, iw = row % dim_tq;
        const Vec& pu = cp.coords(iu);
        const Vec& pw = cq.coords(iw);
        for (size_t i = 0; i < pu.size(); ++i) {
            if (pu[i].is_zero()) continue;
            FieldScalar ci = c * pu[i];
            for (size_t j = 0; j < pw.size(); ++j)
                if (!pw[j].is_zero()) out[i * pw.size() + j] += ci * pw[j];
        }
    }
    return out;
}

}  // namespace

GradedHopfQuotient::GradedHopfQuotient(std::shared_ptr<const YDSpace> v, unsigned cutoff,
                                       std::map<unsigned, Subspace> ideal, size_t tensor_cap,
                                       bool run_checks)
    : v_(std::move(v)), d_(cutoff), cap_(tensor_cap) {
    if (d_ < 2) throw std::invalid_argument("GradedHopfQuotient: cutoff must be >= 2");
    comp_.reserve(d_ + 1);
    for (unsigned q = 0; q <= d_; ++q)
        comp_.push_back(TensorComponent::weight_component(*v_, q, cap_));
    ideal_.assign(d_ + 1, Subspace());
    for (unsigned q = 0; q <= d_; ++q) ideal_[q] = Subspace(comp_[q].dim());
    for (auto& [q, s] : ideal) {
        if (q > d_) continue;
        if (s.ambient_dim() != comp_[q].dim())
            throw std::invalid_argument("GradedHopfQuotient: ideal ambient mismatch at degree " +
                                        std::to_string(q));
        ideal_[q] = s;
    }
    if (ideal_[0].dim() > 0)
        throw StructureError("GradedHopfQuotient: I_0 must vanish");
    // generators must survive into the quotient (minimal presentation)
    for (unsigned q = 1; q <= d_; ++q) {
        for (size_t r = 0; r < ideal_[q].dim(); ++r) {
            Vec row = ideal_[q].basis().row(r);
            bool in_generators = true;
            for (size_t i = 0; i < comp_[q].dim() && in_generators; ++i)
                if (!row[i].is_zero() && comp_[q].word(i).size() != 1) in_generators = false;
            if (in_generators)
                throw StructureError(
                    "GradedHopfQuotient: ideal meets the generator space in degree " +
                    std::to_string(q));
        }
    }
    if (run_checks) validate();
}

GradedHopfQuotient GradedHopfQuotient::free_algebra(std::shared_ptr<const YDSpace> v,
                                                    unsigned cutoff, size_t tensor_cap) {
    return GradedHopfQuotient(std::move(v), cutoff, {}, tensor_cap, false);
}

GradedHopfQuotient GradedHopfQuotient::nichols_quotient(std::shared_ptr<const YDSpace> v,
                                                        unsigned cutoff, size_t tensor_cap) {
    std::map<unsigned, Subspace> ideal;
    for (unsigned q = 2; q <= cutoff; ++q)
        ideal.emplace(q, nichols_component(*v, q, tensor_cap).relations);
    return GradedHopfQuotient(std::move(v), cutoff, std::move(ideal), tensor_cap, true);
}

const TensorComponent& GradedHopfQuotient::component(unsigned q) const {
    if (q > d_) throw std::out_of_range("component: degree beyond cutoff");
    return comp_[q];
}

const Subspace& GradedHopfQuotient::ideal(unsigned q) const {
    if (q > d_) throw std::out_of_range("ideal: degree beyond cutoff");
    return ideal_[q];
}

size_t GradedHopfQuotient::dim(unsigned q) const {
    return comp_[q].dim() - ideal_[q].dim();
}

std::vector<size_t> GradedHopfQuotient::hilbert() const {
    std::vector<size_t> h;
    for (unsigned q = 0; q <= d_; ++q) h.push_back(dim(q));
    return h;
}

Vec GradedHopfQuotient::quotient_coords(unsigned q, const Vec& tensor_vec) const {
    return ideal_[q].quotient_coords(tensor_vec);
}

Vec GradedHopfQuotient::lift(unsigned q, const Vec& quotient_vec) const {
    return ideal_[q].quotient_lift(quotient_vec);
}

Vec GradedHopfQuotient::multiply(unsigned p, const Vec& a, unsigned q, const Vec& b) const {
    if (p + q > d_) throw std::out_of_range("multiply: product degree beyond cutoff");
    Vec va = lift(p, a), vb = lift(q, b);
    Vec out(comp_[p + q].dim(), FieldScalar(0));
    for (size_t i = 0; i < va.size(); ++i) {
        if (va[i].is_zero()) continue;
        for (size_t j = 0; j < vb.size(); ++j) {
            if (vb[j].is_zero()) continue;
            TensorWord w = comp_[p].word(i);
            const TensorWord& wj = comp_[q].word(j);
            w.insert(w.end(), wj.begin(), wj.end());
            out[comp_[p + q].index(w)] += va[i] * vb[j];
        }
    }
    return quotient_coords(p + q, out);
}

Matrix GradedHopfQuotient::diagonal_component(unsigned p, unsigned q) const {
    Matrix out(comp_[p].dim() * comp_[q].dim(), comp_[p + q].dim());
    for (size_t wi = 0; wi < comp_[p + q].dim(); ++wi)
        for (const auto& [row, c] : delta_column(comp_[p + q], comp_[p], comp_[q], p, wi))
            out.at(row, wi) = c;
    return out;
}

const Subspace& GradedHopfQuotient::primitives(unsigned n) const {
    auto it = prim_cache_.find(n);
    if (it != prim_cache_.end()) return it->second;
    if (n == 0 || n > d_) throw std::out_of_range("primitives: degree out of range");

    const size_t src_dim = comp_[n].dim();
    // stack, over all weight splits, the composite
    //   T_n --Delta_{p,q}--> T_p (x) T_q --pi_p (x) pi_q--> A_p (x) A_q;
    // its kernel consists of the lifts whose diagonal lands in
    // I_p (x) T_q + T_p (x) I_q for every split
    std::vector<SparseVec> cols(src_dim);
    size_t row_offset = 0;
    for (unsigned p = 1; p < n; ++p) {
        unsigned q = n - p;
        WordChart cp(comp_[p], ideal_[p]), cq(comp_[q], ideal_[q]);
        for (size_t c = 0; c < src_dim; ++c) {
            SparseVec raw = delta_column(comp_[n], comp_[p], comp_[q], p, c);
            Vec proj = project_pair(raw, cp, cq, comp_[q].dim());
            for (size_t r = 0; r < proj.size(); ++r)
                if (!proj[r].is_zero()) cols[c].emplace_back(row_offset + r, proj[r]);
        }
        row_offset += cp.dim() * cq.dim();
    }
    Subspace lifts = kernel_of_columns(row_offset, cols);  // contains I_n

    // pass to quotient coordinates mod I_n
    std::vector<Vec> rows;
    for (size_t r = 0; r < lifts.dim(); ++r)
        rows.push_back(quotient_coords(n, lifts.basis().row(r)));
    Subspace prim = Subspace::from_vectors(dim(n), rows);
    return prim_cache_.emplace(n, std::move(prim)).first->second;
}

Subspace GradedHopfQuotient::ker_eps_squared(unsigned n) const {
    std::vector<Vec> rows;
    for (unsigned a = 1; a < n; ++a) {
        unsigned b = n - a;
        for (size_t i = 0; i < dim(a); ++i)
            for (size_t j = 0; j < dim(b); ++j)
                rows.push_back(multiply(a, unit_vec(dim(a), i), b, unit_vec(dim(b), j)));
    }
    return Subspace::from_vectors(dim(n), rows);
}

Subspace GradedHopfQuotient::decomposable_primitives(unsigned n) const {
    return intersect(primitives(n), ker_eps_squared(n));
}

size_t GradedHopfQuotient::indecomposables_dim(unsigned n) const {
    if (n == 0) return 0;
    return dim(n) - ker_eps_squared(n).dim();
}

Subspace GradedHopfQuotient::generator_image(unsigned n) const {
    std::vector<Vec> rows;
    for (size_t i = 0; i < comp_[n].dim(); ++i) {
        if (comp_[n].word(i).size() != 1) continue;
        rows.push_back(quotient_coords(n, unit_vec(comp_[n].dim(), i)));
    }
    return Subspace::from_vectors(dim(n), rows);
}

void GradedHopfQuotient::check_ideal_closure() const {
    for (unsigned q = 2; q <= d_; ++q) {
        for (size_t b = 0; b < v_->dim(); ++b) {
            unsigned w = v_->weight(b);
            if (w >= q) continue;
            const Subspace& lower = ideal_[q - w];
            for (size_t r = 0; r < lower.dim(); ++r) {
                Vec row = lower.basis().row(r);
                Vec left(comp_[q].dim(), FieldScalar(0));
                Vec right(comp_[q].dim(), FieldScalar(0));
                for (size_t i = 0; i < row.size(); ++i) {
                    if (row[i].is_zero()) continue;
                    TensorWord lw{(uint32_t)b};
                    const TensorWord& wi = comp_[q - w].word(i);
                    lw.insert(lw.end(), wi.begin(), wi.end());
                    left[comp_[q].index(lw)] = row[i];
                    TensorWord rw = wi;
                    rw.push_back((uint32_t)b);
                    right[comp_[q].index(rw)] = row[i];
                }
                if (!ideal_[q].contains(left) || !ideal_[q].contains(right))
                    throw StructureError("ideal closure fails in degree " + std::to_string(q) +
                                         " (generator " + v_->label(b) + ")");
            }
        }
    }
}

void GradedHopfQuotient::check_hopf_condition() const {
    for (unsigned n = 2; n <= d_; ++n) {
        if (ideal_[n].dim() == 0) continue;
        for (unsigned p = 1; p < n; ++p) {
            unsigned q = n - p;
            WordChart cp(comp_[p], ideal_[p]), cq(comp_[q], ideal_[q]);
            for (size_t r = 0; r < ideal_[n].dim(); ++r) {
                Vec row = ideal_[n].basis().row(r);
                std::map<size_t, FieldScalar> acc;
                for (size_t c = 0; c < row.size(); ++c) {
                    if (row[c].is_zero()) continue;
                    for (const auto& [tgt, val] :
                         delta_column(comp_[n], comp_[p], comp_[q], p, c)) {
                        auto [it2, fresh] = acc.emplace(tgt, row[c] * val);
                        if (!fresh) it2->second += row[c] * val;
                    }
                }
                SparseVec img;
                for (auto& [tgt, val] : acc)
                    if (!val.is_zero()) img.emplace_back(tgt, val);
                if (!is_zero_vec(project_pair(img, cp, cq, comp_[q].dim()))) {
                    std::ostringstream os;
                    os << "not a Hopf ideal: Delta_(" << p << "," << q
                       << ") of an ideal vector escapes in degree " << n
                       << "; witness ideal basis row " << r;
                    throw StructureError(os.str());
                }
            }
        }
    }
}

void GradedHopfQuotient::check_sub_yd() const {
    for (unsigned q = 2; q <= d_; ++q) {
        const Subspace& ideal = ideal_[q];
        if (ideal.dim() == 0) continue;
        const TensorComponent& c = comp_[q];

        // G-homogeneity: every total-degree projection of a basis row stays inside
        for (size_t r = 0; r < ideal.dim(); ++r) {
            Vec row = ideal.basis().row(r);
            std::map<size_t, Vec> pieces;
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i].is_zero()) continue;
                auto [it, fresh] = pieces.emplace(c.total_degree(i), zero_vec(row.size()));
                it->second[i] = row[i];
            }
            if (pieces.size() <= 1) continue;
            for (const auto& [deg, piece] : pieces)
                if (!ideal.contains(piece))
                    throw StructureError("ideal is not G-homogeneous in degree " +
                                         std::to_string(q) + "; witness = projection of basis row " +
                                         std::to_string(r) + " to group degree " +
                                         std::to_string(deg));
        }

        // G-stability, acting diagonally on words, one generator at a time
        for (size_t k = 0; k < v_->generator_count(); ++k) {
            const Matrix& a = v_->act(v_->group()->generator(k));
            std::vector<SparseVec> col_cache(c.dim());
            std::vector<bool> col_done(c.dim(), false);
            auto action_col = [&](size_t i) -> const SparseVec& {
                if (!col_done[i]) {
                    std::vector<std::pair<TensorWord, FieldScalar>> terms{
                        {TensorWord{}, FieldScalar(1)}};
                    for (uint32_t b : c.word(i)) {
                        std::vector<std::pair<TensorWord, FieldScalar>> next;
                        for (const auto& [tw, tc] : terms)
                            for (size_t x = 0; x < v_->dim(); ++x) {
                                if (a.at(x, b).is_zero()) continue;
                                TensorWord nw = tw;
                                nw.push_back((uint32_t)x);
                                next.emplace_back(std::move(nw), tc * a.at(x, b));
                            }
                        terms = std::move(next);
                    }
                    for (const auto& [tw, tc] : terms)
                        col_cache[i].emplace_back(c.index(tw), tc);
                    col_done[i] = true;
                }
                return col_cache[i];
            };
            for (size_t r = 0; r < ideal.dim(); ++r) {
                Vec row = ideal.basis().row(r);
                Vec img = zero_vec(row.size());
                for (size_t i = 0; i < row.size(); ++i) {
                    if (row[i].is_zero()) continue;
                    for (const auto& [tgt, val] : action_col(i)) img[tgt] += row[i] * val;
                }
                if (!ideal.contains(img))
                    throw StructureError("ideal is not G-stable in degree " + std::to_string(q) +
                                         "; witness = basis row " + std::to_string(r) +
                                         " acted by generator " + std::to_string(k));
            }
        }
    }
}

void GradedHopfQuotient::validate() const {
    check_ideal_closure();
    check_hopf_condition();
    check_sub_yd();
}

AmbientYD GradedHopfQuotient::component_ambient(unsigned q) const {
    AmbientYD amb;
    amb.group = v_->group();
    const TensorComponent& c = comp_[q];
    for (size_t i = 0; i < c.dim(); ++i) amb.coord_degree.push_back(c.total_degree(i));
    for (size_t k = 0; k < v_->generator_count(); ++k) {
        // diagonal action on words: e_w . g = (x)_j (e_{w_j} . g)
        Matrix m(c.dim(), c.dim());
        const Matrix& a = v_->act(v_->group()->generator(k));
        for (size_t i = 0; i < c.dim(); ++i) {
            const TensorWord& w = c.word(i);
            // expand the product of per-letter images
            std::vector<std::pair<TensorWord, FieldScalar>> terms{{TensorWord{}, FieldScalar(1)}};
            for (uint32_t b : w) {
                std::vector<std::pair<TensorWord, FieldScalar>> next;
                for (const auto& [tw, tc] : terms)
                    for (size_t cdx = 0; cdx < v_->dim(); ++cdx) {
                        if (a.at(cdx, b).is_zero()) continue;
                        TensorWord nw = tw;
                        nw.push_back((uint32_t)cdx);
                        next.emplace_back(std::move(nw), tc * a.at(cdx, b));
                    }
                terms = std::move(next);
            }
            for (const auto& [tw, tc] : terms) m.at(c.index(tw), i) += tc;
        }
        amb.gen_action.push_back(std::move(m));
    }
    return amb;
}

AmbientYD GradedHopfQuotient::quotient_ambient(unsigned q) const {
    AmbientYD full = component_ambient(q);
    AmbientYD amb;
    amb.group = full.group;
    const Subspace& ideal = ideal_[q];
    for (size_t f : ideal.free_columns()) amb.coord_degree.push_back(full.coord_degree[f]);
    for (size_t k = 0; k < full.gen_action.size(); ++k) {
        Matrix m(dim(q), dim(q));
        for (size_t j = 0; j < dim(q); ++j) {
            Vec img = quotient_coords(q, full.gen_action[k].apply(lift(q, unit_vec(dim(q), j))));
            for (size_t i = 0; i < dim(q); ++i) m.at(i, j) = img[i];
        }
        amb.gen_action.push_back(std::move(m));
    }
    return amb;
}

Subspace free_primitives(const YDSpace& v, unsigned n, size_t tensor_cap) {
    if (n < 1) throw std::invalid_argument("free_primitives: degree must be >= 1");
    TensorComponent src = TensorComponent::weight_component(v, n, tensor_cap);
    if (n == 1) return Subspace::full(src.dim());
    std::vector<TensorComponent> lower;
    for (unsigned p = 0; p < n; ++p)
        lower.push_back(TensorComponent::weight_component(v, p, tensor_cap));
    std::vector<SparseVec> cols(src.dim());
    size_t row_offset = 0;
    for (unsigned p = 1; p < n; ++p) {
        const TensorComponent& tp = lower[p];
        const TensorComponent& tq = lower[n - p];
        for (size_t c = 0; c < src.dim(); ++c)
            for (const auto& [r, val] : delta_column(src, tp, tq, p, c))
                cols[c].emplace_back(row_offset + r, val);
        row_offset += tp.dim() * tq.dim();
    }
    return kernel_of_columns(row_offset, cols);
}

NicholsComponent nichols_component(const YDSpace& v, unsigned n, size_t tensor_cap) {
    TensorComponent src = TensorComponent::weight_component(v, n, tensor_cap);
    // the symmetrizer map acts blockwise in word length
    Matrix m(src.dim(), src.dim());
    for (size_t i = 0; i < src.dim(); ++i) {
        size_t k = src.word(i).size();
        Vec img = src.apply_sum_vec(cached_symmetrizer(k), unit_vec(src.dim(), i));
        for (size_t r = 0; r < src.dim(); ++r) m.at(r, i) = img[r];
    }
    NicholsComponent out;
    out.relations = kernel_basis(m);
    out.dim = src.dim() - out.relations.dim();
    return out;
}

Vec quantum_shuffle(const YDSpace& v, size_t p, const Vec& u, size_t q, const Vec& w,
                    size_t tensor_cap) {
    TensorComponent cp = TensorComponent::power(v, p, tensor_cap);
    TensorComponent cq = TensorComponent::power(v, q, tensor_cap);
    TensorComponent cn = TensorComponent::power(v, p + q, tensor_cap);
    if (u.size() != cp.dim() || w.size() != cq.dim())
        throw std::invalid_argument("quantum_shuffle: operand dimension mismatch");
    Vec concat(cn.dim(), FieldScalar(0));
    for (size_t i = 0; i < cp.dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < cq.dim(); ++j) {
            if (w[j].is_zero()) continue;
            TensorWord t = cp.word(i);
            const TensorWord& tj = cq.word(j);
            t.insert(t.end(), tj.begin(), tj.end());
            concat[cn.index(t)] += u[i] * w[j];
        }
    }
    if (p == 0 || q == 0) return concat;
    return cn.apply_sum_vec(coshuffle_sum(p, q), concat);
}

GradedHopfQuotient ideal_generate(std::shared_ptr<const YDSpace> v,
                                  const std::map<unsigned, Subspace>& gens, unsigned cutoff,
                                  size_t tensor_cap) {
    std::vector<TensorComponent> comp;
    for (unsigned q = 0; q <= cutoff; ++q)
        comp.push_back(TensorComponent::weight_component(*v, q, tensor_cap));
    std::map<unsigned, Subspace> ideal;
    for (unsigned q = 0; q <= cutoff; ++q) ideal.emplace(q, Subspace(comp[q].dim()));
    for (unsigned q = 2; q <= cutoff; ++q) {
        std::vector<Vec> rows;
        auto it = gens.find(q);
        if (it != gens.end())
            for (size_t r = 0; r < it->second.dim(); ++r)
                rows.push_back(it->second.basis().row(r));
        // two-sided closure: V (x) I_{q-w} and I_{q-w} (x) V
        for (size_t b = 0; b < v->dim(); ++b) {
            unsigned wb = v->weight(b);
            if (wb >= q) continue;
            const Subspace& lower = ideal.at(q - wb);
            for (size_t r = 0; r < lower.dim(); ++r) {
                Vec row = lower.basis().row(r);
                Vec left(comp[q].dim(), FieldScalar(0)), right(comp[q].dim(), FieldScalar(0));
                for (size_t i = 0; i < row.size(); ++i) {
                    if (row[i].is_zero()) continue;
                    TensorWord lw{(uint32_t)b};
                    const TensorWord& wi = comp[q - wb].word(i);
                    lw.insert(lw.end(), wi.begin(), wi.end());
                    left[comp[q].index(lw)] = row[i];
                    TensorWord rw = wi;
                    rw.push_back((uint32_t)b);
                    right[comp[q].index(rw)] = row[i];
                }
                rows.push_back(std::move(left));
                rows.push_back(std::move(right));
            }
        }
        ideal.at(q) = Subspace::from_vectors(comp[q].dim(), rows);
    }
    return GradedHopfQuotient(std::move(v), cutoff, std::move(ideal), tensor_cap, true);
}

GradedHopfQuotient quotient_step(const GradedHopfQuotient& a) {
    std::map<unsigned, Subspace> gens;
    for (unsigned q = 2; q <= a.cutoff(); ++q) {
        Subspace dec = a.decomposable_primitives(q);
        std::vector<Vec> rows;
        for (size_t r = 0; r < a.ideal(q).dim(); ++r) rows.push_back(a.ideal(q).basis().row(r));
        for (size_t r = 0; r < dec.dim(); ++r) rows.push_back(a.lift(q, dec.basis().row(r)));
        gens.emplace(q, Subspace::from_vectors(a.component(q).dim(), rows));
    }
    return ideal_generate(a.generators_ptr(), gens, a.cutoff(), a.tensor_cap());
}

RankReport combinatorial_rank(const YDSpace& v, unsigned cutoff, size_t tensor_cap,
                              unsigned max_iter) {
    auto vp = std::make_shared<const YDSpace>(v);
    GradedHopfQuotient cur = GradedHopfQuotient::free_algebra(vp, cutoff, tensor_cap);
    RankReport report;
    report.tower_hilbert.push_back(cur.hilbert());
    for (unsigned step = 0; step < max_iter; ++step) {
        bool any = false;
        for (unsigned q = 2; q <= cutoff && !any; ++q)
            if (cur.decomposable_primitives(q).dim() > 0) any = true;
        if (!any) {
            report.rank = step;
            report.reached_fixed_point = true;
            return report;
        }
        cur = quotient_step(cur);
        report.tower_hilbert.push_back(cur.hilbert());
    }
    report.rank = max_iter;
    report.reached_fixed_point = false;
    return report;
}

WoronowiczPrimitives woronowicz_primitives(const GradedHopfQuotient& a, unsigned max_iter) {
    WoronowiczPrimitives out;
    GradedHopfQuotient cur = a;
    for (unsigned step = 0; step < max_iter; ++step) {
        bool any = false;
        for (unsigned q = 2; q <= a.cutoff() && !any; ++q)
            if (cur.decomposable_primitives(q).dim() > 0) any = true;
        if (!any) {
            out.tower_converged = true;
            break;
        }
        cur = quotient_step(cur);
        ++out.tower_steps;
    }
    out.family.in_quotient = true;
    out.kernel_a.in_quotient = true;
    for (unsigned q = 1; q <= a.cutoff(); ++q) {
        // ker(a)_q: the final tower ideal, seen inside A_q
        std::vector<Vec> rows;
        for (size_t r = 0; r < cur.ideal(q).dim(); ++r)
            rows.push_back(a.quotient_coords(q, cur.ideal(q).basis().row(r)));
        Subspace ker_a = Subspace::from_vectors(a.dim(q), rows);
        out.family.at.emplace(q, subspace_sum(a.primitives(q), ker_a));
        out.kernel_a.at.emplace(q, std::move(ker_a));
    }
    return out;
}

}  // namespace braidlab
