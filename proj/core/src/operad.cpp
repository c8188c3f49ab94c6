#include "braidlab/operad.hpp"

#include "braidlab/hopf.hpp"

#include <sstream>

namespace braidlab {

Subspace brprim_level(const BraidQuotient& q) {
    const size_t n = q.strands();
    if (n < 2) throw std::invalid_argument("brprim_level: need n >= 2");
    Subspace acc = Subspace::full(q.group()->size());
    for (size_t p = 1; p < n; ++p) {
        GroupAlgebraElement s = eval_sum(cached_shuffle_sum(p, n - p), q);
        acc = intersect(acc, kernel_basis(left_mult_matrix(s)));
    }
    return acc;
}

Subspace woronowicz_level(const BraidQuotient& q) {
    const size_t n = q.strands();
    if (n < 2) throw std::invalid_argument("woronowicz_level: need n >= 2");
    GroupAlgebraElement s = eval_sum(cached_symmetrizer(n), q);
    return kernel_basis(left_mult_matrix(s));
}

namespace {

void check_right_stable(const BraidQuotient& q, const Subspace& s, const char* name) {
    const auto& g = q.group();
    for (size_t r = 0; r < s.dim(); ++r) {
        Vec v = s.basis().row(r);
        for (size_t i = 1; i < q.strands(); ++i) {
            size_t gen = q.gen_image(i);
            Vec w(g->size(), FieldScalar(0));
            for (size_t x = 0; x < v.size(); ++x)
                if (!v[x].is_zero()) w[g->product(x, gen)] = v[x];
            if (!s.contains(w))
                throw StructureError(std::string(name) +
                                     " is not stable under the right B_n action");
        }
    }
}

}  // namespace

OperadLevel operad_level(const BraidQuotient& q) {
    OperadLevel level;
    level.n = q.strands();
    level.brprim = brprim_level(q);
    level.woron = woronowicz_level(q);
    if (!level.woron.contains(level.brprim))
        throw StructureError("operad_level: BrPrim escapes the Woronowicz level");
    check_right_stable(q, level.brprim, "brprim level");
    check_right_stable(q, level.woron, "Woronowicz level");
    return level;
}

GroupAlgebraElement garsia_idempotent(const FinGroupPtr& g, const Subspace& ideal) {
    const size_t N = g->size();
    if (ideal.ambient_dim() != N)
        throw std::invalid_argument("garsia_idempotent: ambient is not k[Q]");
    GroupAlgebraElement zero(g);
    if (ideal.dim() == 0) return zero;

    // right-ideal precondition, checked against every group generator
    for (size_t r = 0; r < ideal.dim(); ++r) {
        Vec v = ideal.basis().row(r);
        for (size_t k = 0; k < g->generator_count(); ++k) {
            Vec w(N, FieldScalar(0));
            for (size_t x = 0; x < N; ++x)
                if (!v[x].is_zero()) w[g->product(x, g->generator(k))] = v[x];
            if (!ideal.contains(w))
                throw StructureError("garsia_idempotent: not a right ideal (basis row " +
                                     std::to_string(r) + " times generator " +
                                     std::to_string(k) + " escapes)");
        }
    }

    // Maschke average of the pivot-coordinate projection:
    //   q(x) = (1/|Q|) sum_h p(x h) h^{-1},   e0 = q(1) = (1/|Q|) sum_k r_k c_k^{-1}
    // where r_k are the RREF basis rows and c_k their pivot group elements.
    FieldScalar inv_order(1, (long)N);
    GroupAlgebraElement e0(g);
    for (size_t k = 0; k < ideal.dim(); ++k) {
        GroupAlgebraElement row = GroupAlgebraElement::from_vec(g, ideal.basis().row(k));
        size_t pivot_inv = g->inverse(ideal.pivots()[k]);
        e0 = e0 + (row * GroupAlgebraElement::delta(g, pivot_inv)).scaled(inv_order);
    }
    if (!(e0 * e0 == e0))
        throw std::logic_error("garsia_idempotent: Maschke average failed to be idempotent");
    if (!(right_ideal(e0) == ideal))
        throw std::logic_error("garsia_idempotent: e0 does not generate the ideal");

    // f(t) = e0 + e0 t (1 - e0) parametrizes every idempotent generator of
    // the ideal; impose S(f(t)) = f(t), an affine system in t.
    GroupAlgebraElement one = GroupAlgebraElement::delta(g, g->identity());
    GroupAlgebraElement one_minus_e0 = one - e0;
    auto X = [&](const GroupAlgebraElement& t) { return e0 * t * one_minus_e0; };

    Matrix lin(N, N);
    for (size_t j = 0; j < N; ++j) {
        GroupAlgebraElement xj = X(GroupAlgebraElement::delta(g, j));
        Vec col = (xj - antipode(xj)).to_vec();
        for (size_t i = 0; i < N; ++i) lin.at(i, j) = col[i];
    }
    Vec rhs = (antipode(e0) - e0).to_vec();
    AffineSolution sol = solve_affine(lin, rhs);
    if (!sol.consistent)
        throw StructureError("garsia_idempotent: no antipode-symmetric idempotent exists; "
                             "this contradicts the characteristic-zero theory");

    GroupAlgebraElement t_star = GroupAlgebraElement::from_vec(g, sol.particular);
    GroupAlgebraElement f = e0 + X(t_star);

    // uniqueness in f-space: kernel directions must not move f
    size_t moving = 0;
    for (size_t r = 0; r < sol.kernel.dim(); ++r) {
        GroupAlgebraElement delta = GroupAlgebraElement::from_vec(g, sol.kernel.basis().row(r));
        if (!X(delta).is_zero()) ++moving;
    }
    if (moving > 0)
        throw StructureError("garsia_idempotent: symmetric idempotent not unique; " +
                             std::to_string(moving) +
                             " independent kernel directions move the solution");

    if (!(f * f == f) || !(antipode(f) == f) || !(right_ideal(f) == ideal))
        throw std::logic_error("garsia_idempotent: solution fails verification");
    return f;
}

namespace {

std::string pretty_tensor(const YDSpace& v, const TensorComponent& comp, const Vec& vec) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < vec.size(); ++i) {
        if (vec[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << vec[i].str() << ")*";
        const TensorWord& w = comp.word(i);
        for (size_t t = 0; t < w.size(); ++t) {
            if (t) os << ".";
            os << v.label(w[t]);
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

CounterexampleReport verify_not_right_ideal(const YDSpace& v, size_t cap) {
    if (v.dim() < 2)
        throw std::invalid_argument("verify_not_right_ideal: space too small to be interesting");
    TensorComponent c3 = TensorComponent::power(v, 3, cap);

    // level selection: the cabled word sigma^2 acts with finite order N; the
    // norm bracket level must kill sigma^{2n} under cabling, so take
    // n = lcm(2, N), which also reproduces the minimal alternating sum
    BraidWord sigma(2, {{1, +1}});
    BraidWord unit2(2);
    Matrix step = c3.word_matrix(cable(sigma.power(2), unit2, 1));
    Matrix acc = step;
    size_t order = 1;
    while (!(acc == Matrix::identity(c3.dim()))) {
        acc = acc * step;
        ++order;
        if (order > 4096)
            throw CapExceeded("verify_not_right_ideal: cabled braiding order too large", order);
    }
    size_t half_period = (order % 2 == 0) ? order : 2 * order;

    CounterexampleReport report;
    report.half_period = half_period;
    FormalBraidSum b = norm_bracket_sum(half_period);
    FormalBraidSum cabled = cable(b, unit2, 1);

    // x (x) x (x) y: the first two basis vectors of the rack space
    TensorWord seed{0, 0, 1};
    Vec start = unit_vec(c3.dim(), c3.index(seed));
    report.intermediate = c3.apply_sum_vec(cabled, start);
    report.final = c3.apply_sum_vec(cached_symmetrizer(3), report.intermediate);
    report.nonzero = !is_zero_vec(report.final);
    report.intermediate_str = pretty_tensor(v, c3, report.intermediate);
    report.final_str = pretty_tensor(v, c3, report.final);
    return report;
}

std::vector<SymmetrizationRow> symmetrization_table(size_t n_max) {
    std::vector<SymmetrizationRow> rows;
    for (size_t n = 2; n <= n_max; ++n) {
        BraidQuotient q = symmetric_quotient(n);
        OperadLevel level = operad_level(q);
        SymmetrizationRow row;
        row.n = n;
        row.brprim_dim = level.brprim.dim();
        row.woron_dim = level.woron.dim();
        row.strict_inclusion = level.woron.dim() > level.brprim.dim();
        rows.push_back(row);
    }
    return rows;
}

GroupAlgebraElement push_norm_bracket(size_t n, size_t m) {
    if (m == 0 || n % m != 0)
        throw std::invalid_argument("push_norm_bracket: need m | n");
    BraidQuotient source = cyclic_quotient_b2(2 * n);
    BraidQuotient target = cyclic_quotient_b2(2 * m);
    GroupAlgebraElement b = eval_sum(norm_bracket_sum(n), source);
    return push_forward(b, source, target);
}

}  // namespace braidlab
