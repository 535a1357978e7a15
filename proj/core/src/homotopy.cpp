#include "bwcohom/homotopy.hpp"

namespace bwc {

namespace {

bool same_morphism(const NatSysMorphism& a, const NatSysMorphism& b)
{
    if (!(a.anchor() == b.anchor()) || !same_system(a.source(), b.source()) || !same_system(a.target(), b.target()))
        return false;
    for (MorId s = 0; s < a.components().size(); ++s)
        if (!homs_equal(a.component(s), b.component(s))) return false;
    return true;
}

void require_complexes(const NatSysMorphism& t, const ComplexPtr& a, const ComplexPtr& b, const char* who)
{
    if (!same_system(a->system(), t.source()) || !same_system(b->system(), t.target()))
        throw ShapeMismatch(std::string(who) + ": complexes are not built on the morphism's systems");
    if (a->max_degree() != b->max_degree())
        throw ShapeMismatch(std::string(who) + ": complexes are truncated at different degrees");
}

// X_j of a chain: X_0 is the head, X_j = source(σ_j).
ObjId chain_object(const FiniteCategory& c, const MorId* s, ObjId head, std::size_t j)
{
    return j == 0 ? head : c.source(s[j - 1]);
}

GradedMap induced(const NatSysMorphism& t, const ComplexPtr& a, const ComplexPtr& b, bool correct, bool verify,
                  const char* who)
{
    require_complexes(t, a, b, who);
    const NaturalTransformation& alpha = t.anchor();
    const Functor& phi = alpha.source();
    if (!correct && !(alpha == NaturalTransformation::identity(phi)))
        throw ShapeMismatch(std::string(who) + ": the anchor is not an identity transformation");
    const FiniteCategory& c = *a->base();
    const FiniteCategory& d = *b->base();
    const NaturalSystem& sys = *t.source();

    GradedMap p(a, b, 0);
    std::vector<MorId> buf;
    for (std::size_t n = 0; n <= a->max_degree(); ++n) {
        OperatorBuilder op(*a, n, *b, n);
        for (std::size_t i = 0; i < b->sequence_count(n); ++i) {
            const MorId* s = b->arrows(n, i);
            const MorId sigma = b->composite(n, i);
            std::size_t j;
            if (n == 0) {
                j = a->index_of_object(phi(b->head(0, i)));
            } else {
                buf.resize(n);
                for (std::size_t k = 0; k < n; ++k) buf[k] = phi.on_morphism(s[k]);
                j = a->index_of(n, buf.data());
            }
            if (correct) {
                const MorId f = a->composite(n, j);
                const GroupHom& corr = sys.action(f, c.identity(c.source(f)), alpha[d.target(sigma)]);
                op.add(i, j, hom_compose(t.component(sigma), corr));
            } else {
                op.add(i, j, t.component(sigma));
            }
        }
        p.set(n, op.finish());
    }
    if (verify) check_chain_map(p, std::string(who) + ": dp = pd");
    return p;
}

} // namespace

ValidationReport validate_nat_two_cell(const NatTwoCell& c)
{
    ValidationReport r;
    try {
        check_two_cell(c.cell);
    } catch (const Error& e) {
        r.add(e.what());
        return r;
    }
    if (!(c.from.anchor() == c.cell.alpha)) r.add("source 1-morphism is not anchored at alpha");
    if (!(c.to.anchor() == c.cell.beta)) r.add("target 1-morphism is not anchored at beta");
    if (!same_system(c.from.source(), c.to.source()) || !same_system(c.from.target(), c.to.target()))
        r.add("source and target 1-morphisms have different systems");
    if (!r.ok()) return r;
    const NaturalSystem& d = *c.from.source();
    const NaturalSystem& e = *c.from.target();
    NaturalTransformation fcell = factor_two_morphism(c.cell, *e.factorization(), *d.factorization());
    for (MorId sigma = 0; sigma < c.from.components().size(); ++sigma) {
        const GroupHom rhs = hom_compose(c.to.component(sigma), d.action(fcell[sigma]));
        if (!homs_equal(c.from.component(sigma), rhs))
            r.add("t != s D(epsilon, gamma) at '" + e.base()->morphism_name(sigma) + "'");
    }
    return r;
}

void check_nat_two_cell(const NatTwoCell& c)
{
    ValidationReport r = validate_nat_two_cell(c);
    if (!r.ok()) throw TwoMorphismInvalid("Nat_F 2-morphism: " + r.violations.front());
}

NatTwoCell identity_nat_cell(const NatSysMorphism& t) { return {identity_cell(t.anchor()), t, t}; }

NatTwoCell vertical_nat_cells(const NatTwoCell& second, const NatTwoCell& first)
{
    if (!same_morphism(first.to, second.from))
        throw LadderInvalid("vertical composite: the first cell does not end where the second starts");
    return {vertical_cells(second.cell, first.cell), first.from, second.to};
}

NatTwoCell horizontal_nat_cells(const NatTwoCell& outer, const NatTwoCell& inner)
{
    if (!same_system(outer.from.target(), inner.from.source()))
        throw ShapeMismatch("horizontal composite: cells are not side by side");
    return {horizontal_cells(outer.cell, inner.cell), compose_natsys_morphisms(inner.from, outer.from),
            compose_natsys_morphisms(inner.to, outer.to)};
}

GradedMap induced_map_nat(const NatSysMorphism& t, const ComplexPtr& a, const ComplexPtr& b, bool verify)
{
    return induced(t, a, b, false, verify, "induced_map_nat");
}

GradedMap induced_map_2(const NatSysMorphism& t, const ComplexPtr& a, const ComplexPtr& b, bool verify)
{
    return induced(t, a, b, true, verify, "induced_map_2");
}

GradedMap homotopy_h(const NatTwoCell& cell, const ComplexPtr& a, const ComplexPtr& b, bool verify)
{
    check_nat_two_cell(cell);
    require_complexes(cell.from, a, b, "homotopy_h");
    const FiniteCategory& c = *a->base();
    const FiniteCategory& d = *b->base();
    const NaturalSystem& sys = *a->system();
    const Functor& phi = cell.cell.alpha.source();
    const Functor& xi = cell.cell.beta.source();
    const NaturalTransformation& eps = cell.cell.epsilon;
    const NaturalTransformation& alpha = cell.cell.alpha;
    const NaturalTransformation& gamma = cell.cell.gamma;
    const NatSysMorphism& s = cell.to;

    GradedMap h(a, b, -1);
    std::vector<MorId> buf;
    for (std::size_t k = 1; k <= a->max_degree(); ++k) {
        const std::size_t n = k - 1;
        OperatorBuilder op(*a, k, *b, n);
        for (std::size_t i = 0; i < b->sequence_count(n); ++i) {
            const MorId* sg = b->arrows(n, i);
            const ObjId head = b->head(n, i);
            const ObjId y = head;
            GroupHom post;
            for (std::size_t p = 0; p <= n; ++p) {
                buf.clear();
                for (std::size_t q = 0; q < p; ++q) buf.push_back(phi.on_morphism(sg[q]));
                buf.push_back(eps[chain_object(d, sg, head, p)]);
                for (std::size_t q = p; q < n; ++q) buf.push_back(xi.on_morphism(sg[q]));
                const std::size_t j = a->index_of(k, buf.data());
                if (p == 0) {
                    const MorId f = a->composite(k, j);
                    post = hom_compose(s.component(b->composite(n, i)),
                                       sys.action(f, c.identity(c.source(f)), c.compose(gamma[y], alpha[y])));
                }
                op.add(i, j, post, p % 2 == 0 ? 1 : -1);
            }
        }
        h.set(k, op.finish());
    }
    if (verify)
        check_homotopy(h, induced_map_2(cell.from, a, b), induced_map_2(cell.to, a, b), "dh+hd = -p+q");
    return h;
}

GradedMap homotopy_r_vertical(const NatTwoCell& second, const NatTwoCell& first, const ComplexPtr& a,
                              const ComplexPtr& b, bool verify)
{
    const NatTwoCell composite = vertical_nat_cells(second, first);
    check_nat_two_cell(first);
    check_nat_two_cell(second);
    require_complexes(first.from, a, b, "homotopy_r_vertical");
    const FiniteCategory& c = *a->base();
    const FiniteCategory& d = *b->base();
    const NaturalSystem& sys = *a->system();
    const Functor& phi = first.cell.alpha.source();
    const Functor& phi1 = second.cell.alpha.source();
    const Functor& xi = second.cell.beta.source();
    const NaturalTransformation& eps = first.cell.epsilon;
    const NaturalTransformation& eps1 = second.cell.epsilon;
    const NaturalTransformation& alpha = first.cell.alpha;
    const NatSysMorphism& s = second.to;

    GradedMap r(a, b, -2);
    std::vector<MorId> buf;
    for (std::size_t k = 2; k <= a->max_degree(); ++k) {
        const std::size_t n = k - 2;
        OperatorBuilder op(*a, k, *b, n);
        for (std::size_t i = 0; i < b->sequence_count(n); ++i) {
            const MorId* sg = b->arrows(n, i);
            const ObjId y = b->head(n, i);
            GroupHom post;
            for (std::size_t p = 0; p <= n; ++p)
                for (std::size_t q = p; q <= n; ++q) {
                    buf.clear();
                    for (std::size_t u = 0; u < p; ++u) buf.push_back(phi.on_morphism(sg[u]));
                    buf.push_back(eps[chain_object(d, sg, y, p)]);
                    for (std::size_t u = p; u < q; ++u) buf.push_back(phi1.on_morphism(sg[u]));
                    buf.push_back(eps1[chain_object(d, sg, y, q)]);
                    for (std::size_t u = q; u < n; ++u) buf.push_back(xi.on_morphism(sg[u]));
                    const std::size_t j = a->index_of(k, buf.data());
                    if (p == 0 && q == 0) {
                        const MorId f = a->composite(k, j);
                        const MorId gg = c.compose(second.cell.gamma[y], c.compose(first.cell.gamma[y], alpha[y]));
                        post = hom_compose(s.component(b->composite(n, i)), sys.action(f, c.identity(c.source(f)), gg));
                    }
                    op.add(i, j, post, (p + q) % 2 == 0 ? 1 : -1);
                }
        }
        r.set(k, op.finish());
    }
    if (verify) {
        const GradedMap h1 = homotopy_h(first, a, b, false);
        const GradedMap h2 = homotopy_h(second, a, b, false);
        const GradedMap h3 = homotopy_h(composite, a, b, false);
        check_second_homotopy(r, graded_sub(h3, graded_add(h1, h2)), "dr-rd = -h - h' + h''");
    }
    return r;
}

GradedMap homotopy_r_horizontal(const NatTwoCell& outer, const NatTwoCell& inner, const ComplexPtr& a,
                                const ComplexPtr& b, const ComplexPtr& cc, bool verify)
{
    check_nat_two_cell(outer);
    check_nat_two_cell(inner);
    require_complexes(outer.from, a, b, "homotopy_r_horizontal");
    require_complexes(inner.from, b, cc, "homotopy_r_horizontal");
    const NatTwoCell composite = horizontal_nat_cells(outer, inner);
    const FiniteCategory& c = *a->base();
    const FiniteCategory& e = *cc->base();
    const NaturalSystem& sys = *a->system();
    const Functor& phi = outer.cell.alpha.source();
    const Functor& xi = outer.cell.beta.source();
    const Functor& phi1 = inner.cell.alpha.source();
    const Functor& xi1 = inner.cell.beta.source();
    const NaturalTransformation& eps = outer.cell.epsilon;
    const NaturalTransformation& eps1 = inner.cell.epsilon;
    const NaturalTransformation& alpha = composite.cell.alpha;
    const NaturalTransformation& gamma = composite.cell.gamma;
    const NatSysMorphism& s = composite.to;

    GradedMap r(a, cc, -2);
    std::vector<MorId> buf;
    for (std::size_t k = 2; k <= a->max_degree(); ++k) {
        const std::size_t n = k - 2;
        OperatorBuilder op(*a, k, *cc, n);
        for (std::size_t i = 0; i < cc->sequence_count(n); ++i) {
            const MorId* sg = cc->arrows(n, i);
            const ObjId y = cc->head(n, i);
            GroupHom post;
            for (std::size_t p = 0; p <= n; ++p)
                for (std::size_t q = p; q <= n; ++q) {
                    buf.clear();
                    for (std::size_t u = 0; u < p; ++u) buf.push_back(phi.on_morphism(phi1.on_morphism(sg[u])));
                    buf.push_back(phi.on_morphism(eps1[chain_object(e, sg, y, p)]));
                    for (std::size_t u = p; u < q; ++u) buf.push_back(phi.on_morphism(xi1.on_morphism(sg[u])));
                    buf.push_back(eps[xi1(chain_object(e, sg, y, q))]);
                    for (std::size_t u = q; u < n; ++u) buf.push_back(xi.on_morphism(xi1.on_morphism(sg[u])));
                    const std::size_t j = a->index_of(k, buf.data());
                    if (p == 0 && q == 0) {
                        const MorId f = a->composite(k, j);
                        post = hom_compose(s.component(cc->composite(n, i)),
                                           sys.action(f, c.identity(c.source(f)), c.compose(gamma[y], alpha[y])));
                    }
                    op.add(i, j, post, (p + q) % 2 == 0 ? 1 : -1);
                }
        }
        r.set(k, op.finish());
    }
    if (verify) {
        const GradedMap h = homotopy_h(outer, a, b, false);
        const GradedMap h1 = homotopy_h(inner, b, cc, false);
        const GradedMap hc = homotopy_h(composite, a, cc, false);
        const GradedMap p = induced_map_2(outer.from, a, b, false);
        const GradedMap q1 = induced_map_2(inner.to, b, cc, false);
        const GradedMap rhs = graded_sub(hc, graded_add(graded_compose(h1, p), graded_compose(q1, h)));
        check_second_homotopy(r, rhs, "dr'-r'd = -h'p - q'h + h''");
    }
    return r;
}

namespace {

// m[r0.., c0..] += sign * (p ⊗ q)
void add_kron(IntMatrix& m, std::size_t r0, std::size_t c0, const IntMatrix& p, const IntMatrix& q, int sign)
{
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const Integer& x = p(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t a = 0; a < q.rows(); ++a)
                for (std::size_t b = 0; b < q.cols(); ++b)
                    if (sgn(q(a, b)) != 0) {
                        Integer v = x * q(a, b);
                        if (sign < 0) v = -v;
                        m(r0 + i * q.rows() + a, c0 + j * q.cols() + b) += v;
                    }
        }
}

// column-major vectorisation
void put_vec(IntMatrix& rhs, std::size_t r0, const IntMatrix& x)
{
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) rhs(r0 + j * x.rows() + i, 0) = x(i, j);
}

IntMatrix get_vec(const IntMatrix& v, std::size_t r0, std::size_t rows, std::size_t cols)
{
    IntMatrix x(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) x(i, j) = v(r0 + j * rows + i, 0);
    return x;
}

} // namespace

HomotopyClassVerdict homotopy_class_equal(const GradedMap& h1, const GradedMap& h2, std::size_t max_unknowns)
{
    if (h1.shift() != -1 || h2.shift() != -1) throw ShapeMismatch("homotopy_class_equal: expects degree -1 maps");
    if (h1.source() != h2.source() || h1.target() != h2.target())
        throw ShapeMismatch("homotopy_class_equal: homotopies between different complexes");
    const ComplexPtr& a = h1.source();
    const ComplexPtr& b = h1.target();
    const std::size_t N = a->max_degree();
    auto ga = [&](std::size_t k) { return a->group(k)->generators(); };
    auto ra = [&](std::size_t k) { return a->group(k)->relation_count(); };
    auto gb = [&](std::size_t k) { return b->group(k)->generators(); };
    auto rb = [&](std::size_t k) { return b->group(k)->relation_count(); };

    // unknown layout: r^k (k = 2..N), Q_k (k = 2..N), S_k (k = 1..N-1)
    std::vector<std::size_t> r_off(N + 2, 0), q_off(N + 2, 0), s_off(N + 1, 0);
    std::size_t cols = 0;
    for (std::size_t k = 2; k <= N; ++k) r_off[k] = cols, cols += gb(k - 2) * ga(k);
    for (std::size_t k = 2; k <= N; ++k) q_off[k] = cols, cols += rb(k - 2) * ra(k);
    for (std::size_t k = 1; k < N; ++k) s_off[k] = cols, cols += rb(k - 1) * ga(k);
    std::vector<std::size_t> e_off(N + 1, 0), w_off(N + 1, 0);
    std::size_t rows = 0;
    for (std::size_t k = 1; k < N; ++k) e_off[k] = rows, rows += gb(k - 1) * ga(k);
    for (std::size_t k = 2; k <= N; ++k) w_off[k] = rows, rows += gb(k - 2) * ra(k);
    if (cols > max_unknowns)
        throw DimensionMismatch("homotopy_class_equal: " + std::to_string(cols) + " unknowns exceed the limit of " +
                                std::to_string(max_unknowns));

    HomotopyClassVerdict verdict;
    verdict.certified_degree = N == 0 ? 0 : N - 1;
    IntMatrix m(rows, cols), rhs(rows, 1);
    for (std::size_t k = 1; k < N; ++k) {
        const std::size_t gbk = gb(k - 1), gak = ga(k);
        if (k >= 2)
            add_kron(m, e_off[k], r_off[k], IntMatrix::identity(gak), b->differential(k - 2).matrix(), 1);
        if (k + 1 <= N)
            add_kron(m, e_off[k], r_off[k + 1], a->differential(k).matrix().transpose(), IntMatrix::identity(gbk), -1);
        add_kron(m, e_off[k], s_off[k], IntMatrix::identity(gak), b->group(k - 1)->relations(), -1);
        put_vec(rhs, e_off[k], h2.at(k).matrix() - h1.at(k).matrix());
    }
    for (std::size_t k = 2; k <= N; ++k) {
        add_kron(m, w_off[k], r_off[k], a->group(k)->relations().transpose(), IntMatrix::identity(gb(k - 2)), 1);
        add_kron(m, w_off[k], q_off[k], IntMatrix::identity(ra(k)), b->group(k - 2)->relations(), -1);
    }

    auto x = solve_integer(m, rhs);
    if (!x) return verdict;
    verdict.equal = true;
    verdict.witness = GradedMap(a, b, -2);
    for (std::size_t k = 2; k <= N; ++k)
        verdict.witness.set(k, GroupHom::assembled(a->group(k), b->group(k - 2), get_vec(*x, r_off[k], gb(k - 2), ga(k)),
                                                   get_vec(*x, q_off[k], rb(k - 2), ra(k))));
    return verdict;
}

} // namespace bwc
