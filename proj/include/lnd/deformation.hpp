#pragma once
// Formal deformations of an action table and formal automorphisms of its
// ring, to finite order: validation of the order-by-order Cartan and product
// identities, obstruction classes, extension solvers, conjugation, gauging,
// and the rigidity pipeline.

#include <optional>
#include <variant>
#include <vector>

#include "lnd/fstar.hpp"

namespace lnd {

// ------------------------------------------------------------ deformation

template <class R>
struct Deformation {
    ActionTable<R> base;
    int order = 0;
    std::vector<Cochain<R>> coeffs;  // coeffs[i] is the t^(i+1) coefficient

    // Coefficient of t^i at alpha; i = 0 reads the base action.
    Matrix<R> coeff_matrix(int i, const ExpSeq& alpha) const {
        if (i == 0) return base.at(alpha);
        return coeffs[static_cast<size_t>(i - 1)].tensor_at(alpha).vals;
    }

    // Index of the first nonzero coefficient, or 0 when all vanish.
    int first_nonzero() const {
        for (int i = 1; i <= order; ++i)
            if (!coeffs[static_cast<size_t>(i - 1)].is_zero()) return i;
        return 0;
    }
};

template <class R>
Deformation<R> trivial_deformation(const ActionTable<R>& base, int order) {
    Deformation<R> d;
    d.base = base;
    d.order = order;
    for (int i = 1; i <= order; ++i)
        d.coeffs.push_back(Cochain<R>::zero(base.ring.base, base.ring.rank, 1, base.bound));
    return d;
}

struct DeformationViolation {
    enum class Kind { Base, Cartan, Product } kind;
    int level = 0;  // the power of t at which the identity fails
    ExpSeq alpha, beta;
    int i = 0, j = 0;  // basis pair for Cartan
    std::string to_string() const {
        switch (kind) {
            case Kind::Base: return "base action invalid";
            case Kind::Cartan:
                return "order-" + std::to_string(level) + " Cartan identity fails at alpha=" +
                       alpha.to_string() + " pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            case Kind::Product:
                return "order-" + std::to_string(level) + " product identity fails at (" +
                       alpha.to_string() + ", " + beta.to_string() + ")";
        }
        return "?";
    }
};

// Checks only the identities at level n >= 1 (used by the validators and by
// the exhaustive extension oracle, which probes one new level at a time).
template <class R>
std::optional<DeformationViolation> deformation_level_check(const Deformation<R>& d,
                                                            const StructureTable& s, int n) {
    const R& k = d.base.ring.base;
    const int r = d.base.ring.rank;
    const auto seqs = enumerate_up_to(d.base.bound);

    for (const ExpSeq& alpha : seqs)
        for (const ExpSeq& beta : seqs) {
            if (alpha.degree() + beta.degree() > d.base.bound) continue;
            Matrix<R> lhs(k, r, r);
            for (int i = 0; i <= n; ++i)
                lhs = lhs.add(d.coeff_matrix(i, alpha).mul(d.coeff_matrix(n - i, beta)));
            Matrix<R> rhs(k, r, r);
            for (const auto& [gamma, c] : s.constants(alpha, beta))
                rhs = rhs.add(d.coeff_matrix(n, gamma).scale(k.from_int(c)));
            if (!(lhs == rhs))
                return DeformationViolation{DeformationViolation::Kind::Product, n, alpha, beta, 0, 0};
        }

    for (const ExpSeq& alpha : seqs) {
        const auto splits = splittings(alpha);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                const Vec<R> lhs = d.coeff_matrix(n, alpha).mul_vec(
                    d.base.ring.mult[static_cast<size_t>(a)][static_cast<size_t>(b)]);
                Vec<R> rhs = zero_vec(k, r);
                for (int i = 0; i <= n; ++i)
                    for (const auto& [beta, gamma] : splits)
                        rhs = vec_add(k, rhs,
                                      d.base.ring.mul(d.coeff_matrix(i, beta).col(a),
                                                      d.coeff_matrix(n - i, gamma).col(b)));
                if (lhs != rhs)
                    return DeformationViolation{DeformationViolation::Kind::Cartan, n, alpha, {}, a, b};
            }
    }
    return std::nullopt;
}

template <class R>
std::optional<DeformationViolation> validate_deformation(const Deformation<R>& d,
                                                         const StructureTable& s) {
    if (validate_action(d.base, s).has_value())
        return DeformationViolation{DeformationViolation::Kind::Base, 0, {}, {}, 0, 0};
    for (int n = 1; n <= d.order; ++n)
        if (auto v = deformation_level_check(d, s, n)) return v;
    return std::nullopt;
}

// ----------------------------------------------------------- automorphism

template <class R>
struct Automorphism {
    FiniteRing<R> ring;
    int order = 0;
    std::vector<Matrix<R>> coeffs;  // coeffs[i] is the t^(i+1) coefficient

    Matrix<R> coeff(int i) const {
        if (i == 0) return Matrix<R>::identity(ring.base, ring.rank);
        if (i > order) return Matrix<R>(ring.base, ring.rank, ring.rank);
        return coeffs[static_cast<size_t>(i - 1)];
    }
    int first_nonzero() const {
        for (int i = 1; i <= order; ++i)
            if (!coeffs[static_cast<size_t>(i - 1)].is_zero()) return i;
        return 0;
    }
};

template <class R>
Automorphism<R> identity_automorphism(const FiniteRing<R>& ring, int order) {
    Automorphism<R> p;
    p.ring = ring;
    p.order = order;
    for (int i = 0; i < order; ++i) p.coeffs.emplace_back(ring.base, ring.rank, ring.rank);
    return p;
}

struct AutomorphismViolation {
    int level = 0;
    int i = 0, j = 0;
    std::string to_string() const {
        return "order-" + std::to_string(level) + " multiplicativity fails at basis pair (" +
               std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

template <class R>
std::optional<AutomorphismViolation> automorphism_level_check(const Automorphism<R>& p, int n) {
    const R& k = p.ring.base;
    const int r = p.ring.rank;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            const Vec<R> lhs =
                p.coeff(n).mul_vec(p.ring.mult[static_cast<size_t>(a)][static_cast<size_t>(b)]);
            Vec<R> rhs = zero_vec(k, r);
            for (int i = 0; i <= n; ++i)
                rhs = vec_add(k, rhs, p.ring.mul(p.coeff(i).col(a), p.coeff(n - i).col(b)));
            if (lhs != rhs) return AutomorphismViolation{n, a, b};
        }
    return std::nullopt;
}

template <class R>
std::optional<AutomorphismViolation> validate_automorphism(const Automorphism<R>& p) {
    for (int n = 1; n <= p.order; ++n)
        if (auto v = automorphism_level_check(p, n)) return v;
    return std::nullopt;
}

template <class R>
bool first_nonzero_is_derivation(const Automorphism<R>& p) {
    const int k = p.first_nonzero();
    if (k == 0) return true;
    return is_derivation(p.ring, p.coeff(k));
}

// Unique inverse with Phi * Phi^{-1} = 1 truncated at the same order; the
// result is again multiplicative.
template <class R>
Automorphism<R> invert_automorphism(const Automorphism<R>& p) {
    Automorphism<R> inv;
    inv.ring = p.ring;
    inv.order = p.order;
    std::vector<Matrix<R>> psi;  // psi[n] is the t^n coefficient, psi[0] = 1
    psi.push_back(Matrix<R>::identity(p.ring.base, p.ring.rank));
    for (int n = 1; n <= p.order; ++n) {
        Matrix<R> acc(p.ring.base, p.ring.rank, p.ring.rank);
        for (int i = 1; i <= n; ++i)
            acc = acc.add(p.coeff(i).mul(psi[static_cast<size_t>(n - i)]));
        psi.push_back(acc.neg());
        inv.coeffs.push_back(psi.back());
    }
    if (validate_automorphism(inv).has_value())
        throw InternalError("inverse of a formal automorphism failed multiplicativity");
    return inv;
}

// Truncated series product (composition of the underlying maps).
template <class R>
Automorphism<R> compose_automorphisms(const Automorphism<R>& p, const Automorphism<R>& q) {
    if (!(p.ring == q.ring)) throw MismatchError("automorphism rings differ");
    Automorphism<R> out;
    out.ring = p.ring;
    out.order = std::min(p.order, q.order);
    for (int n = 1; n <= out.order; ++n) {
        Matrix<R> acc(p.ring.base, p.ring.rank, p.ring.rank);
        for (int i = 0; i <= n; ++i) acc = acc.add(p.coeff(i).mul(q.coeff(n - i)));
        out.coeffs.push_back(acc);
    }
    return out;
}

// ------------------------------------------------------------ obstruction

// The degree-2 obstruction of an order-m deformation; hard-asserts the
// cocycle property.
template <class R>
Cochain<R> deformation_obstruction(const Deformation<R>& d, const StructureTable& s) {
    const R& k = d.base.ring.base;
    const int r = d.base.ring.rank;
    const int m = d.order;
    Cochain<R> ob = Cochain<R>::zero(k, r, 2, d.base.bound);

    for (const auto& pair : enumerate_tuples(2, d.base.bound)) {
        Matrix<R> acc(k, r, r);
        for (int i = 1; i <= m; ++i)
            acc = acc.add(d.coeff_matrix(i, pair[0]).mul(d.coeff_matrix(m + 1 - i, pair[1])));
        if (!acc.is_zero()) ob.op.emplace(pair, acc.neg());
    }
    for (const ExpSeq& alpha : enumerate_up_to(d.base.bound)) {
        Tensor<R> t(k, r, 2);
        bool nonzero = false;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                Vec<R> acc = zero_vec(k, r);
                for (int i = 1; i <= m; ++i)
                    for (const auto& [beta, gamma] : splittings(alpha))
                        acc = vec_add(k, acc,
                                      d.base.ring.mul(d.coeff_matrix(i, beta).col(a),
                                                      d.coeff_matrix(m + 1 - i, gamma).col(b)));
                if (!vec_is_zero(k, acc)) {
                    t.set_value({a, b}, vec_scale(k, k.neg(k.one()), acc));
                    nonzero = true;
                }
            }
        if (nonzero) ob.tensor.emplace(alpha, std::move(t));
    }

    if (!dn(ob, d.base, s).is_zero())
        throw InternalError("deformation obstruction is not a 2-cocycle");
    return ob;
}

// The Hochschild obstruction of an order-m automorphism; hard-asserts the
// cocycle property.
template <class R>
Tensor<R> automorphism_obstruction(const Automorphism<R>& p) {
    const R& k = p.ring.base;
    const int r = p.ring.rank;
    Tensor<R> ob(k, r, 2);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            Vec<R> acc = zero_vec(k, r);
            for (int i = 1; i <= p.order; ++i)
                acc = vec_add(k, acc, p.ring.mul(p.coeff(i).col(a), p.coeff(p.order + 1 - i).col(b)));
            ob.set_value({a, b}, vec_scale(k, k.neg(k.one()), acc));
        }
    if (!hochschild_differential(p.ring, ob).is_zero())
        throw InternalError("automorphism obstruction is not a Hochschild 2-cocycle");
    return ob;
}

// -------------------------------------------------------------- extension

template <class R>
struct DeformationExtension {
    std::optional<Deformation<R>> extended;  // present iff the class vanished
    Cochain<R> obstruction;                  // certified 2-cocycle either way
    long solution_freedom = 0;               // affine dimension of the solution set
    bool obstructed() const { return !extended.has_value(); }
};

// Extends by one order when the obstruction is a coboundary; the failure of
// the integral (or field) solve is the nonzero-class certificate.
template <class R>
DeformationExtension<R> extend_deformation(const Deformation<R>& d, const StructureTable& s) {
    const R& k = d.base.ring.base;
    DeformationExtension<R> res{std::nullopt, deformation_obstruction(d, s), 0};
    const CochainLayout<R> in(1, d.base.bound, d.base.ring.rank);
    const CochainLayout<R> out(2, d.base.bound, d.base.ring.rank);
    const Matrix<R> d1 = differential_matrix(1, d.base, s);
    const auto sol = solve_linear(d1, out.flatten(k, res.obstruction));
    if (!sol) return res;
    res.solution_freedom = solution_freedom(d1);
    Deformation<R> next = d;
    next.order = d.order + 1;
    next.coeffs.push_back(in.unflatten(k, *sol));
    if (auto v = deformation_level_check(next, s, next.order))
        throw InternalError("solved extension fails revalidation: " + v->to_string());
    res.extended = std::move(next);
    return res;
}

template <class R>
struct AutomorphismExtension {
    std::optional<Automorphism<R>> extended;
    Tensor<R> obstruction;
    bool obstructed() const { return !extended.has_value(); }
};

template <class R>
AutomorphismExtension<R> extend_automorphism(const Automorphism<R>& p) {
    const R& k = p.ring.base;
    AutomorphismExtension<R> res{std::nullopt, automorphism_obstruction(p)};
    const Matrix<R> b1 = hochschild_matrix(p.ring, 1);
    const auto sol = solve_linear(b1, flatten_tensor(res.obstruction));
    if (!sol) return res;
    Automorphism<R> next = p;
    next.order = p.order + 1;
    next.coeffs.push_back(matrix_from_flat(k, p.ring.rank, *sol));
    if (auto v = automorphism_level_check(next, next.order))
        throw InternalError("solved automorphism extension fails revalidation: " + v->to_string());
    res.extended = std::move(next);
    return res;
}

// Iterated extension from a 1-cocycle; the class at each order is defined
// only when all previous ones vanished.
template <class R>
struct ObstructionSequence {
    std::vector<std::pair<int, bool>> vanished;  // (order probed, class vanished?)
    Deformation<R> reached;
};

template <class R>
ObstructionSequence<R> obstruction_sequence(const Cochain<R>& s1, const ActionTable<R>& t,
                                            const StructureTable& s, int max_order) {
    if (s1.degree != 1) throw std::invalid_argument("obstruction_sequence wants a degree-1 cochain");
    if (!is_cocycle(s1, t, s)) throw std::invalid_argument("obstruction_sequence wants a 1-cocycle");
    Deformation<R> d;
    d.base = t;
    d.order = 1;
    d.coeffs.push_back(s1);
    ObstructionSequence<R> seq{{}, d};
    while (seq.reached.order < max_order) {
        auto ext = extend_deformation(seq.reached, s);
        seq.vanished.emplace_back(seq.reached.order, !ext.obstructed());
        if (ext.obstructed()) break;
        seq.reached = std::move(*ext.extended);
    }
    return seq;
}

// ------------------------------------------------------------ conjugation

// Coefficients of Phi^{-1} sigma Phi truncated at t^(order+1).  Phi must be
// valid at least to the deformation's order.
template <class R>
Deformation<R> conjugate(const Deformation<R>& d, const Automorphism<R>& p) {
    if (!(d.base.ring == p.ring)) throw MismatchError("conjugation across different rings");
    if (p.order < d.order) throw MismatchError("automorphism order below deformation order");
    const R& k = d.base.ring.base;
    const int r = d.base.ring.rank;
    const Automorphism<R> pinv = invert_automorphism(p);

    Deformation<R> out;
    out.base = d.base;
    out.order = d.order;
    for (int n = 1; n <= d.order; ++n) {
        Cochain<R> c = Cochain<R>::zero(k, r, 1, d.base.bound);
        for (const ExpSeq& alpha : enumerate_up_to(d.base.bound)) {
            Matrix<R> acc(k, r, r);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j) {
                    const int l = n - i - j;
                    acc = acc.add(pinv.coeff(i).mul(d.coeff_matrix(j, alpha)).mul(p.coeff(l)));
                }
            if (!acc.is_zero()) c.set_matrix(alpha, acc);
        }
        c.prune();
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

// --------------------------------------------------------- infinitesimals

template <class R>
struct InfinitesimalClass {
    int order = 0;           // power of t carrying the first nonzero coefficient
    Cochain<R> cocycle;      // that coefficient, certified a 1-cocycle
    Vec<R> reduced;          // canonical representative modulo the image of d0
    bool zero_class = false;
};

template <class R>
InfinitesimalClass<R> infinitesimal_class(const Deformation<R>& d, const StructureTable& s) {
    const R& k = d.base.ring.base;
    InfinitesimalClass<R> out;
    out.order = d.first_nonzero();
    if (out.order == 0) {
        out.cocycle = Cochain<R>::zero(k, d.base.ring.rank, 1, d.base.bound);
        out.zero_class = true;
        return out;
    }
    out.cocycle = d.coeffs[static_cast<size_t>(out.order - 1)];
    if (!is_cocycle(out.cocycle, d.base, s))
        throw InternalError("leading deformation coefficient is not a 1-cocycle");
    const CochainLayout<R> layout(1, d.base.bound, d.base.ring.rank);
    const Matrix<R> image = d0_image_matrix(d.base);
    out.reduced = reduce_mod_image(image, layout.flatten(k, out.cocycle));
    out.zero_class = vec_is_zero(k, out.reduced);
    return out;
}

// Decides whether two degree-1 cocycles represent the same class: the
// difference must be d0 of some derivation (an exact solve over the base).
template <class R>
bool same_infinitesimal_class(const Cochain<R>& a, const Cochain<R>& b, const ActionTable<R>& t,
                              const StructureTable& s) {
    const CochainLayout<R> layout(1, t.bound, t.ring.rank);
    const Matrix<R> image = d0_image_matrix(t);
    const auto diff = layout.flatten(t.ring.base, a.sub(b));
    return solve_linear(image, diff).has_value();
}

// ----------------------------------------------------------------- gauge

template <class R>
struct GaugeStep {
    enum class Status { AlreadyTrivial, Reduced, CoboundarySolveFailed, AutomorphismExtensionFailed };
    Status status;
    int level = 0;                        // the order that was (or failed to be) cleared
    std::optional<Automorphism<R>> phi;   // the gauge used
    std::optional<Deformation<R>> reduced;
};

// One rigidity step: if the first nonzero coefficient is a coboundary
// d0(phi_k), conjugating by an extension of 1 - t^k phi_k clears it.
template <class R>
GaugeStep<R> gauge_step(const Deformation<R>& d) {
    const R& k = d.base.ring.base;
    GaugeStep<R> out{GaugeStep<R>::Status::AlreadyTrivial, 0, std::nullopt, std::nullopt};
    const int level = d.first_nonzero();
    if (level == 0) {
        out.phi = identity_automorphism(d.base.ring, d.order);
        out.reduced = d;
        return out;
    }
    out.level = level;

    const CochainLayout<R> layout(1, d.base.bound, d.base.ring.rank);
    const Matrix<R> image_cols = d0_image_matrix(d.base);
    const auto coords = solve_linear(
        image_cols, layout.flatten(k, d.coeffs[static_cast<size_t>(level - 1)]));
    if (!coords) {
        out.status = GaugeStep<R>::Status::CoboundarySolveFailed;
        return out;
    }
    const auto ders = derivation_basis(d.base.ring);
    Matrix<R> phi_k(k, d.base.ring.rank, d.base.ring.rank);
    for (size_t i = 0; i < ders.size(); ++i)
        phi_k = phi_k.add(ders[i].scale((*coords)[i]));

    Automorphism<R> phi = identity_automorphism(d.base.ring, level);
    phi.coeffs[static_cast<size_t>(level - 1)] = phi_k.neg();
    if (validate_automorphism(phi).has_value())
        throw InternalError("gauge seed is not an automorphism at its own order");
    while (phi.order < d.order) {
        auto ext = extend_automorphism(phi);
        if (ext.obstructed()) {
            out.status = GaugeStep<R>::Status::AutomorphismExtensionFailed;
            out.level = phi.order + 1;
            return out;
        }
        phi = std::move(*ext.extended);
    }

    Deformation<R> reduced = conjugate(d, phi);
    const int next = reduced.first_nonzero();
    if (next != 0 && next <= level)
        throw InternalError("gauge step did not raise the first nonzero order");
    out.status = GaugeStep<R>::Status::Reduced;
    out.phi = std::move(phi);
    out.reduced = std::move(reduced);
    return out;
}

// ---------------------------------------------------------------- rigidity

template <class R>
struct RigidityReport {
    bool certified = false;
    CohomologyResult<R> h1;    // degree-1 cohomology of the bounded complex
    CohomologyResult<R> hh2;   // Hochschild degree-2 of the ring
    std::string blocking;      // which group is nonzero when not certified
    Vec<R> representative;     // flat degree-1 cocycle exhibiting nonzero H^1 (if that blocks)
    bool rep_is_cocycle = false;
    bool rep_not_coboundary = false;
    std::uint64_t seed = 0;
    std::vector<int> gauged_levels;  // demo: orders cleared in sequence
    bool demo_trivialized = false;
};

// Seeded valid deformation built constructively: random combination of the
// degree-1 cocycle lattice, extended while the obstruction vanishes.
template <class R>
Deformation<R> seeded_deformation(const ActionTable<R>& t, const StructureTable& s, int order,
                                  Rng& rng, long lo = -2, long hi = 2) {
    const R& k = t.ring.base;
    const Matrix<R> d1 = differential_matrix(1, t, s);
    const Matrix<R> cocycles = kernel_basis(d1);
    const CochainLayout<R> layout(1, t.bound, t.ring.rank);
    Vec<R> v = zero_vec(k, static_cast<int>(layout.dimension()));
    for (int j = 0; j < cocycles.cols(); ++j) {
        const auto c = k.from_long(rng.range(lo, hi));
        if (k.is_zero(c)) continue;
        for (int i = 0; i < cocycles.rows(); ++i)
            v[static_cast<size_t>(i)] = k.add(v[static_cast<size_t>(i)], k.mul(c, cocycles.at(i, j)));
    }
    Deformation<R> d;
    d.base = t;
    d.order = 1;
    d.coeffs.push_back(layout.unflatten(k, v));
    while (d.order < order) {
        auto ext = extend_deformation(d, s);
        if (ext.obstructed()) break;
        d = std::move(*ext.extended);
    }
    return d;
}

template <class R>
RigidityReport<R> rigidity_certificate(const ActionTable<R>& t, const StructureTable& s,
                                       int max_order, std::uint64_t seed) {
    RigidityReport<R> rep;
    rep.seed = seed;
    rep.h1 = fstar_cohomology(t, s, 1);
    rep.hh2 = hochschild_cohomology(t.ring, 2);
    if (!rep.h1.trivial()) {
        rep.blocking = "H1";
        const Matrix<R> d1 = differential_matrix(1, t, s);
        const Matrix<R> image = d0_image_matrix(t);
        rep.representative = rep.h1.representatives.at(0);
        rep.rep_is_cocycle = vec_is_zero(t.ring.base, d1.mul_vec(rep.representative));
        rep.rep_not_coboundary = !solve_linear(image, rep.representative).has_value();
        return rep;
    }
    if (!rep.hh2.trivial()) {
        rep.blocking = "HH2";
        return rep;
    }
    rep.certified = true;

    // Demonstration: gauge a seeded deformation back to the trivial one.
    Rng rng(seed);
    Deformation<R> d = seeded_deformation(t, s, max_order, rng);
    for (;;) {
        auto step = gauge_step(d);
        if (step.status == GaugeStep<R>::Status::AlreadyTrivial) {
            rep.demo_trivialized = true;
            break;
        }
        if (step.status != GaugeStep<R>::Status::Reduced)
            throw InternalError("rigidity demo failed although both groups vanish");
        rep.gauged_levels.push_back(step.level);
        d = std::move(*step.reduced);
    }
    return rep;
}

// ------------------------------------------------------------ equivalence

template <class R>
struct ExtensionEquivalence {
    enum class Status { Witness, UnknownNonzeroClass };
    Status status;
    std::optional<Automorphism<R>> witness;  // 1 + t^(m+1) phi when found
    Cochain<R> difference;                   // certified 1-cocycle
};

// Two order-(m+1) extensions of the same order-m deformation: a coboundary
// difference yields an explicit conjugation witness; otherwise the nonzero
// class is returned with no verdict (the converse direction is open).
template <class R>
ExtensionEquivalence<R> equivalent_extensions(const Deformation<R>& left,
                                              const Deformation<R>& right,
                                              const StructureTable& s) {
    if (left.order != right.order || left.order < 1)
        throw MismatchError("extensions must share the same positive order");
    if (!(left.base == right.base)) throw MismatchError("extensions of different bases");
    for (int i = 1; i < left.order; ++i)
        if (!left.coeffs[static_cast<size_t>(i - 1)].equal(right.coeffs[static_cast<size_t>(i - 1)]))
            throw MismatchError("inputs do not extend the same deformation");

    const R& k = left.base.ring.base;
    const int m_plus_1 = left.order;
    ExtensionEquivalence<R> out{ExtensionEquivalence<R>::Status::UnknownNonzeroClass, std::nullopt,
                                left.coeffs.back().sub(right.coeffs.back())};
    if (!is_cocycle(out.difference, left.base, s))
        throw InternalError("difference of two extensions is not a 1-cocycle");

    const CochainLayout<R> layout(1, left.base.bound, left.base.ring.rank);
    const Matrix<R> image = d0_image_matrix(left.base);
    const auto coords = solve_linear(image, layout.flatten(k, out.difference));
    if (!coords) return out;

    const auto ders = derivation_basis(left.base.ring);
    Matrix<R> phi(k, left.base.ring.rank, left.base.ring.rank);
    for (size_t i = 0; i < ders.size(); ++i) phi = phi.add(ders[i].scale((*coords)[i]));
    Automorphism<R> witness = identity_automorphism(left.base.ring, m_plus_1);
    witness.coeffs[static_cast<size_t>(m_plus_1 - 1)] = phi;
    if (validate_automorphism(witness).has_value())
        throw InternalError("equivalence witness fails multiplicativity");

    const Deformation<R> conj = conjugate(right, witness);
    for (int i = 1; i <= left.order; ++i)
        if (!conj.coeffs[static_cast<size_t>(i - 1)].equal(left.coeffs[static_cast<size_t>(i - 1)]))
            throw InternalError("equivalence witness fails the conjugation check");
    out.status = ExtensionEquivalence<R>::Status::Witness;
    out.witness = std::move(witness);
    return out;
}

// Seeded valid automorphism: a random derivation extended through the
// Hochschild solver.
template <class R>
Automorphism<R> seeded_automorphism(const FiniteRing<R>& ring, int order, Rng& rng, long lo = -2,
                                    long hi = 2) {
    Automorphism<R> p = identity_automorphism(ring, 1);
    Matrix<R> phi1(ring.base, ring.rank, ring.rank);
    for (const auto& d : derivation_basis(ring))
        phi1 = phi1.add(d.scale(ring.base.from_long(rng.range(lo, hi))));
    p.coeffs[0] = phi1;
    while (p.order < order) {
        auto ext = extend_automorphism(p);
        if (ext.obstructed()) break;
        p = std::move(*ext.extended);
    }
    return p;
}

}  // namespace lnd
