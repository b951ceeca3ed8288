#include "simplexgauss/monkemeyer.hpp"

#include <algorithm>

namespace simplexgauss {

Symbol make_symbol(char letter, long k) {
    if (letter < 'A' || letter > 'H') throw std::domain_error("bad symbol family");
    if (k < 1) throw std::domain_error("symbol index must be >= 1");
    return Symbol{letter - 'A' + 1, k};
}

Symbol symbol_from_exponent(int dim, long a_steps) {
    if (a_steps < 0) throw std::domain_error("negative A-step count");
    long k = a_steps / dim + 1;
    int family = static_cast<int>(dim * k - a_steps);
    return Symbol{family, k};
}

MapSystem::MapSystem(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::domain_error("dimension out of range [1, " + std::to_string(kMaxDim) + "]");
    int n = dim + 1;
    A_ = IMat(n, n);
    B_ = IMat(n, n);
    V_ = IMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A_(i, j) = 0;
            B_(i, j) = 0;
            V_(i, j) = (i == n - 1 || j > i) ? 1 : 0;
        }
    // rows 2..dim of both generators: 1 on the shifted subdiagonal, -1 in
    // column dim; row 1 and row dim+1 differ between A and B
    A_(0, 0) = 1;
    B_(0, dim - 1) = -1;
    B_(0, dim) = 1;
    for (int i = 1; i < dim; ++i) {
        A_(i, i - 1) = 1;
        A_(i, dim - 1) = -1;
        B_(i, i - 1) = 1;
        B_(i, dim - 1) = -1;
    }
    A_(dim, dim - 1) = -1;
    A_(dim, dim) = 1;
    B_(dim, 0) = 1;
}

IMat MapSystem::family_matrix(const Symbol& s) const {
    if (s.k < 1 || s.family < 1 || s.family > dim_)
        throw std::domain_error("symbol " + s.to_string() + " invalid in dimension " +
                                std::to_string(dim_));
    std::lock_guard<std::mutex> g(cache_mu_);
    auto key = std::make_pair(s.family, s.k);
    auto it = fam_cache_.find(key);
    if (it != fam_cache_.end()) return it->second;
    IMat m = imat_mul(B_, imat_pow(A_, farey_exponent(dim_, s)));
    fam_cache_.emplace(key, m);
    return m;
}

IMat MapSystem::family_matrix_inverse(const Symbol& s) const {
    {
        std::lock_guard<std::mutex> g(cache_mu_);
        auto it = fam_inv_cache_.find(std::make_pair(s.family, s.k));
        if (it != fam_inv_cache_.end()) return it->second;
    }
    IMat inv = unimodular_inverse(family_matrix(s));
    std::lock_guard<std::mutex> g(cache_mu_);
    fam_inv_cache_.emplace(std::make_pair(s.family, s.k), inv);
    return inv;
}

IMat MapSystem::piece_simplex(const Symbol& s) const {
    return imat_mul(family_matrix_inverse(s), V_);
}

QVec MapSystem::zero_vertex() const {
    QVec z(dim_ + 1);
    for (int i = 0; i <= dim_; ++i) z[i] = Rational(i == dim_ ? 1 : 0);
    return z;
}

MapSystem make_map_system(int dim) { return MapSystem(dim); }

namespace {

// membership in V up to the open/closed facets we need: 0 <= x_n <= ... <= x_1 <= 1
template <class S>
bool in_base_simplex(const Vec<S>& p) {
    int n = static_cast<int>(p.size()) - 1;
    const S& w = p[n];
    if (sgn(w) <= 0) return false;
    if (sgn(p[n - 1]) < 0) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (sgn(S(p[i] - p[i + 1])) < 0) return false;
    return sgn(S(w - p[0])) >= 0;
}

}  // namespace

template <class S>
std::pair<Vec<S>, Branch> monkemeyer_step(const MapSystem& sys, const Vec<S>& p) {
    Vec<S> c = canonicalize(p);
    if (!in_base_simplex(c)) throw std::domain_error("monkemeyer_step: point outside V");
    int n = sys.dim();
    // branch A iff x_1 + x_n <= 1, homogeneously x1 + xn <= w
    S lhs = c[0] + c[n - 1];
    int cmpv = sgn(S(lhs - c[n]));
    if (cmpv <= 0) return {apply_matrix(sys.generator_a(), c), Branch::A};
    return {apply_matrix(sys.generator_b(), c), Branch::B};
}

template <class S>
Classification classify_piece(const MapSystem& sys, const Vec<S>& p) {
    Vec<S> c = canonicalize(p);
    if (!in_base_simplex(c)) throw std::domain_error("classify_piece: point outside V");
    int n = sys.dim();
    const S& x = c[0];
    const S& w = c[n];
    if (is_zero(x)) throw std::domain_error("classify_piece: zero vertex has no piece");
    Integer kstar = floor_ratio(w, x);
    long kk = kstar.get_si();
    S kx = S(Rational(kstar)) * x;
    bool boundary = is_zero(S(kx - w));      // x = 1/k*
    if (is_zero(S(w - x))) boundary = true;  // x = 1
    if (is_zero(c[n - 1])) boundary = true;  // last coordinate 0
    for (int i = 0; i + 1 < n; ++i)
        if (is_zero(S(c[i] - c[i + 1]))) boundary = true;
    // family: first j in C..B..A order whose slab test fires
    for (int family = n; family >= 2; --family) {
        // family j test: w - x_j < k* x  (x_j = coordinate j-1, 0-based c[j-1])
        S lhs = S(w - c[family - 1]);
        int s = sgn(S(lhs - kx));
        if (s == 0) boundary = true;
        if (s < 0) return {Symbol{family, kk}, boundary};
    }
    return {Symbol{1, kk}, boundary};
}

template <class S>
ReturnStep<S> return_step(const MapSystem& sys, const Vec<S>& p) {
    Vec<S> c = canonicalize(p);
    if (is_zero(c[0])) return {c, std::nullopt, false};
    Classification cl = classify_piece(sys, c);
    Vec<S> q = apply_matrix(sys.family_matrix(cl.symbol), c);
    return {std::move(q), cl.symbol, cl.boundary};
}

template <class S>
ReturnStep<S> return_step_by_iteration(const MapSystem& sys, const Vec<S>& p) {
    Vec<S> c = canonicalize(p);
    if (is_zero(c[0])) return {c, std::nullopt, false};
    long a_steps = 0;
    while (true) {
        auto [next, branch] = monkemeyer_step(sys, c);
        c = std::move(next);
        if (branch == Branch::B) break;
        ++a_steps;
        if (a_steps > 1000000) throw std::runtime_error("first return did not fire");
    }
    return {c, symbol_from_exponent(sys.dim(), a_steps), false};
}

template <class S>
Orbit<S> run_orbit(const MapSystem& sys, const Vec<S>& p, long max_steps, bool record_states) {
    Orbit<S> orbit;
    Vec<S> c = canonicalize(p);
    std::unordered_map<std::string, long> seen;
    if (record_states) orbit.states.push_back(c);
    for (long step = 0; step < max_steps; ++step) {
        auto [it, inserted] = seen.emplace(state_key(c), step);
        if (!inserted) {
            orbit.status = OrbitStatus::Periodic;
            orbit.preperiod = it->second;
            orbit.period = step - it->second;
            // drop the revisited tail symbols beyond one full period
            orbit.symbols.resize(step);
            return orbit;
        }
        if (is_zero(c[0])) {
            orbit.status = OrbitStatus::ReachedZero;
            return orbit;
        }
        ReturnStep<S> rs = return_step(sys, c);
        orbit.symbols.push_back(*rs.symbol);
        orbit.boundary_flags.push_back(rs.boundary);
        c = std::move(rs.point);
        if (record_states) orbit.states.push_back(c);
    }
    orbit.status = OrbitStatus::Ongoing;
    return orbit;
}

IMat approx_matrix(const MapSystem& sys, const std::vector<Symbol>& prefix) {
    IMat acc = imat_identity(sys.dim() + 1);
    for (const Symbol& s : prefix) acc = imat_mul(acc, sys.family_matrix_inverse(s));
    return acc;
}

std::vector<IMat> approx_simplexes(const MapSystem& sys, const std::vector<Symbol>& prefix) {
    if (prefix.empty()) throw std::domain_error("approx_simplexes: empty prefix");
    std::vector<IMat> out;
    out.reserve(prefix.size());
    IMat acc = imat_identity(sys.dim() + 1);
    for (const Symbol& s : prefix) {
        acc = imat_mul(acc, sys.family_matrix_inverse(s));
        IMat simplex = imat_mul(acc, sys.base_simplex());
        if (!is_unimodular(simplex))
            throw std::runtime_error("approximating simplex lost unimodularity");
        out.push_back(std::move(simplex));
    }
    return out;
}

// ---- facet machinery --------------------------------------------------------

std::string to_string(FacetClass c) {
    switch (c) {
        case FacetClass::EdgeA: return "edge-A";
        case FacetClass::FaceAB: return "face-AB";
        case FacetClass::FaceAC: return "face-AC";
        case FacetClass::FaceBC: return "face-BC";
        case FacetClass::FaceFRStart: return "face-FR-start";
        case FacetClass::InteriorConsistent: return "interior-consistent";
    }
    return "?";
}

namespace {

// Fig-8 automaton: at AB the non-A symbol must be B (go to AC); at AC it
// must be C (go back to AB). A-streaks stay put.
bool fig8_accepts(const std::vector<Symbol>& seq, size_t from, bool at_ab) {
    for (size_t i = from; i < seq.size(); ++i) {
        if (seq[i].family == 1) continue;
        if (at_ab) {
            if (seq[i].family != 2) return false;
            at_ab = false;
        } else {
            if (seq[i].family != 3) return false;
            at_ab = true;
        }
    }
    return true;
}

// One entry symbol from BC (B -> AB, C -> AC), then Fig-8.
bool bc_accepts(const std::vector<Symbol>& seq, size_t from) {
    if (from >= seq.size()) return true;
    if (seq[from].family == 2) return fig8_accepts(seq, from + 1, true);
    if (seq[from].family == 3) return fig8_accepts(seq, from + 1, false);
    return false;
}

}  // namespace

FacetClass facet_subshift_check(const std::vector<Symbol>& itinerary) {
    bool all_a = std::all_of(itinerary.begin(), itinerary.end(),
                             [](const Symbol& s) { return s.family == 1; });
    if (all_a) return FacetClass::EdgeA;
    if (fig8_accepts(itinerary, 0, true)) return FacetClass::FaceAB;
    if (fig8_accepts(itinerary, 0, false)) return FacetClass::FaceAC;
    if (bc_accepts(itinerary, 0)) return FacetClass::FaceBC;
    if (itinerary[0].family == 3 && itinerary[0].k == 1 && bc_accepts(itinerary, 1))
        return FacetClass::FaceFRStart;
    return FacetClass::InteriorConsistent;
}

StreakRewrite streak_rewrite(const std::vector<Symbol>& prefix) {
    StreakRewrite out;
    std::vector<long> streak;
    int expect = 0;  // 0: either, 2: expect B, 3: expect C
    for (const Symbol& s : prefix) {
        if (s.family == 1) {
            streak.push_back(s.k);
            continue;
        }
        if (s.family != 2 && s.family != 3)
            throw std::domain_error("streak_rewrite: not a dimension-3 itinerary");
        if (expect != 0 && s.family != expect)
            throw std::domain_error("streak_rewrite: B/C alternation violated at " + s.to_string());
        // convergents p/q = [0; streak], r/s its predecessor (1/0 when empty)
        Integer p = 0, q = 1, r = 1, sdn = 0;
        for (long a : streak) {
            Integer np = Integer(a) * p + r, nq = Integer(a) * q + sdn;
            r = p;
            sdn = q;
            p = np;
            q = nq;
        }
        out.words.push_back(BreveWord{s.family == 2 ? 'B' : 'C', p, q, r, sdn, s.k});
        streak.clear();
        expect = (s.family == 2) ? 3 : 2;
    }
    for (long a : streak) out.trailing_streak.push_back(Symbol{1, a});
    return out;
}

IMat breve_matrix(const BreveWord& w) {
    IMat m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = 0;
    const Integer rp = w.r + Integer(w.n) * w.p;
    const Integer sq = w.s + Integer(w.n) * w.q;
    if (w.kind == 'B') {
        m(0, 0) = w.p;
        m(0, 2) = -w.p;
        m(0, 3) = rp;
        m(1, 2) = -1;
        m(1, 3) = 1;
        m(2, 1) = 1;
        m(2, 2) = -1;
        m(3, 0) = w.q;
        m(3, 2) = -w.q;
        m(3, 3) = sq;
    } else {
        m(0, 0) = w.p;
        m(0, 1) = -w.p;
        m(0, 3) = rp;
        m(1, 1) = -1;
        m(1, 2) = 1;
        m(1, 3) = 1;
        m(2, 1) = -1;
        m(2, 3) = 1;
        m(3, 0) = w.q;
        m(3, 1) = -w.q;
        m(3, 3) = sq;
    }
    return m;
}

IMat breve_matrix_from_product(const MapSystem& sys3, const std::vector<Symbol>& group) {
    if (sys3.dim() != 3) throw std::domain_error("breve words live in dimension 3");
    IMat acc = imat_identity(4);
    for (const Symbol& s : group) acc = imat_mul(acc, sys3.family_matrix_inverse(s));
    return acc;
}

IMat sl2_embedding(int dim, const IMat& m2) {
    if (m2.rows() != 2 || m2.cols() != 2) throw std::domain_error("sl2_embedding: need 2x2");
    int n = dim + 1;
    IMat m = imat_identity(n);
    m(0, 0) = m2(0, 0);
    m(0, n - 1) = m2(0, 1);
    m(n - 1, 0) = m2(1, 0);
    m(n - 1, n - 1) = m2(1, 1);
    return m;
}

template std::pair<Vec<Rational>, Branch> monkemeyer_step<Rational>(const MapSystem&,
                                                                    const Vec<Rational>&);
template std::pair<Vec<NFElement>, Branch> monkemeyer_step<NFElement>(const MapSystem&,
                                                                      const Vec<NFElement>&);
template Classification classify_piece<Rational>(const MapSystem&, const Vec<Rational>&);
template Classification classify_piece<NFElement>(const MapSystem&, const Vec<NFElement>&);
template ReturnStep<Rational> return_step<Rational>(const MapSystem&, const Vec<Rational>&);
template ReturnStep<NFElement> return_step<NFElement>(const MapSystem&, const Vec<NFElement>&);
template ReturnStep<Rational> return_step_by_iteration<Rational>(const MapSystem&,
                                                                 const Vec<Rational>&);
template ReturnStep<NFElement> return_step_by_iteration<NFElement>(const MapSystem&,
                                                                   const Vec<NFElement>&);
template Orbit<Rational> run_orbit<Rational>(const MapSystem&, const Vec<Rational>&, long, bool);
template Orbit<NFElement> run_orbit<NFElement>(const MapSystem&, const Vec<NFElement>&, long,
                                               bool);

}  // namespace simplexgauss
